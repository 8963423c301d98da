#pragma once

#include <cstddef>
#include <vector>

#include "latdual/core.hpp"
#include "latdual/poset.hpp"

namespace latdual {

// Edge list over a Universe; edges are non-empty, duplicates collapse at
// construction and edges are kept in canonical seq_less order (their position
// there is the canonical edge index).
class Hypergraph {
 public:
  Hypergraph(UniversePtr u, SetFamily edges);

  const Universe& universe() const { return *u_; }
  UniversePtr universe_ptr() const { return u_; }
  std::size_t size() const { return u_->size(); }
  const SetFamily& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  // Edge indices incident to x, as a bitset over edge positions.
  Bits incident_edges(std::size_t x) const;

  bool is_sperner() const;
  // Inclusion-minimal edges only.
  Hypergraph sperner_min() const;

  bool is_transversal(const Bits& s) const;
  bool is_minimal_transversal(const Bits& s) const;

 private:
  UniversePtr u_;
  SetFamily edges_;
};

// Replaces every edge by its up-closure in p, then prunes to the
// inclusion-minimal ones.  An ideal meets an edge iff it meets the closed
// edge, so transversal-ideals are unchanged.
Hypergraph filter_closure(const Hypergraph& h, const Poset& p);

// True when x <= y always implies that every edge through x also passes
// through y.  Filter-closed hypergraphs have this property.
bool is_incident_edge_inclusion(const Hypergraph& h, const Poset& p);

// All inclusion-minimal transversals, by folding edges one at a time into a
// partial transversal family with interleaved minimization.  A hypergraph
// with no edges yields {{}}.
SetFamily transversal_enum(const Hypergraph& h, const TransversalCaps& caps = {});

}  // namespace latdual
