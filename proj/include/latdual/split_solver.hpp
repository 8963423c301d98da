#pragma once

#include <cstddef>
#include <functional>

#include "latdual/core.hpp"
#include "latdual/dualize.hpp"
#include "latdual/graph.hpp"
#include "latdual/poset.hpp"

namespace latdual {

// Solver state for dominating-ideal enumeration on a split graph under a
// neighborhood-inclusion order.  Every solution is the down-closure of a
// minimal dominating set whose independent part is forced by its clique part,
// so solutions are indexed by clique subsets, and those subsets form an
// independence system walked depth-first.
struct SplitContext {
  Graph graph;
  Poset poset;
  SplitDecomposition dec;

  // NotSplit / NotNIPoset; the decomposition keeps the independent side
  // maximum-size and within the minimal poset elements.
  static SplitContext make(Graph graph, Poset poset);
};

// The unique minimal dominating set candidate whose clique part is a:
// a plus the independent vertices a does not see.  NotInClique when a leaves
// the clique side.
Bits complete_from_clique_part(const SplitContext& ctx, const Bits& a);

// Membership test of the independence system: every member of a keeps a
// private neighbor on the independent side, and the completed candidate's
// down-closure is a minimal dominating ideal.
bool is_clique_trace(const SplitContext& ctx, const Bits& a);

struct SplitEnumStats {
  std::size_t emissions = 0;
  std::size_t membership_tests = 0;
  // Membership tests between consecutive emissions (the first gap counts
  // from the start).  The walk guarantees max_gap <= 2*|clique| + 1.
  std::size_t max_gap = 0;
  std::size_t gap_total = 0;

  double mean_gap() const {
    return emissions == 0 ? 0.0 : static_cast<double>(gap_total) / emissions;
  }
};

// Depth-first enumeration emitting the completed ideal at every accepted
// clique subset; extensions use increasing vertex order only.  ContextInvalid
// when the context does not satisfy its own invariants.
void enumerate_split(const SplitContext& ctx, const std::function<void(const Bits&)>& emit,
                     SplitEnumStats* stats = nullptr);
SetFamily enumerate_split(const SplitContext& ctx, SplitEnumStats* stats = nullptr);

}  // namespace latdual
