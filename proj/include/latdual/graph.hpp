#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "latdual/core.hpp"
#include "latdual/hypergraph.hpp"
#include "latdual/poset.hpp"

namespace latdual {

// Finite simple graph over a Universe (no loops, undirected).
class Graph {
 public:
  Graph(UniversePtr u, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  const Universe& universe() const { return *u_; }
  UniversePtr universe_ptr() const { return u_; }
  std::size_t size() const { return u_->size(); }
  std::size_t edge_count() const;
  std::vector<std::pair<std::size_t, std::size_t>> edge_list() const;

  bool adjacent(std::size_t a, std::size_t b) const { return adj_[a].test(b); }
  const Bits& neighbors(std::size_t x) const { return adj_[x]; }
  std::size_t degree(std::size_t x) const { return adj_[x].count(); }
  Bits closed_neighborhood(std::size_t x) const;
  Bits closed_neighborhood(const Bits& s) const;
  // N(S) = N[S] \ S.
  Bits open_neighborhood(const Bits& s) const;

  bool dominates(const Bits& d, const Bits& targets) const;
  // Targets of x no other member of d reaches; x must belong to d (NotInSet).
  Bits private_neighbors(const Bits& d, std::size_t x) const;
  // d dominates targets and every member keeps a private neighbor among them.
  bool is_minimal_dominating(const Bits& d, const Bits& targets) const;

  bool are_twins(std::size_t a, std::size_t b) const;        // N[a] == N[b]
  bool are_false_twins(std::size_t a, std::size_t b) const;  // N(a) == N(b)

  Graph remove_edge(std::size_t a, std::size_t b) const;
  Graph induced(const Bits& keep) const;
  Graph complement() const;

 private:
  Graph(UniversePtr u, std::vector<Bits> adj);

  UniversePtr u_;
  std::vector<Bits> adj_;
};

struct BipartitionWitness {
  bool ok = false;
  Bits side_a, side_b;
};

struct SplitWitness {
  bool ok = false;
  Bits independent, clique;
};

BipartitionWitness bipartite_witness(const Graph& g);
bool is_bipartite(const Graph& g);
// Complement bipartition, i.e. two cliques covering the graph.
BipartitionWitness cobipartite_witness(const Graph& g);
bool is_cobipartite(const Graph& g);
bool is_triangle_free(const Graph& g);
// Degree-sequence recognition; the witness independent set has maximum size.
SplitWitness split_witness(const Graph& g);
bool is_split(const Graph& g);

// x < y in p always implies N[x] subset of N[y] (neighborhood-inclusion order).
bool is_ni_poset(const Graph& g, const Poset& p);
// x < y implies the closed neighborhoods are inclusion-comparable either way.
bool is_weak_ni_poset(const Graph& g, const Poset& p);

struct SplitDecomposition {
  Bits independent, clique;
};

// Split partition whose independent side has maximum size and consists of
// minimal poset elements only; requires a neighborhood-inclusion order.
// Comparable vertices are adjacent under such an order, so a non-minimal
// independent vertex can always be swapped with a smaller clique vertex.
SplitDecomposition split_decomposition_min(const Graph& g, const Poset& p);

// Inclusion-minimal closed neighborhoods; minimal dominating sets of g are
// exactly the minimal transversals of this hypergraph.
Hypergraph neighborhood_hypergraph(const Graph& g);

struct IncidenceGraph {
  Graph graph;
  // Token of the vertex standing for edge i (canonical edge order).
  std::vector<std::string> edge_names;
  // Masks over the extended universe.
  Bits ground_side, edge_side;
};

// Bipartite vertex-edge incidence graph; edge vertices get reserved "_e<i>"
// tokens numbered by canonical edge order, 1-based.
IncidenceGraph bipartite_incidence_graph(const Hypergraph& h);

}  // namespace latdual
