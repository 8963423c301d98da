#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "latdual/core.hpp"
#include "latdual/dualize.hpp"
#include "latdual/graph.hpp"
#include "latdual/hypergraph.hpp"
#include "latdual/poset.hpp"

namespace latdual {

using Rng = std::mt19937_64;

// Engine-only sampling helpers so results do not depend on the standard
// library's distribution implementations.
std::size_t rand_below(Rng& rng, std::size_t n);
bool rand_chance(Rng& rng, double p);

// Zero-padded tokens x01..xN so token order matches numeric order.
std::vector<std::string> default_tokens(std::size_t n, const std::string& prefix = "x");

Poset random_poset(Rng& rng, std::size_t n, double relation_prob);
Hypergraph random_hypergraph(Rng& rng, std::size_t n, std::size_t edges,
                             std::size_t max_edge_size);
ITransInstance random_itrans(Rng& rng, std::size_t n, std::size_t edges,
                             std::size_t max_edge_size, double relation_prob);
DualInstance random_dual(Rng& rng, std::size_t n, std::size_t members,
                         double relation_prob);

// Orders sampled from inclusion-related closed neighborhoods only (ties
// oriented by token), so the result is neighborhood-inclusion by
// construction.
Poset random_ni_poset(Rng& rng, const Graph& g, double relation_prob);

struct SplitGenParams {
  std::size_t clique = 4;
  std::size_t independent = 4;
  // Chance that an independent vertex sees each clique vertex beyond its
  // mandatory first neighbor.
  double cross_prob = 0.3;
  double relation_prob = 0.3;
  // Independent vertices whose neighborhoods are clique prefixes keep the
  // solution family small; the rest attach to one random clique vertex.
  double prefix_fraction = 0.0;
};

IDomInstance random_split_ni(Rng& rng, const SplitGenParams& params);
IDomInstance random_bipartite_ni(Rng& rng, std::size_t left, std::size_t right,
                                 double edge_prob, double relation_prob);
IDomInstance random_cobipartite_ni(Rng& rng, std::size_t left, std::size_t right,
                                   double cross_prob, double relation_prob);

struct TriangleFreeGenParams {
  std::size_t core = 6;       // vertices of the triangle-free core
  std::size_t edge_tries = 9; // random insertions skipped when they close a triangle
  std::size_t pendants = 3;   // degree-one vertices attached to random hosts
  double star_prob = 0.7;     // chance a pendant-owning host becomes a star center
  double orient_up_prob = 0.5;
};

IDomInstance random_trianglefree_weakni(Rng& rng, const TriangleFreeGenParams& params);

}  // namespace latdual
