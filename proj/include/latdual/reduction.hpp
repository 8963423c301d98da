#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "latdual/core.hpp"
#include "latdual/dualize.hpp"

namespace latdual {

enum class ReduceTarget { bipartite, split, cobipartite };

const char* reduce_target_name(ReduceTarget t);

// A transversal-ideal instance rebuilt as a dominating-ideal instance on a
// class-constrained graph.  All three constructions start from the bipartite
// vertex-edge incidence graph of the filter-closed hypergraph plus one helper
// vertex "_v", and differ in which sides get completed into cliques and in
// how the order extends.  Solutions map back to the original ground set; the
// per-target exception rules are part of the artifact.
struct ReductionArtifact {
  ReduceTarget target;
  IDomInstance instance;
  // Index of "_v" in the extended universe.
  std::size_t aux_vertex = 0;
  // Masks over the extended universe: original ground elements and edge
  // vertices respectively.
  Bits ground_mask, edge_mask;
  // Token of the vertex standing for closed edge i (canonical edge order).
  std::vector<std::string> edge_names;
  // Original instance, kept for solution mapping, plus its filter closure.
  ITransInstance original;
  Hypergraph closed;
};

// All constructions require at least one edge (EmptyHypergraph).
//
// Bipartite target: incidence edges only, _v adjacent to the whole ground
// side; order keeps the input relations and puts every ground element below
// every edge vertex.  Ground-plus-_v solutions drop _v; the full ground set
// itself shows up as one extra solution and is filtered by a direct
// minimality test on the original instance.
ReductionArtifact reduce_bipartite(const ITransInstance& inst);
// Split target: ground side completed into a clique, _v adjacent to
// everything; order keeps input relations and puts _v below every edge
// vertex.  The singleton {_v} is the one spurious solution.
ReductionArtifact reduce_split(const ITransInstance& inst);
// Co-bipartite target: both sides completed into cliques, _v adjacent to the
// ground side; order is exactly the input one.  Spurious solutions are the
// two-element pairs taking one vertex from ground-plus-_v and one edge
// vertex.
ReductionArtifact reduce_cobipartite(const ITransInstance& inst);

ReductionArtifact reduce(const ITransInstance& inst, ReduceTarget target);

struct RecoverStats {
  std::size_t dropped_full_ground = 0;
  std::size_t kept_full_ground = 0;
  std::size_t dropped_aux_singleton = 0;
  std::size_t dropped_cross_pairs = 0;
};

// Maps dominating-ideal solutions of the reduced instance back onto the
// original ground set, applying the artifact's exception rules; any solution
// outside the shapes the construction can produce raises
// InconsistentSolutions.
SetFamily recover(const ReductionArtifact& art, const SetFamily& solutions,
                  RecoverStats* stats = nullptr);

// Declarative one-rule-per-line description of the mapping, so external
// dominating-ideal solvers can be composed with `reduce` output.
std::vector<std::string> exception_manifest(const ReductionArtifact& art);

}  // namespace latdual
