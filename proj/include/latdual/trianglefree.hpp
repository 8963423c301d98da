#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "latdual/core.hpp"
#include "latdual/dualize.hpp"
#include "latdual/graph.hpp"
#include "latdual/poset.hpp"

namespace latdual {

// Under a weak neighborhood-inclusion order on a triangle-free graph the
// order has height at most two and splits into isolated elements plus
// disjoint stars whose branch elements all have degree one in the graph.
struct Star {
  std::size_t center = 0;
  Bits branches;
  // True when the branches sit below the center in the order.
  bool branches_below = true;
};

struct StarDecomposition {
  // Elements comparable to nothing.
  Bits isolated;
  std::vector<Star> stars;
};

// NotTriangleFree / NotWeakNI on bad inputs; StructureViolation if the
// guaranteed shape fails to materialize (inconsistent input).
StarDecomposition star_decompose(const Graph& g, const Poset& p);

// Star branches are false twins, so all but one contract away; edges between
// distinct star centers are redundant for domination (each endpoint keeps a
// dominated degree-one branch) and are removed.  Solutions transfer back by
// re-expanding branch representatives.
struct ReducedInstance {
  Graph graph;
  Poset poset;
  // All masks/indices below live in the reduced universe.
  Bits isolated;
  std::vector<std::size_t> centers;      // one per star
  std::vector<std::size_t> branch_reps;  // surviving branch, one per star
  std::vector<std::size_t> chain_mins;   // lower end of each center/branch chain
  // Isolated elements not seen by any chain minimum.
  Bits targets;
  std::vector<std::pair<std::size_t, std::size_t>> removed_center_edges;
  // Expansion data, in the original universe.
  UniversePtr original_universe;
  std::vector<Bits> original_branches;
  Bits kept;  // original-universe mask of surviving vertices
};

ReducedInstance build_reduced(const Graph& g, const Poset& p, const StarDecomposition& sd);

// Minimal dominating sets of the target subset, computed as minimal
// transversals of the pruned closed-neighborhood family of the targets.
// An empty target set yields {{}}.
SetFamily minimal_subset_dominators(const Graph& g, const Bits& targets,
                                    const TransversalCaps& caps = {});

// Turns a minimal dominator of the reduced targets into a dominating ideal of
// the reduced instance: add the chain minimum of every star whose branch
// representative is left undominated, then close downward.  NotAValidDStar
// when the input is not a minimal dominator of the targets.
Bits lift_solution(const ReducedInstance& ri, const Bits& dstar);

// Replaces each chosen branch representative by the star's full branch set,
// mapping a reduced solution into the original universe.
Bits expand_solution(const ReducedInstance& ri, const Bits& reduced_sol);

// Full pipeline; output-polynomial overall.
SetFamily enumerate_trianglefree(const Graph& g, const Poset& p,
                                 const TransversalCaps& caps = {});

}  // namespace latdual
