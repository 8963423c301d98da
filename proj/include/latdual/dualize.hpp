#pragma once

#include <cstddef>

#include "latdual/core.hpp"
#include "latdual/graph.hpp"
#include "latdual/hypergraph.hpp"
#include "latdual/poset.hpp"

namespace latdual {

// Dual enumeration instance: a poset coding the lattice of its ideals, plus
// an antichain of ideals ("upper" border).  The answer is the family of
// inclusion-minimal ideals not contained in any upper member.
struct DualInstance {
  Poset poset;
  SetFamily upper;

  // Validates that every member is an ideal and the family is pairwise
  // inclusion-incomparable (NotIdealFamily).
  static DualInstance make(Poset poset, SetFamily upper);
};

// Minimal transversal-ideal instance over a shared ground set.
struct ITransInstance {
  Hypergraph hyper;
  Poset poset;

  static ITransInstance make(Hypergraph hyper, Poset poset);  // GroundMismatch
};

// Minimal dominating-ideal instance over a shared ground set.
struct IDomInstance {
  Graph graph;
  Poset poset;

  static IDomInstance make(Graph graph, Poset poset);  // GroundMismatch
};

// One minimal solution, greedily: start from the whole ground set and strip
// maximal elements in reverse token order while the set still escapes every
// upper member; the scan restarts after each removal.  NoSolution exactly
// when the upper family is {ground}.
Bits first_solution(const DualInstance& inst);

// Reference solvers: enumerate all ideals, filter, minimize.
SetFamily dual_enum_oracle(const DualInstance& inst, std::size_t cap = kDefaultOracleCap);
SetFamily itrans_enum_oracle(const ITransInstance& inst, std::size_t cap = kDefaultOracleCap);
SetFamily idom_enum_oracle(const IDomInstance& inst, std::size_t cap = kDefaultOracleCap);

// Compares a candidate family against the oracle answer; the candidate must
// itself be an antichain of ideals (NotIdealFamily).
bool check_dual(const DualInstance& inst, const SetFamily& lower,
                std::size_t cap = kDefaultOracleCap);

// Ideal-lattice solver that works through transversals: down-closures of the
// minimal transversals of the filter-closed hypergraph, minimized.
SetFamily itrans_enum_generic(const ITransInstance& inst, const TransversalCaps& caps = {});
// Dominating-ideal solving is transversal-ideal solving on the minimal
// closed-neighborhood hypergraph.
SetFamily idom_enum_generic(const IDomInstance& inst, const TransversalCaps& caps = {});
// Dual enumeration via complements: upper members become hyperedges.
SetFamily dual_enum_generic(const DualInstance& inst, const TransversalCaps& caps = {});

// The two instance translations.  Complementing an upper antichain of ideals
// yields a hypergraph whose transversal-ideals are the dual family, and back.
ITransInstance dual_to_itrans(const DualInstance& inst);  // EmptyEdge when upper = {ground}
DualInstance itrans_to_dual(const ITransInstance& inst);

bool is_minimal_transversal_ideal(const Hypergraph& h, const Poset& p, const Bits& s);
bool is_minimal_dominating_ideal(const Graph& g, const Poset& p, const Bits& s);

}  // namespace latdual
