#include "latdual/dualize.hpp"

#include <algorithm>

namespace latdual {

namespace {

bool escapes_all(const Bits& s, const SetFamily& upper) {
  for (const auto& b : upper)
    if (s.is_subset_of(b)) return false;
  return true;
}

}  // namespace

DualInstance DualInstance::make(Poset poset, SetFamily upper) {
  canonicalize_family(upper);
  for (const auto& b : upper) {
    if (b.size() != poset.size())
      fail(ErrorKind::GroundMismatch, "upper member width does not match ground");
    if (!poset.is_ideal(b)) fail(ErrorKind::NotIdealFamily, "upper member is not an ideal");
  }
  if (!is_incomparable_family(upper))
    fail(ErrorKind::NotIdealFamily, "upper family members are inclusion-comparable");
  return DualInstance{std::move(poset), std::move(upper)};
}

ITransInstance ITransInstance::make(Hypergraph hyper, Poset poset) {
  if (!hyper.universe().same_tokens(poset.universe()))
    fail(ErrorKind::GroundMismatch, "hypergraph and poset grounds differ");
  return ITransInstance{std::move(hyper), std::move(poset)};
}

IDomInstance IDomInstance::make(Graph graph, Poset poset) {
  if (!graph.universe().same_tokens(poset.universe()))
    fail(ErrorKind::GroundMismatch, "graph and poset grounds differ");
  return IDomInstance{std::move(graph), std::move(poset)};
}

Bits first_solution(const DualInstance& inst) {
  const Poset& p = inst.poset;
  Bits current = p.universe().full_set();
  if (!escapes_all(current, inst.upper))
    fail(ErrorKind::NoSolution, "upper family covers the whole ground set");
  for (bool changed = true; changed;) {
    changed = false;
    auto maxima = set_indices(p.max_elements(current));
    // Reverse token order == reverse index order.
    std::reverse(maxima.begin(), maxima.end());
    for (std::size_t m : maxima) {
      Bits candidate = current;
      candidate.reset(m);
      if (escapes_all(candidate, inst.upper)) {
        current = std::move(candidate);
        changed = true;
        break;
      }
    }
  }
  return current;
}

SetFamily dual_enum_oracle(const DualInstance& inst, std::size_t cap) {
  SetFamily hits;
  inst.poset.for_each_ideal(
      [&](const Bits& ideal) {
        if (escapes_all(ideal, inst.upper)) hits.push_back(ideal);
      },
      cap);
  return minimal_sets(std::move(hits));
}

SetFamily itrans_enum_oracle(const ITransInstance& inst, std::size_t cap) {
  SetFamily hits;
  inst.poset.for_each_ideal(
      [&](const Bits& ideal) {
        if (inst.hyper.is_transversal(ideal)) hits.push_back(ideal);
      },
      cap);
  return minimal_sets(std::move(hits));
}

SetFamily idom_enum_oracle(const IDomInstance& inst, std::size_t cap) {
  Bits everything = inst.graph.universe().full_set();
  SetFamily hits;
  inst.poset.for_each_ideal(
      [&](const Bits& ideal) {
        if (inst.graph.dominates(ideal, everything)) hits.push_back(ideal);
      },
      cap);
  return minimal_sets(std::move(hits));
}

bool check_dual(const DualInstance& inst, const SetFamily& lower, std::size_t cap) {
  SetFamily candidate = lower;
  canonicalize_family(candidate);
  for (const auto& s : candidate) {
    if (s.size() != inst.poset.size())
      fail(ErrorKind::GroundMismatch, "candidate member width does not match ground");
    if (!inst.poset.is_ideal(s))
      fail(ErrorKind::NotIdealFamily, "candidate member is not an ideal");
  }
  if (!is_incomparable_family(candidate))
    fail(ErrorKind::NotIdealFamily, "candidate family members are inclusion-comparable");
  return candidate == dual_enum_oracle(inst, cap);
}

SetFamily itrans_enum_generic(const ITransInstance& inst, const TransversalCaps& caps) {
  Hypergraph closed = filter_closure(inst.hyper, inst.poset);
  SetFamily lifted;
  for (const auto& t : transversal_enum(closed, caps))
    lifted.push_back(inst.poset.down_closure(t));
  // Every down-closed transversal of the closed hypergraph is a
  // transversal-ideal, and each minimal transversal-ideal is the down-closure
  // of any minimal transversal it contains, so minimizing is exact.
  return minimal_sets(std::move(lifted));
}

SetFamily idom_enum_generic(const IDomInstance& inst, const TransversalCaps& caps) {
  return itrans_enum_generic(
      ITransInstance::make(neighborhood_hypergraph(inst.graph), inst.poset), caps);
}

SetFamily dual_enum_generic(const DualInstance& inst, const TransversalCaps& caps) {
  Bits full = inst.poset.universe().full_set();
  for (const auto& b : inst.upper)
    if (b == full) return {};
  if (inst.upper.empty()) return {inst.poset.universe().empty_set()};
  return itrans_enum_generic(dual_to_itrans(inst), caps);
}

ITransInstance dual_to_itrans(const DualInstance& inst) {
  SetFamily edges;
  for (const auto& b : inst.upper) {
    Bits e = ~b;
    if (e.none())
      fail(ErrorKind::EmptyEdge, "upper member equals the ground set");
    edges.push_back(std::move(e));
  }
  return ITransInstance::make(Hypergraph(inst.poset.universe_ptr(), std::move(edges)),
                              inst.poset);
}

DualInstance itrans_to_dual(const ITransInstance& inst) {
  Hypergraph closed = filter_closure(inst.hyper, inst.poset);
  SetFamily upper;
  for (const auto& e : closed.edges()) upper.push_back(~e);
  return DualInstance::make(inst.poset, std::move(upper));
}

bool is_minimal_transversal_ideal(const Hypergraph& h, const Poset& p, const Bits& s) {
  if (!p.is_ideal(s) || !h.is_transversal(s)) return false;
  // Every proper sub-ideal sits inside s minus one of its maximal elements,
  // so checking those suffices.
  Bits maxima = p.max_elements(s);
  for (auto m = maxima.find_first(); m != Bits::npos; m = maxima.find_next(m)) {
    Bits t = s;
    t.reset(m);
    if (h.is_transversal(t)) return false;
  }
  return true;
}

bool is_minimal_dominating_ideal(const Graph& g, const Poset& p, const Bits& s) {
  Bits everything = g.universe().full_set();
  if (!p.is_ideal(s) || !g.dominates(s, everything)) return false;
  Bits maxima = p.max_elements(s);
  for (auto m = maxima.find_first(); m != Bits::npos; m = maxima.find_next(m))
    if (!g.private_neighbors(s, m).any()) return false;
  return true;
}

}  // namespace latdual
