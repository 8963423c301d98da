#include "latdual/split_solver.hpp"

#include <vector>

namespace latdual {

SplitContext SplitContext::make(Graph graph, Poset poset) {
  SplitDecomposition dec = split_decomposition_min(graph, poset);
  return SplitContext{std::move(graph), std::move(poset), std::move(dec)};
}

Bits complete_from_clique_part(const SplitContext& ctx, const Bits& a) {
  if (!a.is_subset_of(ctx.dec.clique))
    fail(ErrorKind::NotInClique, "clique part contains non-clique vertices");
  return a | (ctx.dec.independent - ctx.graph.open_neighborhood(a));
}

bool is_clique_trace(const SplitContext& ctx, const Bits& a) {
  if (!a.is_subset_of(ctx.dec.clique))
    fail(ErrorKind::NotInClique, "clique part contains non-clique vertices");
  for (auto x = a.find_first(); x != Bits::npos; x = a.find_next(x))
    if (!ctx.graph.private_neighbors(a, x).intersects(ctx.dec.independent)) return false;
  Bits ideal = ctx.poset.down_closure(complete_from_clique_part(ctx, a));
  return is_minimal_dominating_ideal(ctx.graph, ctx.poset, ideal);
}

namespace {

struct Walk {
  const SplitContext& ctx;
  const std::function<void(const Bits&)>& emit;
  SplitEnumStats stats;
  std::size_t since_last = 0;
  std::vector<std::size_t> clique_order;

  void record_emission(const Bits& a) {
    ++stats.emissions;
    stats.gap_total += since_last;
    if (since_last > stats.max_gap) stats.max_gap = since_last;
    since_last = 0;
    emit(ctx.poset.down_closure(complete_from_clique_part(ctx, a)));
  }

  bool test(const Bits& a) {
    ++stats.membership_tests;
    ++since_last;
    return is_clique_trace(ctx, a);
  }

  void descend(Bits& a, std::size_t next_pos) {
    record_emission(a);
    for (std::size_t i = next_pos; i < clique_order.size(); ++i) {
      a.set(clique_order[i]);
      bool ok = test(a);
      if (ok) descend(a, i + 1);
      a.reset(clique_order[i]);
    }
  }
};

}  // namespace

void enumerate_split(const SplitContext& ctx, const std::function<void(const Bits&)>& emit,
                     SplitEnumStats* stats) {
  // Revalidate: contexts are cheap to corrupt by hand.
  SplitWitness w = split_witness(ctx.graph);
  if (!w.ok || !is_ni_poset(ctx.graph, ctx.poset) ||
      !ctx.dec.independent.is_subset_of(
          ctx.poset.min_elements(ctx.graph.universe().full_set())) ||
      ctx.dec.independent.count() != w.independent.count() ||
      (ctx.dec.independent & ctx.dec.clique).any() ||
      (ctx.dec.independent | ctx.dec.clique) != ctx.graph.universe().full_set())
    fail(ErrorKind::ContextInvalid, "split context fails validation");
  for (auto x = ctx.dec.independent.find_first(); x != Bits::npos;
       x = ctx.dec.independent.find_next(x))
    if (ctx.graph.neighbors(x).intersects(ctx.dec.independent))
      fail(ErrorKind::ContextInvalid, "independent side has an internal edge");
  for (auto x = ctx.dec.clique.find_first(); x != Bits::npos;
       x = ctx.dec.clique.find_next(x))
    if ((ctx.graph.neighbors(x) & ctx.dec.clique).count() != ctx.dec.clique.count() - 1)
      fail(ErrorKind::ContextInvalid, "clique side is not complete");

  Walk walk{ctx, emit, {}, 0, set_indices(ctx.dec.clique)};
  Bits a(ctx.graph.size());
  // The empty clique part always passes: the completed set is the whole
  // independent side, whose members are their own private neighbors.
  walk.descend(a, 0);
  if (stats) *stats = walk.stats;
}

SetFamily enumerate_split(const SplitContext& ctx, SplitEnumStats* stats) {
  SetFamily out;
  enumerate_split(ctx, [&](const Bits& s) { out.push_back(s); }, stats);
  canonicalize_family(out);
  return out;
}

}  // namespace latdual
