#include "latdual/reduction.hpp"

#include <algorithm>

#include "latdual/graph.hpp"

namespace latdual {

const char* reduce_target_name(ReduceTarget t) {
  switch (t) {
    case ReduceTarget::bipartite: return "bipartite";
    case ReduceTarget::split: return "split";
    case ReduceTarget::cobipartite: return "cobipartite";
  }
  return "?";
}

namespace {

struct Scaffold {
  IncidenceGraph inc;
  UniversePtr u;
  std::size_t aux = 0;
  Hypergraph closed;
  // Input order relations translated into the extended universe.
  std::vector<std::pair<std::size_t, std::size_t>> base_rels;
};

Scaffold build_scaffold(const ITransInstance& inst) {
  if (inst.hyper.edge_count() == 0)
    fail(ErrorKind::EmptyHypergraph, "reduction needs at least one edge");
  Hypergraph closed = filter_closure(inst.hyper, inst.poset);
  IncidenceGraph inc = bipartite_incidence_graph(closed);
  std::vector<std::string> toks = inc.graph.universe().tokens();
  toks.push_back("_v");
  auto u = make_universe(std::move(toks), true);

  auto widen = [&](const Bits& narrow, const Universe& from) {
    Bits wide(u->size());
    for (auto i = narrow.find_first(); i != Bits::npos; i = narrow.find_next(i))
      wide.set(u->index_of(from.token(i)));
    return wide;
  };

  Scaffold s{std::move(inc), u, u->index_of("_v"), std::move(closed), {}};
  const Universe& base = inst.poset.universe();
  for (std::size_t x = 0; x < base.size(); ++x)
    for (std::size_t y = 0; y < base.size(); ++y)
      if (x != y && inst.poset.less(x, y))
        s.base_rels.emplace_back(u->index_of(base.token(x)), u->index_of(base.token(y)));
  s.inc.ground_side = widen(s.inc.ground_side, s.inc.graph.universe());
  s.inc.edge_side = widen(s.inc.edge_side, s.inc.graph.universe());
  return s;
}

std::vector<std::pair<std::size_t, std::size_t>> widen_edges(const Scaffold& s) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const Universe& from = s.inc.graph.universe();
  for (auto [a, b] : s.inc.graph.edge_list())
    edges.emplace_back(s.u->index_of(from.token(a)), s.u->index_of(from.token(b)));
  return edges;
}

ReductionArtifact finish(const ITransInstance& inst, Scaffold s, ReduceTarget target,
                         std::vector<std::pair<std::size_t, std::size_t>> edges,
                         std::vector<std::pair<std::size_t, std::size_t>> rels) {
  Graph g(s.u, edges);
  Poset p = Poset::build(s.u, rels);
  return ReductionArtifact{target,
                           IDomInstance::make(std::move(g), std::move(p)),
                           s.aux,
                           s.inc.ground_side,
                           s.inc.edge_side,
                           s.inc.edge_names,
                           inst,
                           std::move(s.closed)};
}

void add_pairs(std::vector<std::pair<std::size_t, std::size_t>>& out, const Bits& from,
               const Bits& to) {
  for (auto a = from.find_first(); a != Bits::npos; a = from.find_next(a))
    for (auto b = to.find_first(); b != Bits::npos; b = to.find_next(b))
      out.emplace_back(a, b);
}

void add_clique(std::vector<std::pair<std::size_t, std::size_t>>& edges, const Bits& side) {
  for (auto a = side.find_first(); a != Bits::npos; a = side.find_next(a))
    for (auto b = side.find_next(a); b != Bits::npos; b = side.find_next(b))
      edges.emplace_back(a, b);
}

}  // namespace

ReductionArtifact reduce_bipartite(const ITransInstance& inst) {
  Scaffold s = build_scaffold(inst);
  auto edges = widen_edges(s);
  for (auto x = s.inc.ground_side.find_first(); x != Bits::npos;
       x = s.inc.ground_side.find_next(x))
    edges.emplace_back(s.aux, x);
  auto rels = s.base_rels;
  add_pairs(rels, s.inc.ground_side, s.inc.edge_side);
  return finish(inst, std::move(s), ReduceTarget::bipartite, std::move(edges),
                std::move(rels));
}

ReductionArtifact reduce_split(const ITransInstance& inst) {
  Scaffold s = build_scaffold(inst);
  auto edges = widen_edges(s);
  add_clique(edges, s.inc.ground_side);
  for (std::size_t x = 0; x < s.u->size(); ++x)
    if (x != s.aux) edges.emplace_back(s.aux, x);
  auto rels = s.base_rels;
  Bits aux_only(s.u->size());
  aux_only.set(s.aux);
  add_pairs(rels, aux_only, s.inc.edge_side);
  return finish(inst, std::move(s), ReduceTarget::split, std::move(edges), std::move(rels));
}

ReductionArtifact reduce_cobipartite(const ITransInstance& inst) {
  Scaffold s = build_scaffold(inst);
  auto edges = widen_edges(s);
  add_clique(edges, s.inc.ground_side);
  add_clique(edges, s.inc.edge_side);
  for (auto x = s.inc.ground_side.find_first(); x != Bits::npos;
       x = s.inc.ground_side.find_next(x))
    edges.emplace_back(s.aux, x);
  auto rels = s.base_rels;
  return finish(inst, std::move(s), ReduceTarget::cobipartite, std::move(edges),
                std::move(rels));
}

ReductionArtifact reduce(const ITransInstance& inst, ReduceTarget target) {
  switch (target) {
    case ReduceTarget::bipartite: return reduce_bipartite(inst);
    case ReduceTarget::split: return reduce_split(inst);
    case ReduceTarget::cobipartite: return reduce_cobipartite(inst);
  }
  fail(ErrorKind::InvalidParams, "unknown reduction target");
}

SetFamily recover(const ReductionArtifact& art, const SetFamily& solutions,
                  RecoverStats* stats) {
  RecoverStats local;
  const Universe& wide = art.instance.graph.universe();
  const Universe& base = art.original.poset.universe();
  auto narrow = [&](const Bits& s) {
    Bits out(base.size());
    for (auto i = s.find_first(); i != Bits::npos; i = s.find_next(i))
      out.set(base.index_of(wide.token(i)));
    return out;
  };

  SetFamily out;
  for (const auto& sol : solutions) {
    switch (art.target) {
      case ReduceTarget::bipartite: {
        if (sol.test(art.aux_vertex)) {
          Bits body = sol;
          body.reset(art.aux_vertex);
          if (!body.is_subset_of(art.ground_mask) || body == art.ground_mask)
            fail(ErrorKind::InconsistentSolutions,
                 "unexpected helper-vertex solution shape");
          out.push_back(narrow(body));
        } else if (sol == art.ground_mask) {
          // The whole ground side always dominates minimally here; whether it
          // is a real solution is decided on the original instance.
          if (is_minimal_transversal_ideal(art.original.hyper, art.original.poset,
                                           base.full_set())) {
            ++local.kept_full_ground;
            out.push_back(base.full_set());
          } else {
            ++local.dropped_full_ground;
          }
        } else {
          fail(ErrorKind::InconsistentSolutions, "unexpected bipartite solution shape");
        }
        break;
      }
      case ReduceTarget::split: {
        Bits aux_single(wide.size());
        aux_single.set(art.aux_vertex);
        if (sol == aux_single) {
          ++local.dropped_aux_singleton;
        } else if (sol.is_subset_of(art.ground_mask)) {
          out.push_back(narrow(sol));
        } else {
          fail(ErrorKind::InconsistentSolutions, "unexpected split solution shape");
        }
        break;
      }
      case ReduceTarget::cobipartite: {
        bool cross_pair = sol.count() == 2 && sol.intersects(art.edge_mask) &&
                          !sol.is_subset_of(art.edge_mask);
        if (cross_pair) {
          ++local.dropped_cross_pairs;
        } else if (sol.is_subset_of(art.ground_mask)) {
          out.push_back(narrow(sol));
        } else {
          fail(ErrorKind::InconsistentSolutions, "unexpected co-bipartite solution shape");
        }
        break;
      }
    }
  }
  canonicalize_family(out);
  if (stats) *stats = local;
  return out;
}

std::vector<std::string> exception_manifest(const ReductionArtifact& art) {
  const Universe& wide = art.instance.graph.universe();
  std::vector<std::string> lines;
  lines.push_back(std::string("target: ") + reduce_target_name(art.target));
  lines.push_back("aux-vertex: " + wide.token(art.aux_vertex));
  lines.push_back("ground-side: " + wide.format_set(art.ground_mask));
  lines.push_back("edge-side: " + wide.format_set(art.edge_mask));
  switch (art.target) {
    case ReduceTarget::bipartite: {
      lines.push_back("rule: strip aux-vertex from every solution containing it");
      bool full_ok = is_minimal_transversal_ideal(
          art.original.hyper, art.original.poset, art.original.poset.universe().full_set());
      lines.push_back(full_ok
                          ? "rule: keep the full ground-side solution"
                          : "rule: discard the full ground-side solution");
      break;
    }
    case ReduceTarget::split:
      lines.push_back("rule: discard the aux-vertex singleton solution");
      break;
    case ReduceTarget::cobipartite:
      lines.push_back(
          "rule: discard every 2-element solution pairing an edge-side vertex with a "
          "ground-side vertex or the aux-vertex");
      break;
  }
  return lines;
}

}  // namespace latdual
