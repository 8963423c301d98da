#include "latdual/generate.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace latdual {

std::size_t rand_below(Rng& rng, std::size_t n) {
  if (n == 0) fail(ErrorKind::InvalidParams, "rand_below(0)");
  // Rejection sampling keeps the draw unbiased and engine-deterministic.
  const std::uint64_t span = n;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  for (;;) {
    std::uint64_t r = rng();
    if (r < limit) return static_cast<std::size_t>(r % span);
  }
}

bool rand_chance(Rng& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

std::vector<std::string> default_tokens(std::size_t n, const std::string& prefix) {
  std::size_t width = std::to_string(n == 0 ? 1 : n).size();
  std::vector<std::string> toks;
  toks.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    std::string digits = std::to_string(i);
    toks.push_back(prefix + std::string(width - digits.size(), '0') + digits);
  }
  return toks;
}

Poset random_poset(Rng& rng, std::size_t n, double relation_prob) {
  if (n == 0) fail(ErrorKind::InvalidParams, "poset generation needs elements");
  auto u = make_universe(default_tokens(n));
  std::vector<std::pair<std::size_t, std::size_t>> rels;
  // Relations only point up a random permutation, so the closure is acyclic.
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rand_below(rng, i)]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rand_chance(rng, relation_prob)) rels.emplace_back(perm[i], perm[j]);
  return Poset::build(std::move(u), rels);
}

Hypergraph random_hypergraph(Rng& rng, std::size_t n, std::size_t edges,
                             std::size_t max_edge_size) {
  if (n == 0 || max_edge_size == 0 || edges == 0)
    fail(ErrorKind::InvalidParams, "hypergraph generation needs vertices and edges");
  auto u = make_universe(default_tokens(n));
  SetFamily fam;
  for (std::size_t i = 0; i < edges; ++i) {
    std::size_t sz = 1 + rand_below(rng, std::min(max_edge_size, n));
    Bits e(n);
    while (e.count() < sz) e.set(rand_below(rng, n));
    fam.push_back(std::move(e));
  }
  return Hypergraph(std::move(u), std::move(fam));
}

ITransInstance random_itrans(Rng& rng, std::size_t n, std::size_t edges,
                             std::size_t max_edge_size, double relation_prob) {
  Hypergraph h = random_hypergraph(rng, n, edges, max_edge_size);
  Poset p = random_poset(rng, n, relation_prob);
  return ITransInstance::make(std::move(h), std::move(p));
}

DualInstance random_dual(Rng& rng, std::size_t n, std::size_t members,
                         double relation_prob) {
  Poset p = random_poset(rng, n, relation_prob);
  SetFamily sampled;
  for (std::size_t i = 0; i < members; ++i) {
    Bits s(n);
    for (std::size_t x = 0; x < n; ++x)
      if (rand_chance(rng, 0.5)) s.set(x);
    sampled.push_back(p.down_closure(s));
  }
  return DualInstance::make(std::move(p), maximal_sets(std::move(sampled)));
}

Poset random_ni_poset(Rng& rng, const Graph& g, double relation_prob) {
  const std::size_t n = g.size();
  std::vector<std::pair<std::size_t, std::size_t>> rels;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      Bits nx = g.closed_neighborhood(x);
      Bits ny = g.closed_neighborhood(y);
      bool candidate = nx.is_proper_subset_of(ny) || (nx == ny && x < y);
      if (candidate && rand_chance(rng, relation_prob)) rels.emplace_back(x, y);
    }
  // Candidate edges follow neighborhood inclusion, which is transitive, so
  // the closure stays within it.
  return Poset::build(g.universe_ptr(), rels);
}

IDomInstance random_split_ni(Rng& rng, const SplitGenParams& params) {
  std::size_t nc = params.clique, ns = params.independent;
  if (nc == 0 || ns == 0) fail(ErrorKind::InvalidParams, "split generation needs both sides");
  auto ctoks = default_tokens(nc, "c");
  auto stoks = default_tokens(ns, "s");
  std::vector<std::string> toks = ctoks;
  toks.insert(toks.end(), stoks.begin(), stoks.end());
  auto u = make_universe(std::move(toks));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> cidx, sidx;
  for (const auto& t : ctoks) cidx.push_back(u->index_of(t));
  for (const auto& t : stoks) sidx.push_back(u->index_of(t));
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = i + 1; j < nc; ++j) edges.emplace_back(cidx[i], cidx[j]);
  for (std::size_t j = 0; j < ns; ++j) {
    if (rand_chance(rng, params.prefix_fraction)) {
      std::size_t len = 1 + rand_below(rng, nc);
      for (std::size_t i = 0; i < len; ++i) edges.emplace_back(sidx[j], cidx[i]);
      continue;
    }
    std::size_t first = rand_below(rng, nc);
    edges.emplace_back(sidx[j], cidx[first]);
    for (std::size_t i = 0; i < nc; ++i)
      if (i != first && rand_chance(rng, params.cross_prob))
        edges.emplace_back(sidx[j], cidx[i]);
  }
  Graph g(u, edges);
  Poset p = random_ni_poset(rng, g, params.relation_prob);
  return IDomInstance::make(std::move(g), std::move(p));
}

IDomInstance random_bipartite_ni(Rng& rng, std::size_t left, std::size_t right,
                                 double edge_prob, double relation_prob) {
  auto ltoks = default_tokens(left, "a");
  auto rtoks = default_tokens(right, "b");
  std::vector<std::string> toks = ltoks;
  toks.insert(toks.end(), rtoks.begin(), rtoks.end());
  auto u = make_universe(std::move(toks));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& lt : ltoks)
    for (const auto& rt : rtoks)
      if (rand_chance(rng, edge_prob)) edges.emplace_back(u->index_of(lt), u->index_of(rt));
  Graph g(u, edges);
  Poset p = random_ni_poset(rng, g, relation_prob);
  return IDomInstance::make(std::move(g), std::move(p));
}

IDomInstance random_cobipartite_ni(Rng& rng, std::size_t left, std::size_t right,
                                   double cross_prob, double relation_prob) {
  auto ltoks = default_tokens(left, "a");
  auto rtoks = default_tokens(right, "b");
  std::vector<std::string> toks = ltoks;
  toks.insert(toks.end(), rtoks.begin(), rtoks.end());
  auto u = make_universe(std::move(toks));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  auto add_clique_toks = [&](const std::vector<std::string>& side) {
    for (std::size_t i = 0; i < side.size(); ++i)
      for (std::size_t j = i + 1; j < side.size(); ++j)
        edges.emplace_back(u->index_of(side[i]), u->index_of(side[j]));
  };
  add_clique_toks(ltoks);
  add_clique_toks(rtoks);
  for (const auto& lt : ltoks)
    for (const auto& rt : rtoks)
      if (rand_chance(rng, cross_prob)) edges.emplace_back(u->index_of(lt), u->index_of(rt));
  Graph g(u, edges);
  Poset p = random_ni_poset(rng, g, relation_prob);
  return IDomInstance::make(std::move(g), std::move(p));
}

IDomInstance random_trianglefree_weakni(Rng& rng, const TriangleFreeGenParams& params) {
  if (params.core == 0)
    fail(ErrorKind::InvalidParams, "triangle-free generation needs core vertices");
  std::size_t total = params.core + params.pendants;
  auto u = make_universe(default_tokens(total));
  std::vector<Bits> adj(total, Bits(total));
  auto link = [&](std::size_t a, std::size_t b) {
    adj[a].set(b);
    adj[b].set(a);
  };
  for (std::size_t t = 0; t < params.edge_tries; ++t) {
    if (params.core < 2) break;
    std::size_t a = rand_below(rng, params.core);
    std::size_t b = rand_below(rng, params.core);
    if (a == b || adj[a].test(b)) continue;
    if (adj[a].intersects(adj[b])) continue;  // would close a triangle
    link(a, b);
  }
  std::vector<std::size_t> host(params.pendants);
  for (std::size_t i = 0; i < params.pendants; ++i) {
    host[i] = params.core == 0 ? 0 : rand_below(rng, params.core);
    link(params.core + i, host[i]);
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < total; ++a)
    for (auto b = adj[a].find_next(a); b != Bits::npos; b = adj[a].find_next(b))
      edges.emplace_back(a, b);
  Graph g(u, edges);

  // Stars built only from degree-one neighbors keep the order weakly
  // neighborhood-inclusion no matter the orientation: a pendant's closed
  // neighborhood is inside its host's.
  std::vector<std::pair<std::size_t, std::size_t>> rels;
  Bits used(total);
  for (std::size_t c = 0; c < total; ++c) {
    if (used.test(c)) continue;
    std::vector<std::size_t> pend;
    const Bits& nb = g.neighbors(c);
    for (auto b = nb.find_first(); b != Bits::npos; b = nb.find_next(b))
      if (g.degree(b) == 1 && !used.test(b) && b != c) pend.push_back(b);
    if (pend.empty() || !rand_chance(rng, params.star_prob)) continue;
    std::size_t count = 1 + rand_below(rng, pend.size());
    bool up = rand_chance(rng, params.orient_up_prob);
    used.set(c);
    for (std::size_t i = 0; i < count; ++i) {
      used.set(pend[i]);
      if (up) rels.emplace_back(c, pend[i]);
      else rels.emplace_back(pend[i], c);
    }
  }
  Poset p = Poset::build(u, rels);
  return IDomInstance::make(std::move(g), std::move(p));
}

}  // namespace latdual
