#include "latdual/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace latdual {

Graph::Graph(UniversePtr u, std::vector<Bits> adj) : u_(std::move(u)), adj_(std::move(adj)) {}

Graph::Graph(UniversePtr u, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : u_(std::move(u)), adj_(u_->size(), Bits(u_->size())) {
  for (auto [a, b] : edges) {
    if (a >= size() || b >= size())
      fail(ErrorKind::UnknownElement, "edge endpoint out of range");
    if (a == b) fail(ErrorKind::Parse, "loop edge on " + u_->token(a));
    adj_[a].set(b);
    adj_[b].set(a);
  }
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edge_list() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a)
    for (auto b = adj_[a].find_next(a); b != Bits::npos; b = adj_[a].find_next(b))
      out.emplace_back(a, b);
  return out;
}

Bits Graph::closed_neighborhood(std::size_t x) const {
  Bits out = adj_[x];
  out.set(x);
  return out;
}

Bits Graph::closed_neighborhood(const Bits& s) const {
  Bits out = s;
  for (auto x = s.find_first(); x != Bits::npos; x = s.find_next(x)) out |= adj_[x];
  return out;
}

Bits Graph::open_neighborhood(const Bits& s) const { return closed_neighborhood(s) - s; }

bool Graph::dominates(const Bits& d, const Bits& targets) const {
  return targets.is_subset_of(closed_neighborhood(d));
}

Bits Graph::private_neighbors(const Bits& d, std::size_t x) const {
  if (!d.test(x)) fail(ErrorKind::NotInSet, "vertex not in dominating set: " + u_->token(x));
  Bits rest = d;
  rest.reset(x);
  return closed_neighborhood(x) - closed_neighborhood(rest);
}

bool Graph::is_minimal_dominating(const Bits& d, const Bits& targets) const {
  if (!dominates(d, targets)) return false;
  for (auto x = d.find_first(); x != Bits::npos; x = d.find_next(x))
    if (!private_neighbors(d, x).intersects(targets)) return false;
  return true;
}

bool Graph::are_twins(std::size_t a, std::size_t b) const {
  return closed_neighborhood(a) == closed_neighborhood(b);
}

bool Graph::are_false_twins(std::size_t a, std::size_t b) const { return adj_[a] == adj_[b]; }

Graph Graph::remove_edge(std::size_t a, std::size_t b) const {
  auto adj = adj_;
  adj[a].reset(b);
  adj[b].reset(a);
  return Graph(u_, std::move(adj));
}

Graph Graph::induced(const Bits& keep) const {
  std::vector<std::string> toks;
  std::vector<std::size_t> old_idx;
  for (auto x = keep.find_first(); x != Bits::npos; x = keep.find_next(x)) {
    toks.push_back(u_->token(x));
    old_idx.push_back(x);
  }
  auto u = std::make_shared<const Universe>(std::move(toks), true);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < old_idx.size(); ++i)
    for (std::size_t j = i + 1; j < old_idx.size(); ++j)
      if (adjacent(old_idx[i], old_idx[j])) edges.emplace_back(i, j);
  return Graph(std::move(u), edges);
}

Graph Graph::complement() const {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b)
      if (!adjacent(a, b)) edges.emplace_back(a, b);
  return Graph(u_, edges);
}

BipartitionWitness bipartite_witness(const Graph& g) {
  const std::size_t n = g.size();
  BipartitionWitness w;
  w.side_a = Bits(n);
  w.side_b = Bits(n);
  std::vector<int> color(n, -1);
  std::vector<std::size_t> queue;
  for (std::size_t s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      std::size_t x = queue.back();
      queue.pop_back();
      const Bits& nb = g.neighbors(x);
      for (auto y = nb.find_first(); y != Bits::npos; y = nb.find_next(y)) {
        if (color[y] == -1) {
          color[y] = 1 - color[x];
          queue.push_back(y);
        } else if (color[y] == color[x]) {
          return w;
        }
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) (color[x] == 0 ? w.side_a : w.side_b).set(x);
  w.ok = true;
  return w;
}

bool is_bipartite(const Graph& g) { return bipartite_witness(g).ok; }

BipartitionWitness cobipartite_witness(const Graph& g) {
  return bipartite_witness(g.complement());
}

bool is_cobipartite(const Graph& g) { return cobipartite_witness(g).ok; }

bool is_triangle_free(const Graph& g) {
  for (auto [a, b] : g.edge_list())
    if (g.neighbors(a).intersects(g.neighbors(b))) return false;
  return true;
}

SplitWitness split_witness(const Graph& g) {
  const std::size_t n = g.size();
  SplitWitness w;
  w.independent = Bits(n);
  w.clique = Bits(n);
  if (n == 0) {
    w.ok = true;
    return w;
  }
  // Order by degree descending (index ascending on ties); the split equality
  // on the degree sequence decides membership, and the top segment then forms
  // the clique.
  std::vector<std::size_t> by_deg(n);
  std::iota(by_deg.begin(), by_deg.end(), 0);
  std::stable_sort(by_deg.begin(), by_deg.end(), [&](std::size_t a, std::size_t b) {
    return g.degree(a) > g.degree(b);
  });
  std::size_t m = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (g.degree(by_deg[i]) >= i) m = i + 1;
  std::size_t top = 0, rest = 0;
  for (std::size_t i = 0; i < n; ++i)
    (i < m ? top : rest) += g.degree(by_deg[i]);
  if (top != m * (m - 1) + rest) return w;
  Bits clique(n), indep(n);
  for (std::size_t i = 0; i < n; ++i) (i < m ? clique : indep).set(by_deg[i]);
  // The independent side grows by one clique vertex when some clique vertex
  // sees none of it; at most one such vertex exists.
  for (auto c = clique.find_first(); c != Bits::npos; c = clique.find_next(c)) {
    if (!g.neighbors(c).intersects(indep)) {
      clique.reset(c);
      indep.set(c);
      break;
    }
  }
  for (auto a = indep.find_first(); a != Bits::npos; a = indep.find_next(a))
    if (g.neighbors(a).intersects(indep)) return w;
  for (auto a = clique.find_first(); a != Bits::npos; a = clique.find_next(a)) {
    Bits others = clique;
    others.reset(a);
    if (!others.is_subset_of(g.neighbors(a))) return w;
  }
  w.ok = true;
  w.independent = std::move(indep);
  w.clique = std::move(clique);
  return w;
}

bool is_split(const Graph& g) { return split_witness(g).ok; }

bool is_ni_poset(const Graph& g, const Poset& p) {
  if (!g.universe().same_tokens(p.universe()))
    fail(ErrorKind::GroundMismatch, "graph and poset grounds differ");
  const std::size_t n = g.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y && p.less(x, y) &&
          !g.closed_neighborhood(x).is_subset_of(g.closed_neighborhood(y)))
        return false;
  return true;
}

bool is_weak_ni_poset(const Graph& g, const Poset& p) {
  if (!g.universe().same_tokens(p.universe()))
    fail(ErrorKind::GroundMismatch, "graph and poset grounds differ");
  const std::size_t n = g.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y || !p.less(x, y)) continue;
      Bits nx = g.closed_neighborhood(x);
      Bits ny = g.closed_neighborhood(y);
      if (!nx.is_subset_of(ny) && !ny.is_subset_of(nx)) return false;
    }
  return true;
}

SplitDecomposition split_decomposition_min(const Graph& g, const Poset& p) {
  SplitWitness w = split_witness(g);
  if (!w.ok) fail(ErrorKind::NotSplit, "graph is not split");
  if (!is_ni_poset(g, p)) fail(ErrorKind::NotNIPoset, "order is not neighborhood-inclusion");
  Bits indep = w.independent, clique = w.clique;
  Bits minimal = p.min_elements(g.universe().full_set());
  // Swap each non-minimal independent vertex with something below it.  The
  // lower vertex is adjacent to the swapped one and to everything the higher
  // one sees, so both sides stay valid and the set size is unchanged.
  for (;;) {
    Bits bad = indep - minimal;
    auto x = bad.find_first();
    if (x == Bits::npos) break;
    auto y = p.strictly_below(x).find_first();
    indep.reset(x);
    indep.set(y);
    clique.reset(y);
    clique.set(x);
  }
  return SplitDecomposition{std::move(indep), std::move(clique)};
}

Hypergraph neighborhood_hypergraph(const Graph& g) {
  SetFamily edges;
  edges.reserve(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) edges.push_back(g.closed_neighborhood(x));
  return Hypergraph(g.universe_ptr(), minimal_sets(std::move(edges)));
}

IncidenceGraph bipartite_incidence_graph(const Hypergraph& h) {
  const auto& base = h.universe();
  std::vector<std::string> toks = base.tokens();
  std::vector<std::string> edge_names;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    edge_names.push_back("_e" + std::to_string(i + 1));
    toks.push_back(edge_names.back());
  }
  auto u = make_universe(std::move(toks), true);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    std::size_t ei = u->index_of(edge_names[i]);
    const Bits& e = h.edges()[i];
    for (auto x = e.find_first(); x != Bits::npos; x = e.find_next(x))
      edges.emplace_back(u->index_of(base.token(x)), ei);
  }
  IncidenceGraph out{Graph(u, edges), std::move(edge_names), Bits(u->size()), Bits(u->size())};
  for (const auto& t : base.tokens()) out.ground_side.set(u->index_of(t));
  for (const auto& t : out.edge_names) out.edge_side.set(u->index_of(t));
  return out;
}

}  // namespace latdual
