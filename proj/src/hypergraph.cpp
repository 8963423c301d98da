#include "latdual/hypergraph.hpp"

#include <string>

namespace latdual {

Hypergraph::Hypergraph(UniversePtr u, SetFamily edges)
    : u_(std::move(u)), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.size() != u_->size())
      fail(ErrorKind::GroundMismatch, "edge bitset width does not match ground");
    if (e.none()) fail(ErrorKind::EmptyEdge, "hypergraph edge is empty");
  }
  canonicalize_family(edges_);
}

Bits Hypergraph::incident_edges(std::size_t x) const {
  Bits out(edge_count());
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].test(x)) out.set(i);
  return out;
}

bool Hypergraph::is_sperner() const { return is_incomparable_family(edges_); }

Hypergraph Hypergraph::sperner_min() const {
  return Hypergraph(u_, minimal_sets(edges_));
}

bool Hypergraph::is_transversal(const Bits& s) const {
  for (const auto& e : edges_)
    if (!e.intersects(s)) return false;
  return true;
}

bool Hypergraph::is_minimal_transversal(const Bits& s) const {
  if (!is_transversal(s)) return false;
  for (auto x = s.find_first(); x != Bits::npos; x = s.find_next(x)) {
    Bits t = s;
    t.reset(x);
    if (is_transversal(t)) return false;
  }
  return true;
}

Hypergraph filter_closure(const Hypergraph& h, const Poset& p) {
  if (!h.universe().same_tokens(p.universe()))
    fail(ErrorKind::GroundMismatch, "hypergraph and poset grounds differ");
  SetFamily closed;
  closed.reserve(h.edge_count());
  for (const auto& e : h.edges()) closed.push_back(p.up_closure(e));
  return Hypergraph(h.universe_ptr(), minimal_sets(std::move(closed)));
}

bool is_incident_edge_inclusion(const Hypergraph& h, const Poset& p) {
  if (!h.universe().same_tokens(p.universe()))
    fail(ErrorKind::GroundMismatch, "hypergraph and poset grounds differ");
  const std::size_t n = h.size();
  std::vector<Bits> inc;
  inc.reserve(n);
  for (std::size_t x = 0; x < n; ++x) inc.push_back(h.incident_edges(x));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y && p.less(x, y) && !inc[x].is_subset_of(inc[y])) return false;
  return true;
}

SetFamily transversal_enum(const Hypergraph& h, const TransversalCaps& caps) {
  const std::size_t n = h.size();
  SetFamily family;
  family.push_back(Bits(n));
  for (const auto& e : h.edges()) {
    SetFamily next;
    for (const auto& t : family) {
      if (t.intersects(e)) {
        next.push_back(t);
        continue;
      }
      for (auto x = e.find_first(); x != Bits::npos; x = e.find_next(x)) {
        Bits grown = t;
        grown.set(x);
        next.push_back(std::move(grown));
      }
    }
    if (next.size() > caps.max_family)
      fail(ErrorKind::CapExceeded,
           "transversal family grew past " + std::to_string(caps.max_family));
    family = minimal_sets(std::move(next));
  }
  return family;
}

}  // namespace latdual
