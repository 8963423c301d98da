#pragma once

// Exhaustive reference computations for tests.  Everything here walks all 2^n
// subsets and uses only element-level accessors (less, adjacent), so results
// are independent of the library's family-level algorithms.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "latdual/core.hpp"
#include "latdual/graph.hpp"
#include "latdual/hypergraph.hpp"
#include "latdual/poset.hpp"

namespace brute {

using latdual::Bits;
using latdual::Graph;
using latdual::Hypergraph;
using latdual::Poset;
using latdual::SetFamily;

inline Bits from_mask(std::uint64_t mask, std::size_t n) {
  Bits b(n);
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1) b.set(i);
  return b;
}

inline std::vector<Bits> all_subsets(std::size_t n) {
  std::vector<Bits> out;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask)
    out.push_back(from_mask(mask, n));
  return out;
}

inline bool is_ideal(const Poset& p, const Bits& s) {
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (s.test(y) && p.less(x, y) && !s.test(x)) return false;
  return true;
}

inline std::vector<Bits> all_ideals(const Poset& p) {
  std::vector<Bits> out;
  for (const Bits& s : all_subsets(p.size()))
    if (is_ideal(p, s)) out.push_back(s);
  return out;
}

inline bool is_transversal(const Hypergraph& h, const Bits& s) {
  for (const Bits& e : h.edges())
    if (!e.intersects(s)) return false;
  return true;
}

inline bool dominates(const Graph& g, const Bits& s, const Bits& targets) {
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (!targets.test(x)) continue;
    bool hit = s.test(x);
    for (std::size_t y = 0; y < g.size() && !hit; ++y)
      if (s.test(y) && g.adjacent(x, y)) hit = true;
    if (!hit) return false;
  }
  return true;
}

inline SetFamily minimize(std::vector<Bits> fam) {
  std::sort(fam.begin(), fam.end(),
            [](const Bits& a, const Bits& b) { return a.count() < b.count(); });
  SetFamily out;
  for (const Bits& s : fam) {
    bool covered = false;
    for (const Bits& kept : out)
      if (kept.is_subset_of(s)) { covered = true; break; }
    if (!covered) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), latdual::seq_less);
  return out;
}

inline SetFamily transversals(const Hypergraph& h) {
  std::vector<Bits> hits;
  for (const Bits& s : all_subsets(h.universe().size()))
    if (is_transversal(h, s)) hits.push_back(s);
  return minimize(std::move(hits));
}

inline SetFamily dominating_sets(const Graph& g) {
  std::vector<Bits> hits;
  for (const Bits& s : all_subsets(g.size()))
    if (dominates(g, s, g.universe().full_set())) hits.push_back(s);
  return minimize(std::move(hits));
}

inline SetFamily subset_dominators(const Graph& g, const Bits& targets) {
  std::vector<Bits> hits;
  for (const Bits& s : all_subsets(g.size()))
    if (dominates(g, s, targets)) hits.push_back(s);
  return minimize(std::move(hits));
}

inline SetFamily itrans(const Hypergraph& h, const Poset& p) {
  std::vector<Bits> hits;
  for (const Bits& s : all_subsets(p.size()))
    if (is_ideal(p, s) && is_transversal(h, s)) hits.push_back(s);
  return minimize(std::move(hits));
}

inline SetFamily idom(const Graph& g, const Poset& p) {
  std::vector<Bits> hits;
  for (const Bits& s : all_subsets(p.size()))
    if (is_ideal(p, s) && dominates(g, s, g.universe().full_set())) hits.push_back(s);
  return minimize(std::move(hits));
}

// Minimal ideals not contained in any member of the upper family.
inline SetFamily dual_family(const Poset& p, const SetFamily& upper) {
  std::vector<Bits> hits;
  for (const Bits& s : all_subsets(p.size())) {
    if (!is_ideal(p, s)) continue;
    bool escapes = true;
    for (const Bits& b : upper)
      if (s.is_subset_of(b)) { escapes = false; break; }
    if (escapes) hits.push_back(s);
  }
  return minimize(std::move(hits));
}

inline std::size_t max_independent_set(const Graph& g) {
  std::size_t best = 0;
  for (const Bits& s : all_subsets(g.size())) {
    bool ok = true;
    for (std::size_t x = 0; x < g.size() && ok; ++x)
      for (std::size_t y = x + 1; y < g.size() && ok; ++y)
        if (s.test(x) && s.test(y) && g.adjacent(x, y)) ok = false;
    if (ok) best = std::max(best, s.count());
  }
  return best;
}

}  // namespace brute
