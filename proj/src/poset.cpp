#include "latdual/poset.hpp"

#include <algorithm>
#include <string>

namespace latdual {

Poset::Poset(UniversePtr u, std::vector<Bits> below, std::vector<Bits> above)
    : u_(std::move(u)), below_(std::move(below)), above_(std::move(above)) {}

Poset Poset::build(UniversePtr u,
                   const std::vector<std::pair<std::size_t, std::size_t>>& less_pairs) {
  const std::size_t n = u->size();
  std::vector<Bits> below(n, Bits(n));
  for (auto [a, b] : less_pairs) {
    if (a >= n || b >= n) fail(ErrorKind::UnknownElement, "relation endpoint out of range");
    if (a == b) fail(ErrorKind::Cycle, "reflexive relation on " + u->token(a));
    below[b].set(a);
  }
  // Warshall closure over bitset rows.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t x = 0; x < n; ++x)
      if (below[x].test(k)) below[x] |= below[k];
  for (std::size_t x = 0; x < n; ++x)
    if (below[x].test(x))
      fail(ErrorKind::Cycle, "relation cycle through " + u->token(x));
  std::vector<Bits> above(n, Bits(n));
  for (std::size_t x = 0; x < n; ++x)
    for (auto y = below[x].find_first(); y != Bits::npos; y = below[x].find_next(y))
      above[y].set(x);
  return Poset(std::move(u), std::move(below), std::move(above));
}

Poset Poset::antichain(UniversePtr u) { return build(std::move(u), {}); }

Bits Poset::down_closure(const Bits& s) const {
  Bits out = s;
  for (auto x = s.find_first(); x != Bits::npos; x = s.find_next(x)) out |= below_[x];
  return out;
}

Bits Poset::up_closure(const Bits& s) const {
  Bits out = s;
  for (auto x = s.find_first(); x != Bits::npos; x = s.find_next(x)) out |= above_[x];
  return out;
}

bool Poset::is_ideal(const Bits& s) const {
  for (auto x = s.find_first(); x != Bits::npos; x = s.find_next(x))
    if (!below_[x].is_subset_of(s)) return false;
  return true;
}

bool Poset::is_filter(const Bits& s) const {
  for (auto x = s.find_first(); x != Bits::npos; x = s.find_next(x))
    if (!above_[x].is_subset_of(s)) return false;
  return true;
}

Bits Poset::min_elements(const Bits& s) const {
  Bits out(size());
  for (auto x = s.find_first(); x != Bits::npos; x = s.find_next(x))
    if (!below_[x].intersects(s)) out.set(x);
  return out;
}

Bits Poset::max_elements(const Bits& s) const {
  Bits out(size());
  for (auto x = s.find_first(); x != Bits::npos; x = s.find_next(x))
    if (!above_[x].intersects(s)) out.set(x);
  return out;
}

bool Poset::is_antichain(const Bits& s) const {
  for (auto x = s.find_first(); x != Bits::npos; x = s.find_next(x))
    if (below_[x].intersects(s)) return false;
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::cover_pairs() const {
  // a is covered by b when a < b with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t b = 0; b < size(); ++b)
    for (auto a = below_[b].find_first(); a != Bits::npos; a = below_[b].find_next(a)) {
      Bits between = below_[b] & above_[a];
      if (between.none()) out.emplace_back(a, b);
    }
  return out;
}

std::vector<std::size_t> Poset::linear_extension() const {
  // Smallest-index-first topological order; deterministic.
  const std::size_t n = size();
  std::vector<std::size_t> order;
  order.reserve(n);
  Bits placed(n);
  while (order.size() < n) {
    for (std::size_t x = 0; x < n; ++x) {
      if (placed.test(x)) continue;
      if (below_[x].is_subset_of(placed)) {
        order.push_back(x);
        placed.set(x);
      }
    }
  }
  return order;
}

bool Poset::is_antichain_order() const {
  for (std::size_t x = 0; x < size(); ++x)
    if (below_[x].any()) return false;
  return true;
}

bool Poset::is_total_order() const {
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = x + 1; y < size(); ++y)
      if (!comparable(x, y)) return false;
  return true;
}

Poset Poset::induced(const Bits& keep) const {
  std::vector<std::string> toks;
  std::vector<std::size_t> old_idx;
  for (auto x = keep.find_first(); x != Bits::npos; x = keep.find_next(x)) {
    toks.push_back(u_->token(x));
    old_idx.push_back(x);
  }
  // Tokens arrive sorted, so positions are preserved relative to keep.
  auto u = std::make_shared<const Universe>(std::move(toks), true);
  std::vector<std::pair<std::size_t, std::size_t>> rels;
  for (std::size_t i = 0; i < old_idx.size(); ++i)
    for (std::size_t j = 0; j < old_idx.size(); ++j)
      if (less(old_idx[i], old_idx[j])) rels.emplace_back(i, j);
  return build(std::move(u), rels);
}

void Poset::for_each_ideal(const std::function<void(const Bits&)>& visit,
                           std::size_t cap) const {
  const std::size_t n = size();
  if (n > cap)
    fail(ErrorKind::OracleCapExceeded,
         "ideal enumeration over " + std::to_string(n) + " elements exceeds cap " +
             std::to_string(cap));
  std::vector<std::size_t> order = linear_extension();
  Bits current(n);
  // Processing a linear extension left to right, an element may be included
  // only if everything below it already is; excluding it bars its up-set,
  // which only appears later.  Exclusions need no bookkeeping because a later
  // element above an excluded one fails the inclusion test.
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == n) {
      visit(current);
      return;
    }
    std::size_t x = order[pos];
    rec(pos + 1);
    if (below_[x].is_subset_of(current)) {
      current.set(x);
      rec(pos + 1);
      current.reset(x);
    }
  };
  rec(0);
}

SetFamily Poset::all_ideals(std::size_t cap) const {
  SetFamily out;
  for_each_ideal([&](const Bits& s) { out.push_back(s); }, cap);
  canonicalize_family(out);
  return out;
}

}  // namespace latdual
