#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "latdual/core.hpp"

namespace latdual {

// Strict partial order on a Universe, stored transitively closed.  An ideal is
// a downward-closed subset, a filter an upward-closed one; S is an ideal of P
// exactly when its complement is a filter.
class Poset {
 public:
  // Takes "a < b" pairs, closes them transitively and rejects any relation
  // set whose closure would be reflexive (CycleError).
  static Poset build(UniversePtr u,
                     const std::vector<std::pair<std::size_t, std::size_t>>& less_pairs);
  static Poset antichain(UniversePtr u);

  const Universe& universe() const { return *u_; }
  UniversePtr universe_ptr() const { return u_; }
  std::size_t size() const { return u_->size(); }

  bool less(std::size_t a, std::size_t b) const { return below_[b].test(a); }
  bool leq(std::size_t a, std::size_t b) const { return a == b || less(a, b); }
  bool comparable(std::size_t a, std::size_t b) const { return less(a, b) || less(b, a); }
  // {y : y < x} and {y : x < y}.
  const Bits& strictly_below(std::size_t x) const { return below_[x]; }
  const Bits& strictly_above(std::size_t x) const { return above_[x]; }

  Bits down_closure(const Bits& s) const;
  Bits up_closure(const Bits& s) const;
  bool is_ideal(const Bits& s) const;
  bool is_filter(const Bits& s) const;

  // Members of s with no smaller / larger element inside s.
  Bits min_elements(const Bits& s) const;
  Bits max_elements(const Bits& s) const;
  bool is_antichain(const Bits& s) const;

  std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const;
  std::vector<std::size_t> linear_extension() const;

  bool is_antichain_order() const;
  bool is_total_order() const;

  // Restriction to the kept elements, on a fresh sub-universe.
  Poset induced(const Bits& keep) const;

  // Visits every ideal exactly once in unspecified order.  2^n worst case, so
  // the element count is capped (OracleCapExceeded).
  void for_each_ideal(const std::function<void(const Bits&)>& visit,
                      std::size_t cap = kDefaultOracleCap) const;
  // All ideals in canonical seq_less order.
  SetFamily all_ideals(std::size_t cap = kDefaultOracleCap) const;

 private:
  Poset(UniversePtr u, std::vector<Bits> below, std::vector<Bits> above);

  UniversePtr u_;
  std::vector<Bits> below_;
  std::vector<Bits> above_;
};

}  // namespace latdual
