#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "brute.hpp"
#include "latdual/generate.hpp"
#include "latdual/poset.hpp"

using namespace latdual;

namespace {

Poset mk(std::vector<std::string> tokens,
         const std::vector<std::pair<std::string, std::string>>& pairs) {
  auto u = make_universe(std::move(tokens));
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  for (const auto& [a, b] : pairs) idx.emplace_back(u->index_of(a), u->index_of(b));
  return Poset::build(u, idx);
}

}  // namespace

TEST_CASE("relations close transitively") {
  Poset p = mk({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(p.less(0, 1));
  CHECK(p.less(1, 2));
  CHECK(p.less(0, 2));
  CHECK_FALSE(p.less(2, 0));
  CHECK_FALSE(p.less(1, 1));
  CHECK(p.leq(1, 1));
  CHECK(p.comparable(0, 2));
}

TEST_CASE("cyclic relations are rejected") {
  auto u = make_universe({"a", "b", "c"});
  CHECK_THROWS_AS(Poset::build(u, {{0, 1}, {1, 2}, {2, 0}}), Error);
  CHECK_THROWS_AS(Poset::build(u, {{1, 1}}), Error);
  try {
    Poset::build(u, {{0, 1}, {1, 0}});
    FAIL("expected a cycle rejection");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Cycle);
  }
}

TEST_CASE("four-element example has exactly eight ideals") {
  Poset p = mk({"x1", "x2", "x3", "x4"}, {{"x1", "x3"}, {"x2", "x3"}, {"x2", "x4"}});
  const Universe& u = p.universe();
  SetFamily expected = {
      u.set_of({}),
      u.set_of({"x1"}),
      u.set_of({"x1", "x2"}),
      u.set_of({"x1", "x2", "x3"}),
      u.set_of({"x1", "x2", "x3", "x4"}),
      u.set_of({"x1", "x2", "x4"}),
      u.set_of({"x2"}),
      u.set_of({"x2", "x4"}),
  };
  CHECK(p.all_ideals() == expected);
}

TEST_CASE("ideal counts of extreme orders") {
  auto chain = mk({"a", "b", "c", "d", "e"},
                  {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}});
  CHECK(chain.all_ideals().size() == 6);
  CHECK(chain.is_total_order());
  CHECK_FALSE(chain.is_antichain_order());

  auto anti = Poset::antichain(make_universe({"a", "b", "c", "d", "e"}));
  CHECK(anti.all_ideals().size() == 32);
  CHECK(anti.is_antichain_order());
  CHECK_FALSE(anti.is_total_order());
}

TEST_CASE("enumeration cap throws past twenty elements") {
  std::vector<std::string> toks;
  for (int i = 0; i < 21; ++i) toks.push_back("v" + std::to_string(100 + i));
  Poset p = Poset::antichain(make_universe(toks));
  CHECK_THROWS_AS(p.all_ideals(), Error);
  try {
    p.all_ideals();
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OracleCapExceeded);
  }
  CHECK(p.all_ideals(21).size() > 0);
}

TEST_CASE("closures, ideals and filters on random orders") {
  Rng rng(11);
  for (int it = 0; it < 40; ++it) {
    Poset p = random_poset(rng, 1 + rand_below(rng, 8), 0.4);
    const std::size_t n = p.size();
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      Bits s = brute::from_mask(mask, n);
      Bits down = p.down_closure(s);
      Bits up = p.up_closure(s);
      CHECK(s.is_subset_of(down));
      CHECK(p.down_closure(down) == down);
      CHECK(p.up_closure(up) == up);
      CHECK(p.is_ideal(down));
      CHECK(p.is_filter(up));
      CHECK(p.is_ideal(s) == brute::is_ideal(p, s));
      CHECK(p.is_ideal(s) == p.is_filter(~s));
    }
  }
}

TEST_CASE("ideals correspond to antichains of their maximal elements") {
  Rng rng(12);
  for (int it = 0; it < 25; ++it) {
    Poset p = random_poset(rng, 1 + rand_below(rng, 7), 0.5);
    SetFamily ideals = p.all_ideals();
    std::vector<Bits> antichains;
    for (const Bits& ideal : ideals) {
      Bits a = p.max_elements(ideal);
      CHECK(p.is_antichain(a));
      CHECK(p.down_closure(a) == ideal);
      antichains.push_back(a);
    }
    std::sort(antichains.begin(), antichains.end(), SeqLess{});
    CHECK(std::adjacent_find(antichains.begin(), antichains.end()) == antichains.end());
    // Every antichain arises this way.
    std::size_t antichain_count = 0;
    for (std::uint64_t mask = 0; mask < (1ull << p.size()); ++mask)
      if (p.is_antichain(brute::from_mask(mask, p.size()))) ++antichain_count;
    CHECK(antichain_count == ideals.size());
  }
}

TEST_CASE("enumerated ideals are canonical and match the exhaustive scan") {
  Rng rng(13);
  for (int it = 0; it < 30; ++it) {
    Poset p = random_poset(rng, 1 + rand_below(rng, 8), 0.35);
    SetFamily got = p.all_ideals();
    CHECK(std::is_sorted(got.begin(), got.end(), SeqLess{}));
    CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());
    SetFamily want = brute::all_ideals(p);
    std::sort(want.begin(), want.end(), SeqLess{});
    CHECK(got == want);
  }
}

TEST_CASE("linear extensions respect the order") {
  Rng rng(14);
  for (int it = 0; it < 30; ++it) {
    Poset p = random_poset(rng, 1 + rand_below(rng, 9), 0.4);
    auto ext = p.linear_extension();
    REQUIRE(ext.size() == p.size());
    std::vector<std::size_t> pos(p.size());
    for (std::size_t i = 0; i < ext.size(); ++i) pos[ext[i]] = i;
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < p.size(); ++b)
        if (p.less(a, b)) CHECK(pos[a] < pos[b]);
  }
}

TEST_CASE("cover pairs regenerate the order") {
  Rng rng(15);
  for (int it = 0; it < 30; ++it) {
    Poset p = random_poset(rng, 1 + rand_below(rng, 8), 0.45);
    Poset q = Poset::build(p.universe_ptr(), p.cover_pairs());
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < p.size(); ++b) CHECK(p.less(a, b) == q.less(a, b));
  }
}

TEST_CASE("induced restriction keeps exactly the inner relations") {
  Rng rng(16);
  for (int it = 0; it < 30; ++it) {
    Poset p = random_poset(rng, 2 + rand_below(rng, 7), 0.45);
    Bits keep(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
      if (rand_chance(rng, 0.6)) keep.set(i);
    Poset q = p.induced(keep);
    REQUIRE(q.size() == keep.count());
    for (std::size_t a = 0; a < q.size(); ++a)
      for (std::size_t b = 0; b < q.size(); ++b) {
        std::size_t oa = p.universe().index_of(q.universe().token(a));
        std::size_t ob = p.universe().index_of(q.universe().token(b));
        CHECK(q.less(a, b) == p.less(oa, ob));
      }
  }
}

TEST_CASE("minimal and maximal elements of subsets") {
  Poset p = mk({"x1", "x2", "x3", "x4"}, {{"x1", "x3"}, {"x2", "x3"}, {"x2", "x4"}});
  const Universe& u = p.universe();
  CHECK(p.min_elements(u.full_set()) == u.set_of({"x1", "x2"}));
  CHECK(p.max_elements(u.full_set()) == u.set_of({"x3", "x4"}));
  Bits s = u.set_of({"x3", "x4"});
  CHECK(p.min_elements(s) == s);
  CHECK(p.is_antichain(s));
  CHECK_FALSE(p.is_antichain(u.set_of({"x2", "x4"})));
}

TEST_CASE("canonical set order sorts by index sequence") {
  auto u = make_universe({"a", "b", "c"});
  Bits a = u->set_of({"a"});
  Bits ab = u->set_of({"a", "b"});
  Bits b = u->set_of({"b"});
  Bits empty = u->empty_set();
  CHECK(seq_less(empty, a));
  CHECK(seq_less(a, ab));
  CHECK(seq_less(ab, b));
  CHECK_FALSE(seq_less(b, ab));
  CHECK_FALSE(seq_less(a, a));
  SetFamily fam = {b, ab, a, empty, ab};
  canonicalize_family(fam);
  CHECK(fam == SetFamily{empty, a, ab, b});
}
