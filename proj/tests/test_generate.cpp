#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latdual/generate.hpp"
#include "latdual/io.hpp"

using namespace latdual;

TEST_CASE("engine-level sampling is in range") {
  Rng rng(1);
  for (int it = 0; it < 1000; ++it) {
    std::size_t v = rand_below(rng, 7);
    CHECK(v < 7);
  }
  CHECK(rand_below(rng, 1) == 0);
  int hits = 0;
  for (int it = 0; it < 1000; ++it)
    if (rand_chance(rng, 0.25)) ++hits;
  CHECK(hits > 150);
  CHECK(hits < 350);
}

TEST_CASE("default tokens are zero padded") {
  auto toks = default_tokens(12);
  CHECK(toks.front() == "x01");
  CHECK(toks.back() == "x12");
  CHECK(std::is_sorted(toks.begin(), toks.end()));
  auto toks2 = default_tokens(5, "q");
  CHECK(toks2.front() == "q1");
}

TEST_CASE("same seed reproduces the same instance") {
  Rng a(99), b(99);
  Poset pa = random_poset(a, 8, 0.4);
  Poset pb = random_poset(b, 8, 0.4);
  CHECK(format_poset(pa) == format_poset(pb));
  Hypergraph ha = random_hypergraph(a, 7, 5, 3);
  Hypergraph hb = random_hypergraph(b, 7, 5, 3);
  CHECK(format_hypergraph(ha) == format_hypergraph(hb));
  auto sa = random_split_ni(a, SplitGenParams{});
  auto sb = random_split_ni(b, SplitGenParams{});
  CHECK(format_graph(sa.graph) == format_graph(sb.graph));
  CHECK(format_poset(sa.poset) == format_poset(sb.poset));
}

TEST_CASE("dual instances are antichains of ideals") {
  Rng rng(101);
  for (int it = 0; it < 40; ++it) {
    DualInstance d = random_dual(rng, 1 + rand_below(rng, 9), 1 + rand_below(rng, 5), 0.4);
    for (const Bits& b : d.upper) CHECK(d.poset.is_ideal(b));
    CHECK(is_incomparable_family(d.upper));
  }
}

TEST_CASE("class generators hit their classes") {
  Rng rng(102);
  for (int it = 0; it < 40; ++it) {
    SplitGenParams sp;
    sp.clique = 1 + rand_below(rng, 6);
    sp.independent = 1 + rand_below(rng, 6);
    sp.prefix_fraction = it % 2 ? 0.5 : 0.0;
    auto s = random_split_ni(rng, sp);
    CHECK(is_split(s.graph));
    CHECK(is_ni_poset(s.graph, s.poset));

    auto b = random_bipartite_ni(rng, 1 + rand_below(rng, 5), 1 + rand_below(rng, 5),
                                 0.5, 0.4);
    CHECK(is_bipartite(b.graph));
    CHECK(is_ni_poset(b.graph, b.poset));

    auto c = random_cobipartite_ni(rng, 1 + rand_below(rng, 5), 1 + rand_below(rng, 5),
                                   0.5, 0.4);
    CHECK(is_cobipartite(c.graph));
    CHECK(is_ni_poset(c.graph, c.poset));

    TriangleFreeGenParams tp;
    tp.core = 2 + rand_below(rng, 6);
    tp.pendants = rand_below(rng, 5);
    tp.edge_tries = 2 * tp.core;
    auto t = random_trianglefree_weakni(rng, tp);
    CHECK(is_triangle_free(t.graph));
    CHECK(is_weak_ni_poset(t.graph, t.poset));
  }
}

TEST_CASE("ni generator also satisfies the weak condition") {
  Rng rng(103);
  for (int it = 0; it < 30; ++it) {
    auto s = random_split_ni(rng, SplitGenParams{});
    CHECK(is_weak_ni_poset(s.graph, s.poset));
  }
}

TEST_CASE("hypergraph generator respects bounds") {
  Rng rng(104);
  for (int it = 0; it < 40; ++it) {
    std::size_t n = 2 + rand_below(rng, 8);
    std::size_t m = 1 + rand_below(rng, 6);
    std::size_t k = 1 + rand_below(rng, 4);
    Hypergraph h = random_hypergraph(rng, n, m, k);
    CHECK(h.size() == n);
    CHECK(h.edge_count() <= m);
    CHECK(h.edge_count() >= 1);
    for (const Bits& e : h.edges()) {
      CHECK(e.count() >= 1);
      CHECK(e.count() <= k);
    }
  }
}

TEST_CASE("invalid parameters are rejected") {
  Rng rng(105);
  CHECK_THROWS_AS(random_poset(rng, 0, 0.3), Error);
  CHECK_THROWS_AS(random_hypergraph(rng, 2, 0, 2), Error);
  CHECK_THROWS_AS(random_hypergraph(rng, 2, 2, 0), Error);
  SplitGenParams sp;
  sp.clique = 0;
  sp.independent = 0;
  CHECK_THROWS_AS(random_split_ni(rng, sp), Error);
  TriangleFreeGenParams tp;
  tp.core = 0;
  CHECK_THROWS_AS(random_trianglefree_weakni(rng, tp), Error);
}
