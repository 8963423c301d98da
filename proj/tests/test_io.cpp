#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latdual/generate.hpp"
#include "latdual/io.hpp"

using namespace latdual;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("poset parsing") {
  Poset p = parse_poset("# comment\nelements: b a c\n\nless: a b\nless: b c # tail\n");
  const Universe& u = p.universe();
  CHECK(u.tokens() == std::vector<std::string>{"a", "b", "c"});
  CHECK(p.less(u.index_of("a"), u.index_of("c")));
}

TEST_CASE("poset parse errors carry kinds and lines") {
  CHECK(kind_of([] { parse_poset("less: a b\n"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_poset("elements: a b\nelements: a b\n"); }) ==
        ErrorKind::Parse);
  CHECK(kind_of([] { parse_poset("elements: a b\nless: a\n"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_poset("elements: a b\nless: a b c\n"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_poset("elements: a b\nwat: a b\n"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_poset("elements: a a\n"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_poset("elements: a b\nless: a c\n"); }) ==
        ErrorKind::UnknownElement);
  CHECK(kind_of([] { parse_poset("elements: a b\nless: a b\nless: b a\n"); }) ==
        ErrorKind::Cycle);
  try {
    parse_poset("elements: a b\nless: a\n");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("hypergraph parsing collapses duplicate edges with a warning") {
  std::vector<std::string> warnings;
  Hypergraph h = parse_hypergraph("vertices: a b c\nedge: a b\nedge: b a\nedge: c\n",
                                  false, &warnings);
  CHECK(h.edge_count() == 2);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("duplicate") != std::string::npos);
  CHECK(kind_of([] { parse_hypergraph("vertices: a b\nedge:\n"); }) == ErrorKind::Parse);
}

TEST_CASE("graph parsing") {
  Graph g = parse_graph("vertices: a b c\nedge: a b\nedge: b c\n");
  CHECK(g.edge_count() == 2);
  CHECK(kind_of([] { parse_graph("vertices: a b\nedge: a a\n"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_graph("vertices: a b c\nedge: a b c\n"); }) ==
        ErrorKind::Parse);
}

TEST_CASE("family parsing against an ambient universe") {
  auto u = make_universe({"a", "b", "c"});
  SetFamily fam = parse_family("set: b a\nset:\nset: c\n", *u);
  REQUIRE(fam.size() == 3);
  // Families come back canonical: sorted with the empty set first.
  CHECK(fam[0] == u->empty_set());
  CHECK(fam[1] == u->set_of({"a", "b"}));
  CHECK(fam[2] == u->set_of({"c"}));
  auto uu = *u;
  CHECK(kind_of([&] { parse_family("set: d\n", uu); }) == ErrorKind::UnknownElement);
}

TEST_CASE("reserved tokens need the explicit flag") {
  CHECK(kind_of([] { parse_poset("elements: a _v\n"); }) == ErrorKind::Parse);
  Poset p = parse_poset("elements: a _v\n", true);
  CHECK(p.size() == 2);
  CHECK(kind_of([] { parse_graph("vertices: a _e1\nedge: a _e1\n"); }) ==
        ErrorKind::Parse);
  CHECK(parse_graph("vertices: a _e1\nedge: a _e1\n", true).edge_count() == 1);
}

TEST_CASE("format and parse round-trip") {
  Rng rng(41);
  for (int it = 0; it < 25; ++it) {
    Poset p = random_poset(rng, 1 + rand_below(rng, 8), 0.4);
    Poset q = parse_poset(format_poset(p));
    CHECK(q.universe().same_tokens(p.universe()));
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < p.size(); ++b) CHECK(p.less(a, b) == q.less(a, b));

    Hypergraph h = random_hypergraph(rng, 2 + rand_below(rng, 6), 1 + rand_below(rng, 5),
                                     1 + rand_below(rng, 4));
    Hypergraph h2 = parse_hypergraph(format_hypergraph(h));
    CHECK(h2.edges() == h.edges());

    SetFamily fam = h.edges();
    CHECK(parse_family(format_family(fam, h.universe()), h.universe()) == fam);
  }
  Rng rng2(42);
  for (int it = 0; it < 10; ++it) {
    auto inst = random_split_ni(rng2, SplitGenParams{});
    Graph g2 = parse_graph(format_graph(inst.graph));
    CHECK(g2.edge_list() == inst.graph.edge_list());
  }
}

TEST_CASE("file round-trip") {
  const std::string path = "/tmp/latdual_io_test.txt";
  write_file(path, "elements: a b\nless: a b\n");
  CHECK(parse_poset(read_file(path)).size() == 2);
  CHECK_THROWS_AS(read_file("/tmp/latdual_io_missing_file.txt"), Error);
}
