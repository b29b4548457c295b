#include <doctest.h>

#include "conepda/backends.hpp"
#include "conepda/graph.hpp"

using namespace conepda;

namespace {

Alphabet ab4() { return Alphabet::symmetric({"a", "a^", "b", "b^"}); }

// The Figure-1 Schreier graph of Z_2 over a one-letter alphabet.
LabelledGraph z2_graph() {
  LabelledGraph g(Alphabet::plain({"a"}), "1");
  g.add_edge("1", 0, "t");
  g.add_edge("t", 0, "1");
  return g;
}

}  // namespace

TEST_CASE("structure predicates") {
  auto g = z2_graph();
  auto r = check_structure(g);
  CHECK(r.deterministic);
  CHECK(r.fully_labelled);
  CHECK(!r.symmetric);  // one-letter alphabet has no involution

  LabelledGraph lonely(ab4(), "x");
  auto r2 = check_structure(lonely);
  CHECK(!r2.fully_labelled);
  CHECK(r2.deterministic);

  auto comb = build_schreier(parse_backend_spec("rule comb"), 3);
  auto r3 = check_structure(comb);
  CHECK(r3.deterministic);
  CHECK(r3.fully_labelled);
  CHECK(r3.symmetric);
}

TEST_CASE("step semantics") {
  auto g = z2_graph();
  auto ends = step(g, g.root(), {0, 0});
  REQUIRE(ends.size() == 1);
  CHECK(ends[0] == g.root());
  CHECK(step(g, g.root(), {}) == std::vector<VertexId>{g.root()});

  auto comb = build_schreier(parse_backend_spec("rule comb"), 3);
  const Alphabet& sigma = comb.alphabet();
  auto e2 = step(comb, comb.root(), parse_word(sigma, "b a"));
  REQUIRE(e2.size() == 1);
  CHECK(comb.key(e2[0]) == "(0,1)");  // a is a loop off the axis

  // walking into the frontier is an error, not a truncation
  auto small = build_schreier(parse_backend_spec("rule comb"), 1);
  CHECK_THROWS_AS(step(small, small.root(), parse_word(sigma, "b b b")),
                  FrontierEscape);
}

TEST_CASE("loop language enumeration") {
  auto g = z2_graph();
  auto words = enumerate_loop_language(g, g.root(), g.root(), 5);
  std::set<Word> expected{{}, {0, 0}, {0, 0, 0, 0}};
  CHECK(words == expected);

  CHECK(enumerate_loop_language(g, g.root(), g.root(), 0) ==
        std::set<Word>{{}});
  VertexId t = g.require("t");
  CHECK(enumerate_loop_language(g, g.root(), t, 0).empty());

  auto line = build_schreier(parse_backend_spec("rule line"), 3);
  const Alphabet& sigma = line.alphabet();
  auto loops = enumerate_loop_language(line, line.root(), line.root(), 2);
  std::set<Word> exp2{{}, parse_word(sigma, "a a^"), parse_word(sigma, "a^ a")};
  CHECK(loops == exp2);
}

TEST_CASE("balls") {
  auto z2 = build_schreier(parse_backend_spec("rule z2"), 4);
  auto b0 = ball(z2, {z2.root()}, 0);
  CHECK(b0.members == std::vector<VertexId>{z2.root()});
  auto b1 = ball(z2, {z2.root()}, 1);
  CHECK(b1.members.size() == 5);

  auto comb = build_schreier(parse_backend_spec("rule comb"), 4);
  auto b2 = ball(comb, {comb.root()}, 2);
  // {(k,l) : |k|+|l| <= 2} has 13 points
  CHECK(b2.members.size() == 13);
  for (VertexId v : b1.members) CHECK(b1.contains(v));

  auto b3 = ball(comb, {comb.root()}, 3);
  for (VertexId v : b2.members) CHECK(b3.contains(v));  // monotone
}

TEST_CASE("symmetric loop-language inversion") {
  auto comb = build_schreier(parse_backend_spec("rule comb"), 9);
  const Alphabet& sigma = comb.alphabet();
  VertexId x = comb.root();
  VertexId y = comb.require("(1,1)");
  // exhaustive to length 4 in both directions (length 8 total work)
  auto fwd = enumerate_loop_language(comb, x, y, 4);
  auto bwd = enumerate_loop_language(comb, y, x, 4);
  for (const Word& w : fwd) CHECK(bwd.count(invert_word(sigma, w)));
  for (const Word& w : bwd) CHECK(fwd.count(invert_word(sigma, w)));
}

TEST_CASE("fully deterministic steps are singletons") {
  auto comb = build_schreier(parse_backend_spec("rule comb"), 6);
  const Alphabet& sigma = comb.alphabet();
  std::vector<std::string> ws = {"a", "a^ b", "b b a", "a b^ a^", "b b b"};
  for (const auto& s : ws) {
    auto ends = step(comb, comb.root(), parse_word(sigma, s));
    CHECK(ends.size() == 1);
  }
}

TEST_CASE("graph text round trip") {
  Alphabet sigma = Alphabet::plain({"a"});
  std::string text = "root 1\nedge 1 a t\nedge t a 1\nfinal 1\n";
  auto pg = parse_graph_text(sigma, text);
  CHECK(pg.graph.vertex_count() == 2);
  REQUIRE(pg.finals.size() == 1);
  CHECK(pg.finals[0] == pg.graph.root());
  auto text2 = graph_to_text(pg.graph, pg.finals);
  auto pg2 = parse_graph_text(sigma, text2);
  CHECK(pg2.graph.vertex_count() == 2);
  CHECK(graph_to_text(pg2.graph, pg2.finals) == text2);
}

TEST_CASE("dot export folds symmetric pairs") {
  auto line = build_schreier(parse_backend_spec("rule line"), 2);
  std::string folded = graph_to_dot(line, true);
  std::string full = graph_to_dot(line, false);
  CHECK(folded.find("dir=both") != std::string::npos);
  CHECK(std::count(full.begin(), full.end(), '>') >
        std::count(folded.begin(), folded.end(), '>'));
}
