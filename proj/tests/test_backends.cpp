#include <doctest.h>

#include <algorithm>
#include <random>

#include "conepda/backends.hpp"

using namespace conepda;

namespace {

Alphabet ab4() { return Alphabet::symmetric({"a", "a^", "b", "b^"}); }
Alphabet ab2() { return Alphabet::symmetric({"a", "a^"}); }

}  // namespace

TEST_CASE("figure 1 schreier graph") {
  auto space = make_figure1_space();
  auto g = build_schreier(space, 2);
  CHECK(g.vertex_count() == 2);
  CHECK(!g.has_frontier());
  CHECK(word_problem_oracle(*space, {}));
  CHECK(word_problem_oracle(*space, {0, 0}));
  CHECK(!word_problem_oracle(*space, {0, 0, 0}));
}

TEST_CASE("free subgroup backend folds <a>") {
  Alphabet sigma = ab4();
  auto space = std::make_shared<FreeGroupSubgroupBackend>(
      sigma, std::vector<Word>{parse_word(sigma, "a")});
  auto g = build_schreier(space, 1);
  VertexId o = g.root();
  // a and a^ loop at the root, b and b^ lead to two fresh vertices
  REQUIRE(g.target(o, sigma.letter("a")));
  CHECK(*g.target(o, sigma.letter("a")) == o);
  CHECK(*g.target(o, sigma.letter("a^")) == o);
  VertexId up = *g.target(o, sigma.letter("b"));
  VertexId down = *g.target(o, sigma.letter("b^"));
  CHECK(up != o);
  CHECK(down != o);
  CHECK(up != down);

  CHECK(word_problem_oracle(*space, parse_word(sigma, "a b b^")));
  CHECK(!word_problem_oracle(*space, parse_word(sigma, "b a b^")));
}

TEST_CASE("folding is confluent under generator permutations") {
  Alphabet sigma = ab4();
  std::vector<Word> gens = {parse_word(sigma, "a a"), parse_word(sigma, "b"),
                            parse_word(sigma, "a b a^")};
  std::vector<Word> perm = gens;
  std::sort(perm.begin(), perm.end());
  std::mt19937 rng(3);
  do {
    FreeGroupSubgroupBackend b1(sigma, gens);
    FreeGroupSubgroupBackend b2(sigma, perm);
    CHECK(b1.core_size() == b2.core_size());
    // canonical keys must agree on random words
    for (int t = 0; t < 50; ++t) {
      Word w;
      std::uniform_int_distribution<int> len(0, 8), pick(0, sigma.size() - 1);
      int n = len(rng);
      for (int i = 0; i < n; ++i) w.push_back(pick(rng));
      std::string k1 = b1.root_key(), k2 = b2.root_key();
      for (Letter a : w) {
        k1 = b1.act(k1, a);
        k2 = b2.act(k2, a);
      }
      CHECK(k1 == k2);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("coset action inverts") {
  auto comb = parse_backend_spec("rule comb");
  const Alphabet& sigma = comb->alphabet();
  std::vector<std::string> keys = {"(0,0)", "(2,0)", "(1,3)", "(-2,-1)"};
  for (const auto& k : keys)
    for (Letter a = 0; a < sigma.size(); ++a)
      CHECK(comb->act(comb->act(k, a), sigma.inverse(a)) == k);
}

TEST_CASE("comb schreier graph matches figure rules") {
  auto g = build_schreier(parse_backend_spec("rule comb"), 2);
  const Alphabet& sigma = g.alphabet();
  VertexId o = g.root();
  CHECK(g.key(o) == "(0,0)");
  CHECK(g.key(*g.target(o, sigma.letter("a"))) == "(1,0)");
  CHECK(g.key(*g.target(o, sigma.letter("b"))) == "(0,1)");
  VertexId tooth = g.require("(0,1)");
  CHECK(*g.target(tooth, sigma.letter("a")) == tooth);  // loop off the axis
  CHECK(g.key(*g.target(tooth, sigma.letter("b"))) == "(0,2)");
}

TEST_CASE("word problem oracle equals loop language") {
  // Lemma: L(G,K,psi) = L_{o,o}, exhaustively at small length per backend.
  std::vector<std::string> specs = {"rule comb", "rule line", "rule y_line",
                                    "finite z2",
                                    "free-subgroup alphabet a a^ b b^ gens a"};
  for (const auto& spec : specs) {
    CAPTURE(spec);
    auto space = parse_backend_spec(spec);
    auto g = build_schreier(space, 6);
    const Alphabet& sigma = space->alphabet();
    // all words of length <= 5
    std::vector<Word> stack{{}};
    while (!stack.empty()) {
      Word w = stack.back();
      stack.pop_back();
      bool oracle = word_problem_oracle(*space, w);
      bool traced = traces_to(g, g.root(), g.root(), w);
      CHECK(oracle == traced);
      if (w.size() < 5)
        for (Letter a = 0; a < sigma.size(); ++a) {
          Word w2 = w;
          w2.push_back(a);
          stack.push_back(w2);
        }
    }
  }
}

TEST_CASE("universal cover map") {
  auto comb = build_schreier(parse_backend_spec("rule comb"), 4);
  const Alphabet& sigma = comb.alphabet();
  CHECK(universal_cover_map(comb, {}) == comb.root());
  CHECK(comb.key(universal_cover_map(comb, parse_word(sigma, "b a b^"))) ==
        "(0,0)");
  CHECK_THROWS_AS(universal_cover_map(comb, parse_word(sigma, "a a^")), Error);

  // symmetric order-2 variant: both letters map to the same swap
  auto sym2 = std::make_shared<FreeGroupSubgroupBackend>(
      ab2(), std::vector<Word>{parse_word(ab2(), "a a"),
                               parse_word(ab2(), "a a^")});
  // gens reduce to {aa}; a acts as the swap on the two cosets
  auto g = build_schreier(sym2, 3);
  CHECK(universal_cover_map(g, parse_word(ab2(), "a a")) == g.root());
}

TEST_CASE("fundamental group samples") {
  Alphabet sigma = ab4();
  auto tree = build_schreier(make_tree_space(sigma), 5);
  auto sample = fundamental_group_sample(tree, 4);
  CHECK(sample == std::set<Word>{{}});

  // 2-vertex graph of (Z, 2Z): reduced closed words of length <= 2
  auto two = build_schreier(
      parse_backend_spec("free-subgroup alphabet a a^ gens a.a"), 4);
  CHECK(two.vertex_count() == 2);
  auto fg = fundamental_group_sample(two, 2);
  Alphabet s2 = ab2();
  std::set<Word> expected{{}, parse_word(s2, "a a"), parse_word(s2, "a^ a^")};
  CHECK(fg == expected);
  // closed under inversion
  for (const Word& w : fg) CHECK(fg.count(invert_word(s2, w)));

  // comb: contains b a b^ a^? no; contains a^ b a b^ ... sample matches
  // the generator pattern a^k b^l a b^-l a^-k at small size
  auto comb = build_schreier(parse_backend_spec("rule comb"), 5);
  auto cfg = fundamental_group_sample(comb, 4);
  const Alphabet& cs = comb.alphabet();
  CHECK(cfg.count(parse_word(cs, "b a b^")));
  CHECK(cfg.count(parse_word(cs, "b^ a b")));
  CHECK(!cfg.count(parse_word(cs, "b a b^ a^")));
  for (const Word& w : cfg) {
    auto ends = step(comb, comb.root(), w);
    REQUIRE(ends.size() == 1);
    CHECK(ends[0] == comb.root());
  }
}

TEST_CASE("spanning tree generators") {
  // trees have none
  Alphabet s2 = ab2();
  LabelledGraph path(s2, "p0");
  path.add_edge("p0", s2.letter("a"), "p1");
  path.add_edge("p1", s2.letter("a^"), "p0");
  CHECK(spanning_tree_generators(path).empty());

  // 2-vertex symmetric graph: index-2 subgroup of Z
  auto two = build_schreier(
      parse_backend_spec("free-subgroup alphabet a a^ gens a.a"), 4);
  auto gens = spanning_tree_generators(two);
  CHECK(gens == std::set<Word>{parse_word(s2, "a^ a^")});

  // k-cycle: single chord gives a^k
  for (int k : {3, 5}) {
    Word wk(k, s2.letter("a"));
    auto cyc = build_schreier(
        std::make_shared<FreeGroupSubgroupBackend>(s2, std::vector<Word>{wk}),
        k + 1);
    CHECK(cyc.vertex_count() == static_cast<size_t>(k));
    auto cg = spanning_tree_generators(cyc);
    CHECK(cg == std::set<Word>{wk});
  }
}

TEST_CASE("spanning tree generators versus fundamental group") {
  // both inclusions of the free-generator statement, at desk scale
  Alphabet sigma = ab4();
  auto two = build_schreier(
      parse_backend_spec("free-subgroup alphabet a a^ b b^ gens a.a,b,a.b.a^"),
      4);
  CHECK(two.vertex_count() == 2);
  auto gens = spanning_tree_generators(two);
  auto fg6 = fundamental_group_sample(two, 6);

  // products of <= 3 generators (and inverses) land in the sample
  std::vector<Word> pool;
  for (const Word& g : gens) {
    pool.push_back(g);
    pool.push_back(invert_word(sigma, g));
  }
  for (const Word& x : pool)
    for (const Word& y : pool)
      for (const Word& z : pool) {
        Word p = group_multiply(sigma, group_multiply(sigma, x, y), z);
        if (p.size() <= 6) CHECK(fg6.count(p));
      }

  // conversely, sampled elements fold into the subgroup graph built on gens
  FreeGroupSubgroupBackend sub(sigma,
                               std::vector<Word>(gens.begin(), gens.end()));
  for (const Word& w : fg6) CHECK(sub.contains(w));
}

TEST_CASE("backend spec errors") {
  CHECK_THROWS_AS(parse_backend_spec(""), ParseError);
  CHECK_THROWS_AS(parse_backend_spec("rule nope"), ParseError);
  CHECK_THROWS_AS(parse_backend_spec("rule x_w"), ParseError);
  CHECK_THROWS_AS(parse_backend_spec("wat"), ParseError);
  CHECK(parse_backend_spec("rule:x_w W=quadratic") != nullptr);
}
