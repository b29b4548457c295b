#include "conepda/fixtures.hpp"

namespace conepda::fixtures {

Cfg even_a() {
  Alphabet sigma = Alphabet::plain({"a"});
  return parse_grammar_text(sigma,
                            "start S\n"
                            "rule S -> S S\n"
                            "rule S -> 'a' 'a'\n"
                            "rule S -> eps\n");
}

Cfg dyck2() {
  Alphabet sigma = Alphabet::symmetric({"a", "a^", "b", "b^"});
  return parse_grammar_text(sigma,
                            "start S\n"
                            "rule S -> eps\n"
                            "rule S -> S S\n"
                            "rule S -> 'a' S 'a^'\n"
                            "rule S -> 'a^' S 'a'\n"
                            "rule S -> 'b' S 'b^'\n"
                            "rule S -> 'b^' S 'b'\n");
}

Cfg one_counter() {
  Alphabet sigma = Alphabet::symmetric({"a", "a^"});
  return parse_grammar_text(sigma,
                            "start S\n"
                            "rule S -> eps\n"
                            "rule S -> S S\n"
                            "rule S -> 'a' S 'a^'\n"
                            "rule S -> 'a^' S 'a'\n");
}

WorkedDerivation figure2() {
  Alphabet sigma =
      Alphabet::plain({"a1", "a2", "a3", "a4", "a5", "a6"});
  Cfg g = parse_grammar_text(sigma,
                             "start S\n"
                             "rule S -> T1 T1h\n"
                             "rule T1 -> T5 T5h\n"
                             "rule T1h -> T2 T2h\n"
                             "rule T2h -> T3 T3h\n"
                             "rule T3 -> T4 T4h\n"
                             "rule T5 -> 'a1'\n"
                             "rule T5h -> 'a2'\n"
                             "rule T2 -> 'a3'\n"
                             "rule T4 -> 'a4'\n"
                             "rule T4h -> 'a5'\n"
                             "rule T3h -> 'a6'\n");
  WorkedDerivation out{CnfGrammar::validate(g), {}, {}, {}};
  for (int i = 0; i < 6; ++i) out.word.push_back(i);

  auto rule_of = [&](const std::string& lhs) {
    for (size_t i = 0; i < g.rules.size(); ++i)
      if (g.variables[g.rules[i].lhs] == lhs) return static_cast<int>(i);
    throw Error("fixture rule missing: " + lhs);
  };
  // the rightmost replay order of the worked example
  out.rightmost = {
      {0, rule_of("S")},    // S |- T1 T1h
      {1, rule_of("T1h")},  // ... T1 (T2 T2h)
      {2, rule_of("T2h")},  // ... T1 (T2 (T3 T3h))
      {3, rule_of("T3h")},  // ... T1 (T2 (T3 a6))
      {2, rule_of("T3")},   // ... T1 (T2 ((T4 T4h) a6))
      {3, rule_of("T4h")},  // ... T1 (T2 ((T4 a5) a6))
      {2, rule_of("T4")},   // ... T1 (T2 ((a4 a5) a6))
      {1, rule_of("T2")},   // ... T1 (a3 ((a4 a5) a6))
      {0, rule_of("T1")},   // ... (T5 T5h)(a3 ((a4 a5) a6))
      {1, rule_of("T5h")},  // ... (T5 a2)(a3 ((a4 a5) a6))
      {0, rule_of("T5")},   // ... (a1 a2)(a3 ((a4 a5) a6))
  };
  // the same tree unfolded left to right
  out.leftmost = {
      {0, rule_of("S")},   {0, rule_of("T1")},  {0, rule_of("T5")},
      {1, rule_of("T5h")}, {2, rule_of("T1h")}, {2, rule_of("T2")},
      {3, rule_of("T2h")}, {3, rule_of("T3")},  {3, rule_of("T4")},
      {4, rule_of("T4h")}, {5, rule_of("T3h")},
  };
  return out;
}

Dfa figure1_a1() {
  Alphabet sigma = Alphabet::plain({"a"});
  LabelledGraph g(sigma, "o");
  g.add_edge("o", 0, "u");
  g.add_edge("u", 0, "o");
  return Dfa{std::move(g), {0}};
}

Dfa figure1_a2() {
  Alphabet sigma = Alphabet::plain({"a"});
  LabelledGraph g(sigma, "o");
  g.add_edge("o", 0, "u");
  g.add_edge("u", 0, "f");
  g.add_edge("f", 0, "l");
  g.add_edge("l", 0, "o");
  Dfa d{std::move(g), {}};
  d.finals = {d.graph.require("o"), d.graph.require("f")};
  return d;
}

}  // namespace conepda::fixtures
