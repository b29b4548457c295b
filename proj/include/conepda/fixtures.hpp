#ifndef CONEPDA_FIXTURES_HPP
#define CONEPDA_FIXTURES_HPP

#include "conepda/grammar.hpp"
#include "conepda/regular.hpp"

namespace conepda::fixtures {

// {a^{2n} : n >= 0} over the one-letter alphabet (the Figure-1 language).
Cfg even_a();

// Words over {a, a^, b, b^} that freely reduce to the empty word (the
// identity word problem of the free group on two generators).
Cfg dyck2();

// Zero-exponent-sum words over {a, a^}: the loop language of the line.
Cfg one_counter();

// The six-letter worked derivation with its grammar; replaying it yields the
// diagonal set {(0,T1,2), (2,T1h,6), (3,T2h,6), (3,T3,5)}.
struct WorkedDerivation {
  CnfGrammar grammar;
  Word word;
  Derivation rightmost;
  Derivation leftmost;
};
WorkedDerivation figure2();

// The second automaton of Figure 1: a four-state cycle accepting {a^{2n}}
// with finals {o, f}.  Reduced, deterministic, not isomorphic to the
// two-state Schreier graph.
Dfa figure1_a2();

// The first automaton of Figure 1: the two-state graph itself with final o.
Dfa figure1_a1();

}  // namespace conepda::fixtures

#endif
