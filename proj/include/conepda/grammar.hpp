#ifndef CONEPDA_GRAMMAR_HPP
#define CONEPDA_GRAMMAR_HPP

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "conepda/graph.hpp"
#include "conepda/words.hpp"

namespace conepda {

// Right-hand-side symbols: variable indices are >= 0, terminal letter a is
// encoded as -(a+1).
using GSym = int;
inline bool gsym_is_var(GSym s) { return s >= 0; }
inline Letter gsym_letter(GSym s) { return -s - 1; }
inline GSym gsym_term(Letter a) { return -(a + 1); }

struct Production {
  int lhs;
  std::vector<GSym> rhs;
  bool operator==(const Production&) const = default;
};

struct Cfg {
  std::vector<std::string> variables;
  Alphabet terminals;
  int start = 0;
  std::vector<Production> rules;

  int add_variable(const std::string& name);
  int variable(const std::string& name) const;  // -1 if absent
  std::string rhs_to_string(const std::vector<GSym>& rhs) const;
};

// A Cfg in Chomsky normal form: every rule is T -> U V or T -> a, except an
// optional S -> eps with S absent from every right-hand side.
struct CnfGrammar {
  Cfg g;
  static CnfGrammar validate(Cfg g);  // throws ParseError on shape violations
  bool has_epsilon() const;
};

enum class GrammarShape { RightLinear, Linear, General };
GrammarShape is_regular_grammar(const Cfg& g);

// Equivalent reduced CNF grammar; throws EmptyLanguage when L(g) is empty.
CnfGrammar to_cnf(const Cfg& g);

// Shortest-yield table: m(T) per variable plus the maximum m.
struct MinYield {
  std::vector<int> per_variable;
  int max = 0;
};
MinYield min_yield(const CnfGrammar& g);

// One derivation step rewrites the variable at `position` (an index into the
// current sentential form) with rule `rule`.
struct DerivationStep {
  int position;
  int rule;
};
using Derivation = std::vector<DerivationStep>;

struct ParseNode {
  GSym sym;
  int rule = -1;  // -1 for terminal leaves
  std::vector<int> children;
};
struct ParseTree {
  std::vector<ParseNode> nodes;
  int root = -1;
};

struct CykResult {
  bool member = false;
  ParseTree tree;       // valid when member
  Derivation rightmost; // valid when member
};

// CYK membership with a rightmost-derivation witness.
CykResult cyk_member(const CnfGrammar& g, const Word& w);
// Membership with an arbitrary start variable (used to post-check diagonals).
bool cyk_derives(const CnfGrammar& g, int var, const Word& w);

// Exhaustive enumeration of L_T up to the given length (test oracle).
std::set<Word> enumerate_var_language(const CnfGrammar& g, int var,
                                      int max_len);

// Random member of L(g) with |w| <= max_len, by a random derivation kept
// feasible through the shortest-yield table.
Word sample_member(const CnfGrammar& g, std::mt19937& rng, int max_len);

Derivation linearize(const CnfGrammar& g, const ParseTree& t, bool rightmost);

// Diagonal (t_i, T, t_j) of the derivation polygon, j - i >= 2.
struct Diagonal {
  int i;
  int var;
  int j;
  auto operator<=>(const Diagonal&) const = default;
};
struct PolygonTriangulation {
  int n = 0;  // word length; the polygon has n+1 vertices
  std::vector<Diagonal> diagonals;  // sorted
};

// Replays the derivation (any step order of one fixed tree), checks it
// produces w, and reads off the diagonal triangulation.  Every emitted
// diagonal is post-checked to derive its subword.
PolygonTriangulation triangulate(const CnfGrammar& g, const Word& w,
                                 const Derivation& d);

std::string triangulation_to_dot(const CnfGrammar& g, const Word& w,
                                 const PolygonTriangulation& t);

// For w in L(g) = L_{x,.}: every diagonal (i,T,j) of a triangulation of w
// must satisfy d(x^{a_1..a_i}, x^{a_1..a_j}) <= m(T) in the graph metric.
// Expands g(raph) as needed.  Throws NotInLanguage when w is not in L(g).
bool diagonal_distance_check(const CnfGrammar& g, LabelledGraph& graph,
                             VertexId x, const Word& w);
// Variant with an externally supplied yield table (mutation testing).
bool diagonal_distance_check(const CnfGrammar& g, const MinYield& yields,
                             LabelledGraph& graph, VertexId x, const Word& w);

// Text format: `start S`, `rule S -> A B`, `rule A -> 'a'`, `rule S -> eps`.
Cfg parse_grammar_text(const Alphabet& terminals, std::string_view text);
std::string grammar_to_text(const Cfg& g);

}  // namespace conepda

#endif
