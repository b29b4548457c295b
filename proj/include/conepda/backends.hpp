#ifndef CONEPDA_BACKENDS_HPP
#define CONEPDA_BACKENDS_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "conepda/graph.hpp"
#include "conepda/words.hpp"

namespace conepda {

// A realization of a pair (G, K, psi) as a coset enumeration: canonical keys
// name right cosets, act() implements Kg -> Kg.psi(a).  act is total and
// deterministic, so the induced Schreier graph is fully deterministic.
class CosetSpace : public EdgeSource {
 public:
  virtual const Alphabet& alphabet() const = 0;
  virtual std::string root_key() const = 0;
  virtual std::string act(const std::string& key, Letter a) const = 0;
  virtual std::string describe() const = 0;

  std::vector<std::pair<Letter, std::string>> out_edges(
      const std::string& key) const override;
};

// Subgroup of the free group on a symmetric alphabet, given by finitely many
// generator words.  The generator loops are folded into the deterministic
// core graph; a coset key is the core vertex reached plus the reduced tail
// hanging off it, so key equality is coset equality.
class FreeGroupSubgroupBackend : public CosetSpace {
 public:
  FreeGroupSubgroupBackend(Alphabet sigma, std::vector<Word> generators);

  const Alphabet& alphabet() const override { return sigma_; }
  std::string root_key() const override;
  std::string act(const std::string& key, Letter a) const override;
  std::string describe() const override;

  // Membership in the subgroup: the fold-and-trace oracle.
  bool contains(const Word& w) const;

  int core_size() const { return static_cast<int>(core_.size()); }
  // (vertex, letter) -> vertex or -1; vertex 0 is the base point.
  const std::vector<std::vector<int>>& core() const { return core_; }

 private:
  Alphabet sigma_;
  std::vector<Word> generators_;
  std::vector<std::vector<int>> core_;

  std::pair<int, Word> decode(const std::string& key) const;
  std::string encode(int vertex, const Word& tail) const;
};

// Finite group given by its multiplication table, with a subgroup and a map
// psi from letters to group elements.
class FiniteGroupBackend : public CosetSpace {
 public:
  FiniteGroupBackend(Alphabet sigma, std::vector<std::vector<int>> table,
                     std::vector<int> subgroup, std::vector<int> psi);

  const Alphabet& alphabet() const override { return sigma_; }
  std::string root_key() const override;
  std::string act(const std::string& key, Letter a) const override;
  std::string describe() const override;

  int order() const { return static_cast<int>(table_.size()); }

 private:
  Alphabet sigma_;
  std::vector<std::vector<int>> table_;
  std::vector<int> psi_;
  std::vector<int> coset_rep_;  // element -> minimal element of its K-coset

  void validate(const std::vector<int>& subgroup) const;
};

// Vertex keys are integer tuples and act is one of the built-in edge rule
// sets from the worked examples.
class RuleBackend : public CosetSpace {
 public:
  enum class Rule { Z2Lattice, Comb, Line, YLine, XW };

  explicit RuleBackend(Rule rule, std::vector<long> w_set = {},
                       bool w_quadratic = false);

  const Alphabet& alphabet() const override { return sigma_; }
  std::string root_key() const override;
  std::string act(const std::string& key, Letter a) const override;
  std::string describe() const override;

  Rule rule() const { return rule_; }
  bool in_w(long k) const;

 private:
  Rule rule_;
  Alphabet sigma_;
  std::vector<long> w_set_;
  bool w_quadratic_ = false;
};

// Fully deterministic Schreier graph on canonical coset keys out to the given
// radius; the frontier is the boundary sphere.
LabelledGraph build_schreier(std::shared_ptr<const CosetSpace> space,
                             int radius);

// true iff psi(w) lies in K, i.e. acting by w from the root coset returns to
// it.
bool word_problem_oracle(const CosetSpace& space, const Word& w);

// Phi(w) = o^w for the universal cover T_Sigma -> X.  w must be reduced.
VertexId universal_cover_map(const LabelledGraph& g, const Word& w);

// K(X) cut to reduced words of length <= max_len: labels of closed reduced
// paths at the root.
std::set<Word> fundamental_group_sample(const LabelledGraph& g, int max_len);

// Free generators of the fundamental group from a BFS spanning tree with
// label-lexicographic tie-breaking.  g must be finite, symmetric, connected.
std::set<Word> spanning_tree_generators(const LabelledGraph& g);

// The universal cover itself, as a coset space over a symmetric alphabet
// (the free-group backend with no generators folds to exactly this).
std::shared_ptr<CosetSpace> make_tree_space(const Alphabet& sigma);

// The Figure-1 pair: Z_2 with trivial subgroup over the one-letter alphabet.
std::shared_ptr<CosetSpace> make_figure1_space();

// Backend description text, e.g.
//   free-subgroup alphabet a a^ b b^ gens a
//   finite table <file> subgroup 0   |   finite z2
//   rule comb | rule z2 | rule line | rule y_line | rule x_w W=quadratic
// Colons may replace spaces (rule:comb).
std::shared_ptr<CosetSpace> parse_backend_spec(const std::string& spec);

}  // namespace conepda

#endif
