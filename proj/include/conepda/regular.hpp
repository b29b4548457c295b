#ifndef CONEPDA_REGULAR_HPP
#define CONEPDA_REGULAR_HPP

#include <variant>

#include "conepda/backends.hpp"
#include "conepda/graph.hpp"

namespace conepda {

// Finite automaton: a finite labelled graph with initial vertex (the graph
// root) and final states.
struct Dfa {
  LabelledGraph graph;
  std::vector<VertexId> finals;

  bool is_final(VertexId v) const;
  bool accepts(const Word& w) const;
};

struct InfiniteIndexWitness {
  int radius_cap = 0;
  size_t frontier_size = 0;
  size_t explored = 0;
};

// Expands the Schreier graph; when it closes within the cap the pair has
// finite index and the graph itself, with the root as the only final state,
// accepts the word problem.
std::variant<Dfa, InfiniteIndexWitness> schreier_to_dfa(
    std::shared_ptr<const CosetSpace> space, int radius_cap);

// Keeps exactly the states lying on some accepting path; the language is
// unchanged.  Throws EmptyLanguage when no accepting path exists.
Dfa reduce_dfa(const Dfa& d);

struct KappaResult {
  std::vector<std::string> coset_of_state;  // indexed by Dfa vertex
  bool injective = false;
  bool surjective = false;
};

// The map kappa: states -> cosets, defined by kappa(y) = coset of psi(w) for
// any w in L_{o,y}.  Verifies that d accepts the word problem (cross
// enumeration up to check_len, LanguageMismatch otherwise), samples
// alternative witnesses per state (NotWellDefined on a clash), and checks
// that kappa is a label-preserving homomorphism onto the Schreier graph with
// kappa(o) = root coset.
KappaResult kappa_homomorphism(const Dfa& d,
                               std::shared_ptr<const CosetSpace> space,
                               int check_len = 10);

struct IndexResult {
  bool finite = false;
  int index = 0;  // vertex count of the closed Schreier graph
  int cap = 0;
};

// Semi-decision by ball closure: finite(n) iff the Schreier graph closes
// within the cap; otherwise honestly unknown.
IndexResult finite_index_check(std::shared_ptr<const CosetSpace> space,
                               int cap);

}  // namespace conepda

#endif
