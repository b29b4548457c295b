#include "conepda/regular.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace conepda {

bool Dfa::is_final(VertexId v) const {
  return std::find(finals.begin(), finals.end(), v) != finals.end();
}

bool Dfa::accepts(const Word& w) const {
  auto ends = step(graph, graph.root(), w);
  for (VertexId v : ends)
    if (is_final(v)) return true;
  return false;
}

std::variant<Dfa, InfiniteIndexWitness> schreier_to_dfa(
    std::shared_ptr<const CosetSpace> space, int radius_cap) {
  LabelledGraph g = build_schreier(space, radius_cap);
  if (g.has_frontier())
    return InfiniteIndexWitness{radius_cap, g.frontier_size(),
                                g.vertex_count()};
  return Dfa{std::move(g), {0}};
}

Dfa reduce_dfa(const Dfa& d) {
  const LabelledGraph& g = d.graph;
  size_t n = g.vertex_count();
  // forward reachability from the root
  std::vector<bool> fwd(n, false);
  std::deque<VertexId> queue{g.root()};
  fwd[g.root()] = true;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (const auto& [a, u] : g.out(v))
      if (!fwd[u]) {
        fwd[u] = true;
        queue.push_back(u);
      }
  }
  // backward reachability from the finals
  std::vector<bool> bwd(n, false);
  for (VertexId f : d.finals)
    if (!bwd[f]) {
      bwd[f] = true;
      queue.push_back(f);
    }
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (const auto& [a, u] : g.in(v))
      if (!bwd[u]) {
        bwd[u] = true;
        queue.push_back(u);
      }
  }
  if (!fwd[g.root()] || !bwd[g.root()])
    throw EmptyLanguage("automaton has no accepting path");

  Dfa out{LabelledGraph(g.alphabet(), g.key(g.root())), {}};
  for (VertexId v = 0; v < n; ++v) {
    if (!fwd[v] || !bwd[v]) continue;
    for (const auto& [a, u] : g.out(v))
      if (fwd[u] && bwd[u]) out.graph.add_edge(g.key(v), a, g.key(u));
  }
  for (VertexId f : d.finals)
    if (fwd[f] && bwd[f]) out.finals.push_back(out.graph.require(g.key(f)));
  std::sort(out.finals.begin(), out.finals.end());
  return out;
}

namespace {

// First few words of L_{o,y} per state, in BFS order over (state, word).
std::vector<std::vector<Word>> witness_words(const LabelledGraph& g,
                                             size_t per_state, size_t cap) {
  std::vector<std::vector<Word>> out(g.vertex_count());
  std::deque<std::pair<VertexId, Word>> queue{{g.root(), {}}};
  size_t steps = 0;
  while (!queue.empty() && steps < cap) {
    auto [v, w] = queue.front();
    queue.pop_front();
    ++steps;
    if (out[v].size() < per_state) out[v].push_back(w);
    bool anyone_short = false;
    for (const auto& row : out)
      if (row.size() < per_state) anyone_short = true;
    if (!anyone_short) break;
    if (w.size() > g.vertex_count() + per_state + 2) continue;
    for (const auto& [a, u] : g.out(v)) {
      Word w2 = w;
      w2.push_back(a);
      queue.emplace_back(u, w2);
    }
  }
  return out;
}

std::string act_word(const CosetSpace& space, const Word& w) {
  std::string k = space.root_key();
  for (Letter a : w) k = space.act(k, a);
  return k;
}

}  // namespace

KappaResult kappa_homomorphism(const Dfa& d,
                               std::shared_ptr<const CosetSpace> space,
                               int check_len) {
  const LabelledGraph& g = d.graph;
  const Alphabet& sigma = space->alphabet();
  if (!(sigma == g.alphabet()))
    throw LanguageMismatch("automaton alphabet differs from the pair's");

  // the language check needs the automaton reduced and deterministic
  if (!check_structure(g).deterministic)
    throw Error("kappa needs a deterministic automaton");
  if (reduce_dfa(d).graph.vertex_count() != g.vertex_count())
    throw Error("kappa needs a reduced automaton");

  // cross-enumeration of the word problem
  std::deque<Word> pending{{}};
  while (!pending.empty()) {
    Word w = pending.front();
    pending.pop_front();
    if (d.accepts(w) != word_problem_oracle(*space, w))
      throw LanguageMismatch("automaton does not accept the word problem: " +
                             format_word(sigma, w));
    if (static_cast<int>(w.size()) < check_len)
      for (Letter a = 0; a < sigma.size(); ++a) {
        Word w2 = w;
        w2.push_back(a);
        pending.push_back(w2);
      }
  }

  // kappa(y) from the BFS-first witness, well-definedness from 5 alternates
  auto witnesses = witness_words(g, 5, 500000);
  KappaResult res;
  res.coset_of_state.assign(g.vertex_count(), "");
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (witnesses[v].empty())
      throw Error("kappa: automaton state unreachable despite reduction");
    res.coset_of_state[v] = act_word(*space, witnesses[v].front());
    for (const Word& alt : witnesses[v])
      if (act_word(*space, alt) != res.coset_of_state[v])
        throw NotWellDefined("kappa: state " + g.key(v) +
                             " has witnesses in different cosets");
  }
  if (res.coset_of_state[g.root()] != space->root_key())
    throw NotWellDefined("kappa(o) is not the root coset");

  // label-preserving homomorphism: edges map to Schreier edges
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (const auto& [a, u] : g.out(v))
      if (space->act(res.coset_of_state[v], a) != res.coset_of_state[u])
        throw NotWellDefined("kappa does not preserve the edge labelled " +
                             sigma.name(a));

  // surjectivity onto the (finite) Schreier graph
  auto closed =
      schreier_to_dfa(space, static_cast<int>(g.vertex_count()) + 1);
  if (std::holds_alternative<InfiniteIndexWitness>(closed))
    throw LanguageMismatch(
        "Schreier graph does not close at the automaton's size");
  const Dfa& schreier = std::get<Dfa>(closed);
  std::set<std::string> images(res.coset_of_state.begin(),
                               res.coset_of_state.end());
  res.surjective = images.size() == schreier.graph.vertex_count();
  res.injective = images.size() == g.vertex_count();
  if (!res.surjective) throw NotWellDefined("kappa is not surjective");
  return res;
}

IndexResult finite_index_check(std::shared_ptr<const CosetSpace> space,
                               int cap) {
  LabelledGraph g = build_schreier(space, cap);
  IndexResult res;
  res.cap = cap;
  if (!g.has_frontier()) {
    res.finite = true;
    res.index = static_cast<int>(g.vertex_count());
  }
  return res;
}

}  // namespace conepda
