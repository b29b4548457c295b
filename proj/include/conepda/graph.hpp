#ifndef CONEPDA_GRAPH_HPP
#define CONEPDA_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "conepda/words.hpp"

namespace conepda {

using VertexId = uint32_t;
constexpr VertexId kNoVertex = static_cast<VertexId>(-1);

// Supplies the outgoing edges of a vertex, addressed by its canonical key.
// Used to grow lazily built graphs (Schreier graphs are usually infinite).
struct EdgeSource {
  virtual ~EdgeSource() = default;
  virtual std::vector<std::pair<Letter, std::string>> out_edges(
      const std::string& key) const = 0;
};

struct StructureReport {
  bool deterministic = false;
  bool fully_labelled = false;
  bool symmetric = false;
};

// Rooted, edge-labelled directed graph over canonical string keys.  Vertices
// whose outgoing edges have not been materialized yet form the frontier; path
// operations refuse to walk through the frontier instead of silently
// truncating.  Expansion only ever adds vertices and edges.
class LabelledGraph {
 public:
  LabelledGraph(Alphabet sigma, const std::string& root_key,
                std::shared_ptr<const EdgeSource> source = nullptr);

  const Alphabet& alphabet() const { return sigma_; }
  VertexId root() const { return root_; }
  size_t vertex_count() const { return keys_.size(); }
  const std::string& key(VertexId v) const { return keys_.at(v); }
  std::optional<VertexId> find(const std::string& key) const;
  VertexId require(const std::string& key) const;

  bool on_frontier(VertexId v) const { return frontier_.count(v) != 0; }
  bool has_frontier() const { return !frontier_.empty(); }
  size_t frontier_size() const { return frontier_.size(); }

  // Sorted by (label, target).
  const std::vector<std::pair<Letter, VertexId>>& out(VertexId v) const {
    return out_.at(v);
  }
  const std::vector<std::pair<Letter, VertexId>>& in(VertexId v) const {
    return in_.at(v);
  }
  // Unique target of the a-edge at v, or nullopt.  Meaningful for
  // deterministic graphs.
  std::optional<VertexId> target(VertexId v, Letter a) const;

  // Neighbours under the symmetrized edge relation, deduplicated, sorted.
  std::vector<VertexId> neighbours(VertexId v) const;

  // Hand-building (graphs without an edge source).
  VertexId add_vertex(const std::string& key);
  void add_edge(const std::string& src, Letter a, const std::string& dst);
  void add_edge(VertexId src, Letter a, VertexId dst);

  // Expansion via the edge source.  expand() is a no-op off the frontier.
  void expand(VertexId v);
  // Grows the graph so that every vertex within distance n of F (symmetrized
  // metric) is off the frontier.
  void ensure_ball(const std::vector<VertexId>& centers, int n);

  // Total number of vertices this graph may materialize (resource guard).
  void set_vertex_limit(size_t limit) { vertex_limit_ = limit; }

 private:
  Alphabet sigma_;
  std::shared_ptr<const EdgeSource> source_;
  std::vector<std::string> keys_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::vector<std::pair<Letter, VertexId>>> out_;
  std::vector<std::vector<std::pair<Letter, VertexId>>> in_;
  std::unordered_set<VertexId> frontier_;
  VertexId root_ = kNoVertex;
  size_t vertex_limit_ = 0;  // 0 = unlimited

  VertexId intern(const std::string& key);
};

struct GraphBall {
  std::vector<VertexId> centers;
  int radius = 0;
  std::vector<VertexId> members;  // sorted
  bool contains(VertexId v) const;
};

StructureReport check_structure(const LabelledGraph& g);

// The set x^w of endpoints of paths from x with label w.  Throws
// FrontierEscape when some path would have to leave the explored region.
std::vector<VertexId> step(const LabelledGraph& g, VertexId x, const Word& w);

// Exactly { w : |w| <= max_len, y in x^w }, by exhaustive path enumeration.
// This is the oracle every automaton gets tested against.
std::set<Word> enumerate_loop_language(const LabelledGraph& g, VertexId x,
                                       VertexId y, int max_len);

// Single-word membership in L_{x,y}, cheaper than full enumeration.
bool traces_to(const LabelledGraph& g, VertexId x, VertexId y, const Word& w);

// B(F,n) in the symmetrized graph metric; expands through the edge source
// when one is attached.
GraphBall ball(LabelledGraph& g, const std::vector<VertexId>& centers, int n);

// Distances from `centers` over the explored region (kNoVertex-sized vector,
// -1 where unreachable).  Does not expand.
std::vector<int> distances_from(const LabelledGraph& g,
                                const std::vector<VertexId>& centers);

int distance(const LabelledGraph& g, VertexId x, VertexId y);

// BFS distance with on-demand expansion, capped: returns -1 when d(x,y)
// exceeds cap.  Only grows the graph inside B(x, cap).
int bounded_distance(LabelledGraph& g, VertexId x, VertexId y, int cap);

// Text format: `root <v>` and one `edge <src> <label> <dst>` per line.
// `final <v>` lines are tolerated and reported back for DFA use.
struct ParsedGraph {
  LabelledGraph graph;
  std::vector<VertexId> finals;
};
ParsedGraph parse_graph_text(const Alphabet& sigma, std::string_view text);
std::string graph_to_text(const LabelledGraph& g,
                          const std::vector<VertexId>& finals = {});

// DOT export; fold_symmetric suppresses the second arc of each (e, e^{-1})
// pair.
std::string graph_to_dot(const LabelledGraph& g, bool fold_symmetric,
                         const std::string& name = "G");

}  // namespace conepda

#endif
