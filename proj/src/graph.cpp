#include "conepda/graph.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <deque>
#include <sstream>
#include <tuple>

namespace conepda {

LabelledGraph::LabelledGraph(Alphabet sigma, const std::string& root_key,
                             std::shared_ptr<const EdgeSource> source)
    : sigma_(std::move(sigma)), source_(std::move(source)) {
  root_ = intern(root_key);
}

VertexId LabelledGraph::intern(const std::string& key) {
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  if (vertex_limit_ && keys_.size() >= vertex_limit_)
    throw ResourceLimit("vertex limit exceeded (" +
                        std::to_string(vertex_limit_) + ")");
  VertexId v = static_cast<VertexId>(keys_.size());
  keys_.push_back(key);
  index_.emplace(key, v);
  out_.emplace_back();
  in_.emplace_back();
  if (source_) frontier_.insert(v);
  return v;
}

std::optional<VertexId> LabelledGraph::find(const std::string& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId LabelledGraph::require(const std::string& key) const {
  auto v = find(key);
  if (!v) throw Error("no such vertex: " + key);
  return *v;
}

std::optional<VertexId> LabelledGraph::target(VertexId v, Letter a) const {
  for (const auto& [lab, dst] : out_.at(v))
    if (lab == a) return dst;
  return std::nullopt;
}

std::vector<VertexId> LabelledGraph::neighbours(VertexId v) const {
  std::vector<VertexId> ns;
  for (const auto& [lab, dst] : out_.at(v)) ns.push_back(dst);
  for (const auto& [lab, src] : in_.at(v)) ns.push_back(src);
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  return ns;
}

VertexId LabelledGraph::add_vertex(const std::string& key) {
  return intern(key);
}

void LabelledGraph::add_edge(const std::string& src, Letter a,
                             const std::string& dst) {
  add_edge(intern(src), a, intern(dst));
}

void LabelledGraph::add_edge(VertexId src, Letter a, VertexId dst) {
  auto& row = out_.at(src);
  std::pair<Letter, VertexId> e{a, dst};
  auto it = std::lower_bound(row.begin(), row.end(), e);
  if (it != row.end() && *it == e) return;  // no parallel equal-label edges
  row.insert(it, e);
  auto& back = in_.at(dst);
  std::pair<Letter, VertexId> r{a, src};
  back.insert(std::lower_bound(back.begin(), back.end(), r), r);
}

void LabelledGraph::expand(VertexId v) {
  if (!frontier_.count(v)) return;
  assert(source_);
  frontier_.erase(v);
  for (const auto& [a, key] : source_->out_edges(keys_.at(v)))
    add_edge(v, a, intern(key));
}

void LabelledGraph::ensure_ball(const std::vector<VertexId>& centers, int n) {
  // Layered BFS; every vertex at distance < n must be expanded, vertices at
  // distance n may stay on the frontier.
  std::unordered_map<VertexId, int> dist;
  std::deque<VertexId> queue;
  for (VertexId c : centers) {
    if (!dist.count(c)) {
      dist[c] = 0;
      queue.push_back(c);
    }
  }
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    int d = dist[v];
    if (d >= n) continue;
    expand(v);
    for (VertexId u : neighbours(v)) {
      if (!dist.count(u)) {
        dist[u] = d + 1;
        queue.push_back(u);
      }
    }
  }
}

bool GraphBall::contains(VertexId v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

StructureReport check_structure(const LabelledGraph& g) {
  StructureReport r;
  const Alphabet& sigma = g.alphabet();
  r.deterministic = true;
  r.fully_labelled = true;
  r.symmetric = sigma.has_involution();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& row = g.out(v);
    for (size_t i = 0; i + 1 < row.size(); ++i)
      if (row[i].first == row[i + 1].first) r.deterministic = false;
    if (!g.on_frontier(v)) {
      for (Letter a = 0; a < sigma.size(); ++a)
        if (!g.target(v, a)) r.fully_labelled = false;
    }
    if (r.symmetric) {
      for (const auto& [a, u] : row) {
        if (g.on_frontier(u)) continue;  // reverse edge not materialized yet
        bool found = false;
        for (const auto& [b, w] : g.out(u))
          if (b == sigma.inverse(a) && w == v) found = true;
        if (!found) r.symmetric = false;
      }
    }
  }
  return r;
}

std::vector<VertexId> step(const LabelledGraph& g, VertexId x, const Word& w) {
  std::vector<VertexId> cur{x};
  for (Letter a : w) {
    std::vector<VertexId> next;
    for (VertexId v : cur) {
      if (g.on_frontier(v))
        throw FrontierEscape("step: path reached unexplored vertex " +
                             g.key(v));
      for (const auto& [lab, dst] : g.out(v))
        if (lab == a) next.push_back(dst);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    cur = std::move(next);
    if (cur.empty()) break;
  }
  return cur;
}

bool traces_to(const LabelledGraph& g, VertexId x, VertexId y, const Word& w) {
  auto ends = step(g, x, w);
  return std::binary_search(ends.begin(), ends.end(), y);
}

namespace {

void enumerate_rec(const LabelledGraph& g, VertexId v, VertexId y, int budget,
                   Word& prefix, std::set<Word>& out) {
  if (v == y) out.insert(prefix);
  if (budget == 0) return;
  if (g.on_frontier(v))
    throw FrontierEscape("enumerate_loop_language: region too small at " +
                         g.key(v));
  for (const auto& [a, dst] : g.out(v)) {
    prefix.push_back(a);
    enumerate_rec(g, dst, y, budget - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::set<Word> enumerate_loop_language(const LabelledGraph& g, VertexId x,
                                       VertexId y, int max_len) {
  std::set<Word> out;
  Word prefix;
  enumerate_rec(g, x, y, max_len, prefix, out);
  return out;
}

GraphBall ball(LabelledGraph& g, const std::vector<VertexId>& centers, int n) {
  g.ensure_ball(centers, n);
  GraphBall b;
  b.centers = centers;
  b.radius = n;
  std::unordered_map<VertexId, int> dist;
  std::deque<VertexId> queue;
  for (VertexId c : centers)
    if (dist.emplace(c, 0).second) queue.push_back(c);
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    b.members.push_back(v);
    int d = dist[v];
    if (d == n) continue;
    for (VertexId u : g.neighbours(v))
      if (dist.emplace(u, d + 1).second) queue.push_back(u);
  }
  std::sort(b.members.begin(), b.members.end());
  return b;
}

std::vector<int> distances_from(const LabelledGraph& g,
                                const std::vector<VertexId>& centers) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<VertexId> queue;
  for (VertexId c : centers) {
    if (dist[c] < 0) {
      dist[c] = 0;
      queue.push_back(c);
    }
  }
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId u : g.neighbours(v)) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

int distance(const LabelledGraph& g, VertexId x, VertexId y) {
  auto dist = distances_from(g, {x});
  return dist[y];
}

int bounded_distance(LabelledGraph& g, VertexId x, VertexId y, int cap) {
  if (x == y) return 0;
  std::unordered_map<VertexId, int> dist{{x, 0}};
  std::deque<VertexId> queue{x};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    int d = dist[v];
    if (d >= cap) continue;
    g.expand(v);
    for (VertexId u : g.neighbours(v)) {
      if (dist.count(u)) continue;
      if (u == y) return d + 1;
      dist[u] = d + 1;
      queue.push_back(u);
    }
  }
  return -1;
}

ParsedGraph parse_graph_text(const Alphabet& sigma, std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  std::optional<std::string> root;
  std::vector<std::array<std::string, 3>> edges;
  std::vector<std::string> finals;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw) || kw[0] == '#') continue;
    if (kw == "root") {
      std::string v;
      if (!(ls >> v)) throw ParseError("root line needs a vertex");
      root = v;
    } else if (kw == "edge") {
      std::string s, a, d;
      if (!(ls >> s >> a >> d))
        throw ParseError("edge line needs <src> <label> <dst>");
      edges.push_back({s, a, d});
    } else if (kw == "final") {
      std::string v;
      if (!(ls >> v)) throw ParseError("final line needs a vertex");
      finals.push_back(v);
    } else if (kw == "alphabet") {
      continue;  // alphabet supplied by the caller
    } else {
      throw ParseError("unknown graph line: " + kw);
    }
  }
  if (!root) throw ParseError("graph text has no root line");
  ParsedGraph pg{LabelledGraph(sigma, *root), {}};
  for (const auto& [s, a, d] : edges)
    pg.graph.add_edge(s, sigma.letter(a), d);
  for (const auto& f : finals) pg.finals.push_back(pg.graph.require(f));
  return pg;
}

std::string graph_to_text(const LabelledGraph& g,
                          const std::vector<VertexId>& finals) {
  std::ostringstream os;
  os << "root " << g.key(g.root()) << "\n";
  for (VertexId f : finals) os << "final " << g.key(f) << "\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (const auto& [a, dst] : g.out(v))
      os << "edge " << g.key(v) << " " << g.alphabet().name(a) << " "
         << g.key(dst) << "\n";
  return os.str();
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string graph_to_dot(const LabelledGraph& g, bool fold_symmetric,
                         const std::string& name) {
  const Alphabet& sigma = g.alphabet();
  std::ostringstream os;
  os << "digraph \"" << dot_escape(name) << "\" {\n";
  os << "  rankdir=LR;\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    os << "  v" << v << " [label=\"" << dot_escape(g.key(v)) << "\"";
    if (v == g.root()) os << ", shape=doublecircle";
    if (g.on_frontier(v)) os << ", style=dashed";
    os << "];\n";
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (const auto& [a, dst] : g.out(v)) {
      if (fold_symmetric && sigma.has_involution()) {
        Letter ainv = sigma.inverse(a);
        bool has_rev = false;
        for (const auto& [b, w] : g.out(dst))
          if (b == ainv && w == v) has_rev = true;
        if (has_rev) {
          // keep the lexicographically smaller representative of {e, e^{-1}}
          if (std::make_tuple(dst, ainv, v) < std::make_tuple(v, a, dst))
            continue;
          os << "  v" << v << " -> v" << dst << " [label=\"" << sigma.name(a)
             << "\", dir=both];\n";
          continue;
        }
      }
      os << "  v" << v << " -> v" << dst << " [label=\"" << sigma.name(a)
         << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace conepda
