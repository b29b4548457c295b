#include "conepda/backends.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

namespace conepda {

std::vector<std::pair<Letter, std::string>> CosetSpace::out_edges(
    const std::string& key) const {
  std::vector<std::pair<Letter, std::string>> out;
  for (Letter a = 0; a < alphabet().size(); ++a)
    out.emplace_back(a, act(key, a));
  return out;
}

// ---------------------------------------------------------------------------
// Free-group subgroup backend (Stallings folding)
// ---------------------------------------------------------------------------

namespace {

struct FoldGraph {
  // adjacency as (letter, target) lists, with union-find on vertices
  std::vector<std::vector<std::pair<Letter, int>>> adj;
  std::vector<int> parent;

  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  int fresh() {
    int v = static_cast<int>(adj.size());
    adj.emplace_back();
    parent.push_back(v);
    return v;
  }
  void link(int x, Letter a, Letter ainv, int y) {
    adj[x].emplace_back(a, y);
    adj[y].emplace_back(ainv, x);
  }
};

}  // namespace

FreeGroupSubgroupBackend::FreeGroupSubgroupBackend(Alphabet sigma,
                                                   std::vector<Word> gens)
    : sigma_(std::move(sigma)) {
  if (!sigma_.has_involution())
    throw NotSymmetric("free-group backend needs a symmetric alphabet");
  for (auto& g : gens) {
    g = free_reduce(sigma_, g);
    if (!g.empty()) generators_.push_back(g);
  }

  FoldGraph fg;
  int base = fg.fresh();
  for (const Word& g : generators_) {
    int cur = base;
    for (size_t i = 0; i < g.size(); ++i) {
      int next = (i + 1 == g.size()) ? base : fg.fresh();
      fg.link(cur, g[i], sigma_.inverse(g[i]), next);
      cur = next;
    }
  }

  // Fold: merge targets of equally labelled edges until deterministic.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < static_cast<int>(fg.adj.size()); ++v) {
      if (fg.find(v) != v) continue;
      std::vector<std::pair<Letter, int>> seen;
      for (auto& [a, t0] : fg.adj[v]) {
        int t = fg.find(t0);
        bool dup = false;
        for (auto& [b, u] : seen) {
          if (b == a) {
            dup = true;
            if (u != t) {
              // merge u and t, pool their adjacency at the survivor
              int keep = std::min(u, t), drop = std::max(u, t);
              fg.parent[drop] = keep;
              auto& src = fg.adj[drop];
              fg.adj[keep].insert(fg.adj[keep].end(), src.begin(), src.end());
              src.clear();
              u = keep;
              changed = true;
            }
          }
        }
        if (!dup) seen.emplace_back(a, t);
      }
      fg.adj[v] = std::move(seen);
    }
    // normalize adjacency to class representatives
    for (int v = 0; v < static_cast<int>(fg.adj.size()); ++v) {
      if (fg.find(v) != v) continue;
      for (auto& [a, t] : fg.adj[v]) t = fg.find(t);
    }
  }

  // Canonical relabelling: BFS from the base point in letter order.  This
  // makes the key function independent of the generator list order.
  int base_rep = fg.find(base);
  std::vector<int> id(fg.adj.size(), -1);
  std::vector<int> order;
  id[base_rep] = 0;
  order.push_back(base_rep);
  for (size_t qi = 0; qi < order.size(); ++qi) {
    int v = order[qi];
    std::sort(fg.adj[v].begin(), fg.adj[v].end());
    for (auto& [a, t] : fg.adj[v]) {
      if (id[t] < 0) {
        id[t] = static_cast<int>(order.size());
        order.push_back(t);
      }
    }
  }
  core_.assign(order.size(), std::vector<int>(sigma_.size(), -1));
  for (size_t i = 0; i < order.size(); ++i)
    for (auto& [a, t] : fg.adj[order[i]]) core_[i][a] = id[t];
}

std::string FreeGroupSubgroupBackend::encode(int vertex,
                                             const Word& tail) const {
  std::string key = "v" + std::to_string(vertex);
  for (Letter a : tail) {
    key += '.';
    key += sigma_.name(a);
  }
  return key;
}

std::pair<int, Word> FreeGroupSubgroupBackend::decode(
    const std::string& key) const {
  if (key.empty() || key[0] != 'v') throw Error("bad coset key: " + key);
  size_t dot = key.find('.');
  int vertex = std::stoi(key.substr(1, dot - 1));
  Word tail;
  while (dot != std::string::npos) {
    size_t next = key.find('.', dot + 1);
    tail.push_back(sigma_.letter(key.substr(
        dot + 1, next == std::string::npos ? next : next - dot - 1)));
    dot = next;
  }
  return {vertex, tail};
}

std::string FreeGroupSubgroupBackend::root_key() const { return encode(0, {}); }

std::string FreeGroupSubgroupBackend::act(const std::string& key,
                                          Letter a) const {
  auto [vertex, tail] = decode(key);
  if (!tail.empty()) {
    if (a == sigma_.inverse(tail.back()))
      tail.pop_back();
    else
      tail.push_back(a);
    return encode(vertex, tail);
  }
  int t = core_[vertex][a];
  if (t >= 0) return encode(t, {});
  return encode(vertex, {a});
}

std::string FreeGroupSubgroupBackend::describe() const {
  std::ostringstream os;
  os << "free-subgroup(core=" << core_.size() << ", gens=";
  for (size_t i = 0; i < generators_.size(); ++i)
    os << (i ? "," : "") << format_word(sigma_, generators_[i]);
  os << ")";
  return os.str();
}

bool FreeGroupSubgroupBackend::contains(const Word& w) const {
  std::string k = root_key();
  for (Letter a : w) k = act(k, a);
  return k == root_key();
}

// ---------------------------------------------------------------------------
// Finite-group backend
// ---------------------------------------------------------------------------

FiniteGroupBackend::FiniteGroupBackend(Alphabet sigma,
                                       std::vector<std::vector<int>> table,
                                       std::vector<int> subgroup,
                                       std::vector<int> psi)
    : sigma_(std::move(sigma)), table_(std::move(table)), psi_(std::move(psi)) {
  validate(subgroup);
  int n = order();
  coset_rep_.assign(n, -1);
  for (int g = 0; g < n; ++g) {
    int rep = n;
    for (int k : subgroup) rep = std::min(rep, table_[k][g]);
    coset_rep_[g] = rep;
  }
}

void FiniteGroupBackend::validate(const std::vector<int>& subgroup) const {
  int n = order();
  if (n == 0) throw InvalidTable("empty multiplication table");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n)
      throw InvalidTable("table is not square");
    for (int x : row)
      if (x < 0 || x >= n) throw InvalidTable("table entry out of range");
  }
  // identity
  int e = -1;
  for (int g = 0; g < n && e < 0; ++g) {
    bool ok = true;
    for (int h = 0; h < n; ++h)
      if (table_[g][h] != h || table_[h][g] != h) ok = false;
    if (ok) e = g;
  }
  if (e != 0) throw InvalidTable("element 0 must be the identity");
  // inverses
  for (int g = 0; g < n; ++g) {
    bool has_inv = false;
    for (int h = 0; h < n; ++h)
      if (table_[g][h] == 0 && table_[h][g] == 0) has_inv = true;
    if (!has_inv) throw InvalidTable("element without inverse");
  }
  // associativity sample
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, n - 1);
  int trials = std::min(200, n * n * n);
  for (int i = 0; i < trials; ++i) {
    int a = pick(rng), b = pick(rng), c = pick(rng);
    if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
      throw InvalidTable("multiplication table is not associative");
  }
  // subgroup closed, contains identity
  if (subgroup.empty()) throw InvalidTable("subgroup list is empty");
  bool has_id = false;
  for (int k : subgroup) {
    if (k < 0 || k >= n) throw InvalidTable("subgroup element out of range");
    if (k == 0) has_id = true;
  }
  if (!has_id) throw InvalidTable("subgroup must contain the identity");
  for (int k1 : subgroup)
    for (int k2 : subgroup) {
      int p = table_[k1][k2];
      if (std::find(subgroup.begin(), subgroup.end(), p) == subgroup.end())
        throw InvalidTable("subgroup is not closed under multiplication");
    }
  if (static_cast<int>(psi_.size()) != sigma_.size())
    throw InvalidTable("psi must assign one element per letter");
  for (int g : psi_)
    if (g < 0 || g >= n) throw InvalidTable("psi image out of range");
  if (sigma_.has_involution()) {
    for (Letter a = 0; a < sigma_.size(); ++a)
      if (table_[psi_[a]][psi_[sigma_.inverse(a)]] != 0)
        throw InvalidTable("psi(a^) is not the inverse of psi(a)");
  }
}

std::string FiniteGroupBackend::root_key() const {
  return "g" + std::to_string(coset_rep_[0]);
}

std::string FiniteGroupBackend::act(const std::string& key, Letter a) const {
  int rep = std::stoi(key.substr(1));
  return "g" + std::to_string(coset_rep_[table_[rep][psi_[a]]]);
}

std::string FiniteGroupBackend::describe() const {
  return "finite(order=" + std::to_string(order()) + ")";
}

// ---------------------------------------------------------------------------
// Rule backend
// ---------------------------------------------------------------------------

namespace {

Alphabet rule_alphabet(RuleBackend::Rule rule) {
  if (rule == RuleBackend::Rule::Line)
    return Alphabet::symmetric({"a", "a^"});
  return Alphabet::symmetric({"a", "a^", "b", "b^"});
}

std::pair<long, long> parse_pair(const std::string& key) {
  long k = 0, l = 0;
  if (std::sscanf(key.c_str(), "(%ld,%ld)", &k, &l) != 2)
    throw Error("bad tuple key: " + key);
  return {k, l};
}

std::string pair_key(long k, long l) {
  return "(" + std::to_string(k) + "," + std::to_string(l) + ")";
}

long parse_single(const std::string& key) {
  long k = 0;
  if (std::sscanf(key.c_str(), "(%ld)", &k) != 1)
    throw Error("bad tuple key: " + key);
  return k;
}

std::string single_key(long k) { return "(" + std::to_string(k) + ")"; }

}  // namespace

RuleBackend::RuleBackend(Rule rule, std::vector<long> w_set, bool w_quadratic)
    : rule_(rule),
      sigma_(rule_alphabet(rule)),
      w_set_(std::move(w_set)),
      w_quadratic_(w_quadratic) {
  std::sort(w_set_.begin(), w_set_.end());
  if (rule_ == Rule::XW && !w_quadratic_ && w_set_.empty())
    throw Error("x_w rule needs a non-empty W");
}

bool RuleBackend::in_w(long k) const {
  if (w_quadratic_) {
    // W = { j(|j|+1) : j in Z }: pronic numbers of either sign, and 0
    long m = std::labs(k);
    for (long j = 0; j * (j + 1) <= m; ++j)
      if (j * (j + 1) == m) return true;
    return false;
  }
  return std::binary_search(w_set_.begin(), w_set_.end(), k);
}

std::string RuleBackend::root_key() const {
  switch (rule_) {
    case Rule::Line:
    case Rule::YLine:
      return single_key(0);
    default:
      return pair_key(0, 0);
  }
}

std::string RuleBackend::act(const std::string& key, Letter a) const {
  const std::string& name = sigma_.name(a);
  switch (rule_) {
    case Rule::Z2Lattice: {
      auto [k, l] = parse_pair(key);
      if (name == "a") return pair_key(k + 1, l);
      if (name == "a^") return pair_key(k - 1, l);
      if (name == "b") return pair_key(k, l + 1);
      return pair_key(k, l - 1);
    }
    case Rule::Comb: {
      auto [k, l] = parse_pair(key);
      if (name == "a") return l == 0 ? pair_key(k + 1, 0) : key;
      if (name == "a^") return l == 0 ? pair_key(k - 1, 0) : key;
      if (name == "b") return pair_key(k, l + 1);
      return pair_key(k, l - 1);
    }
    case Rule::Line: {
      long k = parse_single(key);
      return single_key(name == "a" ? k + 1 : k - 1);
    }
    case Rule::YLine: {
      long k = parse_single(key);
      return single_key(name == "a" || name == "b" ? k + 1 : k - 1);
    }
    case Rule::XW: {
      auto [k, s] = parse_pair(key);
      if (name == "a") return pair_key(k + 1, s);
      if (name == "a^") return pair_key(k - 1, s);
      if (name == "b") return pair_key(k + 1, in_w(k) ? 1 - s : s);
      return pair_key(k - 1, in_w(k - 1) ? 1 - s : s);
    }
  }
  throw Error("unreachable");
}

std::string RuleBackend::describe() const {
  switch (rule_) {
    case Rule::Z2Lattice:
      return "rule(z2)";
    case Rule::Comb:
      return "rule(comb)";
    case Rule::Line:
      return "rule(line)";
    case Rule::YLine:
      return "rule(y_line)";
    case Rule::XW:
      return w_quadratic_ ? "rule(x_w,W=quadratic)" : "rule(x_w,W=explicit)";
  }
  return "rule(?)";
}

// ---------------------------------------------------------------------------
// Derived operations
// ---------------------------------------------------------------------------

LabelledGraph build_schreier(std::shared_ptr<const CosetSpace> space,
                             int radius) {
  LabelledGraph g(space->alphabet(), space->root_key(), space);
  g.ensure_ball({g.root()}, radius);
  return g;
}

bool word_problem_oracle(const CosetSpace& space, const Word& w) {
  std::string k = space.root_key();
  for (Letter a : w) k = space.act(k, a);
  return k == space.root_key();
}

VertexId universal_cover_map(const LabelledGraph& g, const Word& w) {
  if (!is_reduced(g.alphabet(), w))
    throw Error("universal_cover_map needs a reduced word");
  auto ends = step(g, g.root(), w);
  if (ends.size() != 1)
    throw Error("universal_cover_map needs a fully deterministic graph");
  return ends.front();
}

namespace {

void fundamental_rec(const LabelledGraph& g, VertexId v, int budget,
                     Letter banned, Word& prefix, std::set<Word>& out) {
  if (v == g.root()) out.insert(prefix);
  if (budget == 0) return;
  if (g.on_frontier(v))
    throw FrontierEscape("fundamental_group_sample: region too small");
  for (const auto& [a, dst] : g.out(v)) {
    if (a == banned) continue;
    prefix.push_back(a);
    fundamental_rec(g, dst, budget - 1, g.alphabet().inverse(a), prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::set<Word> fundamental_group_sample(const LabelledGraph& g, int max_len) {
  if (!g.alphabet().has_involution())
    throw NotSymmetric("fundamental group needs a symmetric alphabet");
  std::set<Word> out;
  Word prefix;
  fundamental_rec(g, g.root(), max_len, -1, prefix, out);
  return out;
}

std::set<Word> spanning_tree_generators(const LabelledGraph& g) {
  if (g.has_frontier())
    throw Error("spanning_tree_generators needs a fully explored graph");
  auto report = check_structure(g);
  if (!report.symmetric)
    throw NotSymmetric("spanning_tree_generators needs a symmetric graph");
  const Alphabet& sigma = g.alphabet();

  // BFS spanning tree from the root, label-lexicographic tie-breaking.
  std::vector<int> bfs_order(g.vertex_count(), -1);
  std::vector<Word> path_label(g.vertex_count());
  std::set<std::tuple<VertexId, Letter, VertexId>> tree;
  std::vector<VertexId> queue{g.root()};
  bfs_order[g.root()] = 0;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    VertexId v = queue[qi];
    for (const auto& [a, u] : g.out(v)) {
      if (bfs_order[u] < 0) {
        bfs_order[u] = static_cast<int>(queue.size());
        queue.push_back(u);
        path_label[u] = path_label[v];
        path_label[u].push_back(a);
        tree.insert({v, a, u});
        tree.insert({u, sigma.inverse(a), v});
      }
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (bfs_order[v] < 0)
      throw NotConnected("spanning_tree_generators: graph is not connected");

  std::set<Word> gens;
  std::set<std::tuple<VertexId, Letter, VertexId>> done;
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    for (const auto& [a, y] : g.out(x)) {
      std::tuple<VertexId, Letter, VertexId> e{x, a, y};
      std::tuple<VertexId, Letter, VertexId> rev{y, sigma.inverse(a), x};
      if (tree.count(e) || done.count(e)) continue;
      done.insert(e);
      done.insert(rev);
      // orient the pair: smaller (source BFS order, label) first
      VertexId ex = x, ey = y;
      Letter ea = a;
      if (std::make_pair(bfs_order[y], sigma.inverse(a)) <
          std::make_pair(bfs_order[x], a)) {
        ex = y;
        ey = x;
        ea = sigma.inverse(a);
      }
      Word w = path_label[ex];
      w.push_back(ea);
      Word back = invert_word(sigma, path_label[ey]);
      w.insert(w.end(), back.begin(), back.end());
      gens.insert(w);
    }
  }
  return gens;
}

std::shared_ptr<CosetSpace> make_tree_space(const Alphabet& sigma) {
  return std::make_shared<FreeGroupSubgroupBackend>(sigma, std::vector<Word>{});
}

// ---------------------------------------------------------------------------
// Backend description parsing
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> backend_tokens(const std::string& spec) {
  std::vector<std::string> toks;
  std::string cur;
  for (char c : spec) {
    if (c == ' ' || c == '\t' || c == ':' || c == '\n') {
      if (!cur.empty()) toks.push_back(cur), cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) toks.push_back(cur);
  return toks;
}

Word parse_dotted_word(const Alphabet& sigma, const std::string& tok) {
  Word w;
  size_t pos = 0;
  while (pos < tok.size()) {
    size_t dot = tok.find('.', pos);
    std::string name =
        tok.substr(pos, dot == std::string::npos ? dot : dot - pos);
    if (name != "eps" && !name.empty()) w.push_back(sigma.letter(name));
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  return w;
}

std::vector<std::string> split_commas(const std::string& tok) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : tok + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur), cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  return out;
}

std::vector<long> parse_int_list(const std::string& tok) {
  std::vector<long> out;
  for (const auto& piece : split_commas(tok)) out.push_back(std::stol(piece));
  return out;
}

std::shared_ptr<CosetSpace> parse_finite_table_file(
    const std::string& path, const std::vector<int>& subgroup) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open table file: " + path);
  int n = 0;
  std::vector<std::vector<int>> table;
  Alphabet sigma;
  std::vector<int> psi;
  std::string kw;
  while (in >> kw) {
    if (kw == "order") {
      in >> n;
    } else if (kw == "table") {
      if (n <= 0) throw ParseError("table file: order must precede table");
      table.assign(n, std::vector<int>(n));
      for (auto& row : table)
        for (int& x : row) in >> x;
    } else if (kw == "alphabet") {
      std::string mode;
      in >> mode;
      std::vector<std::string> names;
      std::string name;
      std::getline(in, name);
      std::istringstream ls(name);
      std::string t;
      while (ls >> t) names.push_back(t);
      sigma = mode == "sym" ? Alphabet::symmetric(names)
                            : Alphabet::plain(names);
    } else if (kw == "psi") {
      int g;
      std::string rest;
      std::getline(in, rest);
      std::istringstream ls(rest);
      while (ls >> g) psi.push_back(g);
    } else {
      throw ParseError("table file: unknown keyword " + kw);
    }
  }
  return std::make_shared<FiniteGroupBackend>(sigma, table, subgroup, psi);
}

}  // namespace

std::shared_ptr<CosetSpace> make_figure1_space() {
  // Z_2 = {1, t}, K = {1}, psi(a) = t, over the one-letter alphabet.
  return std::make_shared<FiniteGroupBackend>(
      Alphabet::plain({"a"}), std::vector<std::vector<int>>{{0, 1}, {1, 0}},
      std::vector<int>{0}, std::vector<int>{1});
}

std::shared_ptr<CosetSpace> parse_backend_spec(const std::string& spec) {
  auto toks = backend_tokens(spec);
  if (!toks.empty() && toks.front() == "backend") toks.erase(toks.begin());
  if (toks.empty()) throw ParseError("empty backend spec");
  const std::string kind = toks[0];

  if (kind == "rule") {
    if (toks.size() < 2) throw ParseError("rule backend needs a rule name");
    const std::string& name = toks[1];
    if (name == "z2") return std::make_shared<RuleBackend>(RuleBackend::Rule::Z2Lattice);
    if (name == "comb") return std::make_shared<RuleBackend>(RuleBackend::Rule::Comb);
    if (name == "line") return std::make_shared<RuleBackend>(RuleBackend::Rule::Line);
    if (name == "y_line") return std::make_shared<RuleBackend>(RuleBackend::Rule::YLine);
    if (name == "x_w") {
      for (size_t i = 2; i < toks.size(); ++i) {
        if (toks[i].rfind("W=", 0) == 0) {
          std::string val = toks[i].substr(2);
          if (val == "quadratic")
            return std::make_shared<RuleBackend>(RuleBackend::Rule::XW,
                                                 std::vector<long>{}, true);
          return std::make_shared<RuleBackend>(RuleBackend::Rule::XW,
                                               parse_int_list(val), false);
        }
      }
      throw ParseError("x_w rule needs W=<ints>|W=quadratic");
    }
    throw ParseError("unknown rule: " + name);
  }

  if (kind == "free-subgroup" || kind == "tree") {
    std::vector<std::string> letters;
    std::vector<std::string> gen_toks;
    size_t i = 1;
    if (i < toks.size() && toks[i] == "alphabet") ++i;
    for (; i < toks.size() && toks[i] != "gens"; ++i) letters.push_back(toks[i]);
    if (letters.empty()) letters = {"a", "a^", "b", "b^"};
    Alphabet sigma = Alphabet::symmetric(letters);
    if (i < toks.size() && toks[i] == "gens") ++i;
    for (; i < toks.size(); ++i) gen_toks.push_back(toks[i]);
    if (kind == "tree" && !gen_toks.empty())
      throw ParseError("tree backend takes no generators");
    std::vector<Word> gens;
    for (const auto& t : gen_toks)
      for (const auto& piece : split_commas(t))
        gens.push_back(parse_dotted_word(sigma, piece));
    return std::make_shared<FreeGroupSubgroupBackend>(sigma, gens);
  }

  if (kind == "finite") {
    if (toks.size() >= 2 && toks[1] == "z2") return make_figure1_space();
    std::string path;
    std::vector<int> subgroup;
    for (size_t i = 1; i + 1 < toks.size(); ++i) {
      if (toks[i] == "table") path = toks[i + 1];
      if (toks[i] == "subgroup")
        for (long x : parse_int_list(toks[i + 1]))
          subgroup.push_back(static_cast<int>(x));
    }
    if (path.empty()) throw ParseError("finite backend needs table <file>");
    return parse_finite_table_file(path, subgroup);
  }

  throw ParseError("unknown backend kind: " + kind);
}

}  // namespace conepda
