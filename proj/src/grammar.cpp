#include "conepda/grammar.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace conepda {

int Cfg::add_variable(const std::string& name) {
  for (size_t i = 0; i < variables.size(); ++i)
    if (variables[i] == name) return static_cast<int>(i);
  variables.push_back(name);
  return static_cast<int>(variables.size()) - 1;
}

int Cfg::variable(const std::string& name) const {
  for (size_t i = 0; i < variables.size(); ++i)
    if (variables[i] == name) return static_cast<int>(i);
  return -1;
}

std::string Cfg::rhs_to_string(const std::vector<GSym>& rhs) const {
  if (rhs.empty()) return "eps";
  std::string out;
  for (size_t i = 0; i < rhs.size(); ++i) {
    if (i) out += ' ';
    if (gsym_is_var(rhs[i]))
      out += variables[rhs[i]];
    else
      out += "'" + terminals.name(gsym_letter(rhs[i])) + "'";
  }
  return out;
}

CnfGrammar CnfGrammar::validate(Cfg g) {
  for (const auto& r : g.rules) {
    if (r.rhs.empty()) {
      if (r.lhs != g.start)
        throw ParseError("CNF: eps-rule allowed only at the start symbol");
      continue;
    }
    if (r.rhs.size() == 1) {
      if (gsym_is_var(r.rhs[0]))
        throw ParseError("CNF: unit rule at " + g.variables[r.lhs]);
      continue;
    }
    if (r.rhs.size() == 2) {
      if (!gsym_is_var(r.rhs[0]) || !gsym_is_var(r.rhs[1]))
        throw ParseError("CNF: binary rules must pair two variables");
      continue;
    }
    throw ParseError("CNF: rule too long at " + g.variables[r.lhs]);
  }
  bool has_eps = false;
  for (const auto& r : g.rules)
    if (r.rhs.empty()) has_eps = true;
  if (has_eps) {
    for (const auto& r : g.rules)
      for (GSym s : r.rhs)
        if (gsym_is_var(s) && s == g.start)
          throw ParseError("CNF: start symbol with eps-rule on a rhs");
  }
  return CnfGrammar{std::move(g)};
}

bool CnfGrammar::has_epsilon() const {
  for (const auto& r : g.rules)
    if (r.lhs == g.start && r.rhs.empty()) return true;
  return false;
}

GrammarShape is_regular_grammar(const Cfg& g) {
  bool linear = true, right_linear = true;
  for (const auto& r : g.rules) {
    int vars = 0;
    size_t last_var = 0;
    for (size_t i = 0; i < r.rhs.size(); ++i)
      if (gsym_is_var(r.rhs[i])) {
        ++vars;
        last_var = i;
      }
    if (vars > 1) {
      linear = right_linear = false;
      break;
    }
    if (vars == 1 && last_var + 1 != r.rhs.size()) right_linear = false;
  }
  if (right_linear) return GrammarShape::RightLinear;
  if (linear) return GrammarShape::Linear;
  return GrammarShape::General;
}

// ---------------------------------------------------------------------------
// CNF conversion
// ---------------------------------------------------------------------------

namespace {

std::vector<bool> generating_vars(const Cfg& g) {
  std::vector<bool> gen(g.variables.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : g.rules) {
      if (gen[r.lhs]) continue;
      bool ok = true;
      for (GSym s : r.rhs)
        if (gsym_is_var(s) && !gen[s]) ok = false;
      if (ok) {
        gen[r.lhs] = true;
        changed = true;
      }
    }
  }
  return gen;
}

std::vector<bool> reachable_vars(const Cfg& g) {
  std::vector<bool> reach(g.variables.size(), false);
  std::vector<int> stack{g.start};
  reach[g.start] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& r : g.rules) {
      if (r.lhs != v) continue;
      for (GSym s : r.rhs)
        if (gsym_is_var(s) && !reach[s]) {
          reach[s] = true;
          stack.push_back(s);
        }
    }
  }
  return reach;
}

}  // namespace

CnfGrammar to_cnf(const Cfg& input) {
  Cfg g = input;

  // fresh start symbol, never on a right-hand side
  int s0 = g.add_variable("_S0");
  g.rules.push_back({s0, {g.start}});
  g.start = s0;

  // nullable variables, then eps-rule elimination
  std::vector<bool> nullable(g.variables.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : g.rules) {
      if (nullable[r.lhs]) continue;
      bool all = true;
      for (GSym s : r.rhs)
        if (!gsym_is_var(s) || !nullable[s]) all = false;
      if (r.rhs.empty()) all = true;
      if (all) {
        nullable[r.lhs] = true;
        changed = true;
      }
    }
  }
  std::set<std::pair<int, std::vector<GSym>>> pool;
  for (const auto& r : g.rules) {
    // every subset of nullable occurrences may be dropped
    std::vector<size_t> opt;
    for (size_t i = 0; i < r.rhs.size(); ++i)
      if (gsym_is_var(r.rhs[i]) && nullable[r.rhs[i]]) opt.push_back(i);
    if (opt.size() > 16) throw Error("too many nullable positions in a rule");
    for (size_t mask = 0; mask < (size_t{1} << opt.size()); ++mask) {
      std::vector<GSym> rhs;
      for (size_t i = 0, oi = 0; i < r.rhs.size(); ++i) {
        bool drop = false;
        if (oi < opt.size() && opt[oi] == i) {
          drop = (mask >> oi) & 1;
          ++oi;
        }
        if (!drop) rhs.push_back(r.rhs[i]);
      }
      if (rhs.empty()) continue;
      pool.insert({r.lhs, rhs});
    }
  }
  if (nullable[s0]) pool.insert({s0, {}});

  // unit-rule elimination via transitive closure
  std::set<std::pair<int, int>> unit;
  for (const auto& [lhs, rhs] : pool)
    if (rhs.size() == 1 && gsym_is_var(rhs[0]) && lhs != rhs[0])
      unit.insert({lhs, rhs[0]});
  changed = true;
  while (changed) {
    changed = false;
    auto snapshot = unit;
    for (const auto& [a, b] : snapshot)
      for (const auto& [c, d] : snapshot)
        if (b == c && a != d && unit.insert({a, d}).second) changed = true;
  }
  std::set<std::pair<int, std::vector<GSym>>> pool2;
  for (const auto& [lhs, rhs] : pool) {
    if (rhs.size() == 1 && gsym_is_var(rhs[0])) continue;
    pool2.insert({lhs, rhs});
    for (const auto& [a, b] : unit)
      if (b == lhs) pool2.insert({a, rhs});
  }

  // lift terminals out of long rules, then binarize
  Cfg out;
  out.terminals = g.terminals;
  out.variables = g.variables;
  out.start = g.start;
  std::map<Letter, int> term_var;
  auto lift = [&](Letter a) {
    auto it = term_var.find(a);
    if (it != term_var.end()) return it->second;
    int v = out.add_variable("_T_" + out.terminals.name(a));
    out.rules.push_back({v, {gsym_term(a)}});
    term_var[a] = v;
    return v;
  };
  int chain = 0;
  for (const auto& [lhs, rhs0] : pool2) {
    std::vector<GSym> rhs = rhs0;
    if (rhs.size() >= 2)
      for (GSym& s : rhs)
        if (!gsym_is_var(s)) s = lift(gsym_letter(s));
    while (rhs.size() > 2) {
      int v = out.add_variable("_B" + std::to_string(chain++));
      out.rules.push_back({v, {rhs[rhs.size() - 2], rhs[rhs.size() - 1]}});
      rhs.pop_back();
      rhs.back() = v;
    }
    out.rules.push_back({lhs, rhs});
  }

  // reduce: keep only useful variables
  auto gen = generating_vars(out);
  if (!gen[out.start]) throw EmptyLanguage("grammar generates no word");
  std::vector<Production> kept;
  for (const auto& r : out.rules) {
    bool ok = gen[r.lhs];
    for (GSym s : r.rhs)
      if (gsym_is_var(s) && !gen[s]) ok = false;
    if (ok) kept.push_back(r);
  }
  out.rules = std::move(kept);
  auto reach = reachable_vars(out);
  std::vector<int> remap(out.variables.size(), -1);
  Cfg fin;
  fin.terminals = out.terminals;
  for (size_t v = 0; v < out.variables.size(); ++v)
    if (reach[v] && gen[v]) remap[v] = fin.add_variable(out.variables[v]);
  fin.start = remap[out.start];
  assert(fin.start >= 0);
  for (const auto& r : out.rules) {
    if (remap[r.lhs] < 0) continue;
    bool ok = true;
    std::vector<GSym> rhs = r.rhs;
    for (GSym& s : rhs) {
      if (gsym_is_var(s)) {
        if (remap[s] < 0) ok = false;
        s = remap[s];
      }
    }
    if (ok) fin.rules.push_back({remap[r.lhs], rhs});
  }
  std::sort(fin.rules.begin(), fin.rules.end(),
            [](const Production& a, const Production& b) {
              return std::tie(a.lhs, a.rhs) < std::tie(b.lhs, b.rhs);
            });
  fin.rules.erase(std::unique(fin.rules.begin(), fin.rules.end()),
                  fin.rules.end());
  return CnfGrammar::validate(std::move(fin));
}

// ---------------------------------------------------------------------------
// Shortest yields
// ---------------------------------------------------------------------------

MinYield min_yield(const CnfGrammar& cnf) {
  const Cfg& g = cnf.g;
  const int inf = 1 << 28;
  MinYield out;
  out.per_variable.assign(g.variables.size(), inf);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : g.rules) {
      int cand;
      if (r.rhs.empty())
        cand = 0;
      else if (r.rhs.size() == 1)
        cand = 1;
      else if (out.per_variable[r.rhs[0]] >= inf ||
               out.per_variable[r.rhs[1]] >= inf)
        continue;
      else
        cand = out.per_variable[r.rhs[0]] + out.per_variable[r.rhs[1]];
      if (cand < out.per_variable[r.lhs]) {
        out.per_variable[r.lhs] = cand;
        changed = true;
      }
    }
  }
  for (int v : out.per_variable) {
    if (v >= inf) throw Error("min_yield: grammar is not reduced");
    out.max = std::max(out.max, v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// CYK with witness
// ---------------------------------------------------------------------------

namespace {

struct CykTable {
  int n = 0;
  // back[i][len][v]: rule deriving w[i..i+len) from v, or -1
  std::vector<std::vector<std::vector<int>>> back;
  std::vector<std::vector<std::vector<int>>> split;

  bool has(int i, int len, int v) const { return back[i][len][v] >= 0; }
};

CykTable cyk_table(const CnfGrammar& cnf, const Word& w) {
  const Cfg& g = cnf.g;
  int nvars = static_cast<int>(g.variables.size());
  CykTable t;
  t.n = static_cast<int>(w.size());
  t.back.assign(t.n + 1, {});
  t.split.assign(t.n + 1, {});
  for (int i = 0; i <= t.n; ++i) {
    t.back[i].assign(t.n + 1, std::vector<int>(nvars, -1));
    t.split[i].assign(t.n + 1, std::vector<int>(nvars, -1));
  }
  for (int len = 1; len <= t.n; ++len) {
    for (int i = 0; i + len <= t.n; ++i) {
      for (size_t ri = 0; ri < g.rules.size(); ++ri) {
        const auto& r = g.rules[ri];
        if (t.back[i][len][r.lhs] >= 0) continue;
        if (len == 1 && r.rhs.size() == 1 && !gsym_is_var(r.rhs[0]) &&
            gsym_letter(r.rhs[0]) == w[i]) {
          t.back[i][len][r.lhs] = static_cast<int>(ri);
        } else if (r.rhs.size() == 2) {
          for (int k = 1; k < len; ++k) {
            if (t.has(i, k, r.rhs[0]) && t.has(i + k, len - k, r.rhs[1])) {
              t.back[i][len][r.lhs] = static_cast<int>(ri);
              t.split[i][len][r.lhs] = k;
              break;
            }
          }
        }
      }
    }
  }
  return t;
}

int build_tree(const CnfGrammar& cnf, const CykTable& t, const Word& w, int i,
               int len, int v, ParseTree& tree) {
  const Cfg& g = cnf.g;
  int ri = t.back[i][len][v];
  assert(ri >= 0);
  const auto& r = g.rules[ri];
  int node = static_cast<int>(tree.nodes.size());
  tree.nodes.push_back({v, ri, {}});
  if (r.rhs.size() == 1) {
    int leaf = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back({r.rhs[0], -1, {}});
    tree.nodes[node].children = {leaf};
  } else {
    int k = t.split[i][len][v];
    int left = build_tree(cnf, t, w, i, k, r.rhs[0], tree);
    int right = build_tree(cnf, t, w, i + k, len - k, r.rhs[1], tree);
    tree.nodes[node].children = {left, right};
  }
  return node;
}

}  // namespace

CykResult cyk_member(const CnfGrammar& cnf, const Word& w) {
  const Cfg& g = cnf.g;
  CykResult res;
  if (w.empty()) {
    for (size_t ri = 0; ri < g.rules.size(); ++ri) {
      if (g.rules[ri].lhs == g.start && g.rules[ri].rhs.empty()) {
        res.member = true;
        res.tree.nodes.push_back({g.start, static_cast<int>(ri), {}});
        res.tree.root = 0;
        res.rightmost = {{0, static_cast<int>(ri)}};
        return res;
      }
    }
    return res;
  }
  auto t = cyk_table(cnf, w);
  if (!t.has(0, t.n, g.start)) return res;
  res.member = true;
  res.tree.root = build_tree(cnf, t, w, 0, t.n, g.start, res.tree);
  res.rightmost = linearize(cnf, res.tree, true);
  return res;
}

bool cyk_derives(const CnfGrammar& cnf, int var, const Word& w) {
  if (w.empty()) {
    for (const auto& r : cnf.g.rules)
      if (r.lhs == var && r.rhs.empty()) return true;
    return false;
  }
  auto t = cyk_table(cnf, w);
  return t.has(0, t.n, var);
}

std::set<Word> enumerate_var_language(const CnfGrammar& cnf, int var,
                                      int max_len) {
  const Cfg& g = cnf.g;
  // by_len[v][l] = words of length exactly l derivable from v
  std::vector<std::vector<std::set<Word>>> by_len(
      g.variables.size(), std::vector<std::set<Word>>(max_len + 1));
  for (const auto& r : g.rules) {
    if (r.rhs.empty()) by_len[r.lhs][0].insert(Word{});
    if (r.rhs.size() == 1 && !gsym_is_var(r.rhs[0]) && max_len >= 1)
      by_len[r.lhs][1].insert(Word{gsym_letter(r.rhs[0])});
  }
  for (int len = 2; len <= max_len; ++len) {
    for (const auto& r : g.rules) {
      if (r.rhs.size() != 2) continue;
      for (int k = 1; k < len; ++k) {
        for (const Word& u : by_len[r.rhs[0]][k]) {
          for (const Word& v : by_len[r.rhs[1]][len - k]) {
            Word uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            by_len[r.lhs][len].insert(uv);
          }
        }
      }
    }
  }
  std::set<Word> out;
  for (int len = 0; len <= max_len; ++len)
    out.insert(by_len[var][len].begin(), by_len[var][len].end());
  return out;
}

Word sample_member(const CnfGrammar& cnf, std::mt19937& rng, int max_len) {
  const Cfg& g = cnf.g;
  auto my = min_yield(cnf);
  // sentential form; `need` = terminals emitted + sum of min yields pending
  std::vector<GSym> form{g.start};
  int need = my.per_variable[g.start];
  size_t pos = 0;
  while (pos < form.size()) {
    if (!gsym_is_var(form[pos])) {
      ++pos;
      continue;
    }
    int v = form[pos];
    std::vector<const Production*> feasible;
    for (const auto& r : g.rules) {
      if (r.lhs != v) continue;
      int delta;
      if (r.rhs.empty())
        delta = -my.per_variable[v];
      else if (r.rhs.size() == 1)
        delta = 1 - my.per_variable[v];
      else
        delta = my.per_variable[r.rhs[0]] + my.per_variable[r.rhs[1]] -
                my.per_variable[v];
      if (need + delta <= max_len) feasible.push_back(&r);
    }
    if (feasible.empty()) throw Error("sample_member: no feasible rule");
    std::uniform_int_distribution<size_t> pick(0, feasible.size() - 1);
    const Production& r = *feasible[pick(rng)];
    if (r.rhs.empty())
      need -= my.per_variable[v];
    else if (r.rhs.size() == 1)
      need += 1 - my.per_variable[v];
    else
      need += my.per_variable[r.rhs[0]] + my.per_variable[r.rhs[1]] -
              my.per_variable[v];
    form.erase(form.begin() + pos);
    form.insert(form.begin() + pos, r.rhs.begin(), r.rhs.end());
  }
  Word w;
  for (GSym s : form) w.push_back(gsym_letter(s));
  return w;
}

// ---------------------------------------------------------------------------
// Derivations and triangulation
// ---------------------------------------------------------------------------

Derivation linearize(const CnfGrammar& cnf, const ParseTree& t,
                     bool rightmost) {
  (void)cnf;
  // Sentential form as tree-node ids; rewrite the rightmost (or leftmost)
  // node that carries a rule.
  Derivation out;
  std::vector<int> form{t.root};
  while (true) {
    int pos = -1;
    if (rightmost) {
      for (int i = static_cast<int>(form.size()) - 1; i >= 0; --i)
        if (t.nodes[form[i]].rule >= 0) {
          pos = i;
          break;
        }
    } else {
      for (size_t i = 0; i < form.size(); ++i)
        if (t.nodes[form[i]].rule >= 0) {
          pos = static_cast<int>(i);
          break;
        }
    }
    if (pos < 0) break;
    const ParseNode& node = t.nodes[form[pos]];
    out.push_back({pos, node.rule});
    std::vector<int> next(form.begin(), form.begin() + pos);
    next.insert(next.end(), node.children.begin(), node.children.end());
    next.insert(next.end(), form.begin() + pos + 1, form.end());
    form = std::move(next);
  }
  return out;
}

PolygonTriangulation triangulate(const CnfGrammar& cnf, const Word& w,
                                 const Derivation& d) {
  const Cfg& g = cnf.g;
  // Replay the derivation, rebuilding the tree it came from.
  ParseTree t;
  t.nodes.push_back({g.start, -1, {}});
  t.root = 0;
  std::vector<int> form{0};
  for (const auto& [pos, ri] : d) {
    if (pos < 0 || pos >= static_cast<int>(form.size()))
      throw InvalidDerivation("step position out of range");
    if (ri < 0 || ri >= static_cast<int>(g.rules.size()))
      throw InvalidDerivation("unknown rule in derivation");
    const auto& rule = g.rules[ri];
    int node = form[pos];
    if (t.nodes[node].rule >= 0)
      throw InvalidDerivation("symbol already rewritten");
    if (!gsym_is_var(t.nodes[node].sym) || t.nodes[node].sym != rule.lhs)
      throw InvalidDerivation("rule does not match the symbol at position");
    t.nodes[node].rule = ri;
    std::vector<int> kids;
    for (GSym s : rule.rhs) {
      kids.push_back(static_cast<int>(t.nodes.size()));
      t.nodes.push_back({s, -1, {}});
    }
    t.nodes[node].children = kids;
    std::vector<int> next(form.begin(), form.begin() + pos);
    next.insert(next.end(), kids.begin(), kids.end());
    next.insert(next.end(), form.begin() + pos + 1, form.end());
    form = std::move(next);
  }
  // the final form must spell w
  Word spelled;
  for (int id : form) {
    const ParseNode& node = t.nodes[id];
    if (gsym_is_var(node.sym))
      throw InvalidDerivation("derivation leaves an unrewritten variable");
    spelled.push_back(gsym_letter(node.sym));
  }
  if (spelled != w)
    throw InvalidDerivation("derivation spells a different word");

  // spans by post-order walk, diagonals from internal spans of length >= 2
  PolygonTriangulation tri;
  tri.n = static_cast<int>(w.size());
  int cursor = 0;
  std::vector<std::pair<int, int>> span(t.nodes.size(), {-1, -1});
  std::vector<std::pair<int, bool>> stack{{t.root, false}};
  while (!stack.empty()) {
    auto [id, done] = stack.back();
    stack.pop_back();
    const ParseNode& node = t.nodes[id];
    if (!done) {
      if (node.children.empty()) {
        span[id] = {cursor, gsym_is_var(node.sym) ? cursor : cursor + 1};
        cursor = span[id].second;
        continue;
      }
      stack.push_back({id, true});
      for (auto it = node.children.rbegin(); it != node.children.rend(); ++it)
        stack.push_back({*it, false});
    } else {
      span[id] = {span[node.children.front()].first,
                  span[node.children.back()].second};
    }
  }
  for (size_t id = 0; id < t.nodes.size(); ++id) {
    if (static_cast<int>(id) == t.root) continue;
    const ParseNode& node = t.nodes[id];
    if (!gsym_is_var(node.sym)) continue;
    auto [i, j] = span[id];
    if (j - i >= 2) tri.diagonals.push_back({i, node.sym, j});
  }
  std::sort(tri.diagonals.begin(), tri.diagonals.end());

  // post-check: each diagonal derives its subword
  for (const auto& dgl : tri.diagonals) {
    Word sub(w.begin() + dgl.i, w.begin() + dgl.j);
    if (!cyk_derives(cnf, dgl.var, sub))
      throw InvalidDerivation("diagonal does not derive its subword");
  }
  return tri;
}

std::string triangulation_to_dot(const CnfGrammar& g, const Word& w,
                                 const PolygonTriangulation& t) {
  std::ostringstream os;
  os << "graph polygon {\n  layout=circo;\n";
  for (int i = 0; i <= t.n; ++i)
    os << "  t" << i << " [label=\"t" << i << "\"];\n";
  for (int i = 1; i <= t.n; ++i)
    os << "  t" << (i - 1) << " -- t" << i << " [label=\""
       << g.g.terminals.name(w[i - 1]) << "\"];\n";
  os << "  t0 -- t" << t.n << " [label=\"" << g.g.variables[g.g.start]
     << "\", style=bold];\n";
  for (const auto& d : t.diagonals)
    os << "  t" << d.i << " -- t" << d.j << " [label=\""
       << g.g.variables[d.var] << "\", style=dashed];\n";
  os << "}\n";
  return os.str();
}

bool diagonal_distance_check(const CnfGrammar& g, LabelledGraph& graph,
                             VertexId x, const Word& w) {
  return diagonal_distance_check(g, min_yield(g), graph, x, w);
}

bool diagonal_distance_check(const CnfGrammar& g, const MinYield& yields,
                             LabelledGraph& graph, VertexId x, const Word& w) {
  auto res = cyk_member(g, w);
  if (!res.member) throw NotInLanguage("word is not in the grammar language");
  auto tri = triangulate(g, w, res.rightmost);

  // trace the path, expanding only along it; prefix_at[i] = x^{a_1..a_i}
  std::vector<VertexId> prefix_at{x};
  for (Letter a : w) {
    graph.expand(prefix_at.back());
    auto nxt = step(graph, prefix_at.back(), Word{a});
    if (nxt.size() != 1)
      throw Error("diagonal_distance_check needs a deterministic trace");
    prefix_at.push_back(nxt.front());
  }
  for (const auto& d : tri.diagonals) {
    int cap = yields.per_variable[d.var];
    if (bounded_distance(graph, prefix_at[d.i], prefix_at[d.j], cap) < 0)
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

Cfg parse_grammar_text(const Alphabet& terminals, std::string_view text) {
  Cfg g;
  g.terminals = terminals;
  bool saw_start = false;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw) || kw[0] == '#') continue;
    if (kw == "start") {
      std::string name;
      if (!(ls >> name)) throw ParseError("start line needs a variable");
      g.start = g.add_variable(name);
      saw_start = true;
    } else if (kw == "rule") {
      std::string lhs, arrow;
      if (!(ls >> lhs >> arrow) || arrow != "->")
        throw ParseError("rule line needs <lhs> -> <rhs>");
      Production p{g.add_variable(lhs), {}};
      std::string tok;
      while (ls >> tok) {
        if (tok == "eps") continue;
        if (tok.size() >= 2 && tok.front() == '\'' && tok.back() == '\'')
          p.rhs.push_back(
              gsym_term(terminals.letter(tok.substr(1, tok.size() - 2))));
        else
          p.rhs.push_back(g.add_variable(tok));
      }
      g.rules.push_back(std::move(p));
    } else {
      throw ParseError("unknown grammar line: " + kw);
    }
  }
  if (!saw_start) throw ParseError("grammar text has no start line");
  return g;
}

std::string grammar_to_text(const Cfg& g) {
  std::ostringstream os;
  os << "start " << g.variables[g.start] << "\n";
  for (const auto& r : g.rules)
    os << "rule " << g.variables[r.lhs] << " -> " << g.rhs_to_string(r.rhs)
       << "\n";
  return os.str();
}

}  // namespace conepda
