#include "conepda/words.hpp"

#include <sstream>

namespace conepda {

namespace {

std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',') {
      if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

}  // namespace

Alphabet Alphabet::symmetric(const std::vector<std::string>& names) {
  if (names.empty() || names.size() % 2 != 0)
    throw ParseError("symmetric alphabet needs a positive even letter count");
  Alphabet sigma = plain(names);
  sigma.inverse_.resize(names.size());
  for (size_t i = 0; i + 1 < names.size(); i += 2) {
    sigma.inverse_[i] = static_cast<Letter>(i + 1);
    sigma.inverse_[i + 1] = static_cast<Letter>(i);
  }
  return sigma;
}

Alphabet Alphabet::plain(const std::vector<std::string>& names) {
  Alphabet sigma;
  for (const auto& n : names) {
    if (n.empty()) throw ParseError("empty letter name");
    if (sigma.index_.count(n)) throw ParseError("duplicate letter: " + n);
    sigma.index_[n] = static_cast<Letter>(sigma.names_.size());
    sigma.names_.push_back(n);
  }
  return sigma;
}

Alphabet Alphabet::parse_symmetric(std::string_view text) {
  auto toks = split_tokens(text);
  if (!toks.empty() && toks.front() == "alphabet") toks.erase(toks.begin());
  return symmetric(toks);
}

Letter Alphabet::inverse(Letter a) const {
  if (!has_involution()) throw Error("alphabet has no involution");
  return inverse_.at(a);
}

Letter Alphabet::letter(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end())
    throw ParseError("unknown letter: " + std::string(name));
  return it->second;
}

bool Alphabet::has_letter(std::string_view name) const {
  return index_.count(std::string(name)) != 0;
}

Word parse_word(const Alphabet& sigma, std::string_view text) {
  Word w;
  for (const auto& tok : split_tokens(text)) {
    if (tok == "eps" || tok == "epsilon") continue;
    w.push_back(sigma.letter(tok));
  }
  return w;
}

std::string format_word(const Alphabet& sigma, const Word& w) {
  if (w.empty()) return "eps";
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << sigma.name(w[i]);
  }
  return os.str();
}

bool is_reduced(const Alphabet& sigma, const Word& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i + 1] == sigma.inverse(w[i])) return false;
  return true;
}

Word free_reduce(const Alphabet& sigma, const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter a : w) {
    if (!out.empty() && a == sigma.inverse(out.back()))
      out.pop_back();
    else
      out.push_back(a);
  }
  return out;
}

Word invert_word(const Alphabet& sigma, const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back(sigma.inverse(*it));
  return out;
}

Word group_multiply(const Alphabet& sigma, const Word& v, const Word& w) {
  Word cat = v;
  cat.insert(cat.end(), w.begin(), w.end());
  return free_reduce(sigma, cat);
}

}  // namespace conepda
