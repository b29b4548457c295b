#ifndef CONEPDA_WORDS_HPP
#define CONEPDA_WORDS_HPP

#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "conepda/errors.hpp"

namespace conepda {

using Letter = int;
using Word = std::vector<Letter>;

// A finite, ordered label set, optionally equipped with a proper involution
// a <-> a^ (no fixed points).  Letter values index the declaration order,
// which is also the order used by every canonical construction downstream.
class Alphabet {
 public:
  Alphabet() = default;

  // `names` lists involution pairs consecutively: {a, a^, b, b^, ...}.
  static Alphabet symmetric(const std::vector<std::string>& names);
  static Alphabet plain(const std::vector<std::string>& names);

  // Text syntax `alphabet a a^ b b^`; the leading keyword is optional.
  static Alphabet parse_symmetric(std::string_view text);

  int size() const { return static_cast<int>(names_.size()); }
  bool has_involution() const { return !inverse_.empty(); }
  Letter inverse(Letter a) const;
  const std::string& name(Letter a) const { return names_.at(a); }
  Letter letter(std::string_view name) const;
  bool has_letter(std::string_view name) const;

  bool operator==(const Alphabet& other) const {
    return names_ == other.names_ && inverse_ == other.inverse_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Letter> inverse_;  // empty when plain
  std::unordered_map<std::string, Letter> index_;
};

// Words are read and printed as whitespace-separated letter names; the empty
// word prints as "eps".
Word parse_word(const Alphabet& sigma, std::string_view text);
std::string format_word(const Alphabet& sigma, const Word& w);

bool is_reduced(const Alphabet& sigma, const Word& w);

// Iterated cancellation of adjacent a a^ factors; the result is the unique
// reduced form.
Word free_reduce(const Alphabet& sigma, const Word& w);

// Letterwise involution of the reversal.
Word invert_word(const Alphabet& sigma, const Word& w);

// Product in the free group on the positive letters: reduce(v . w).
Word group_multiply(const Alphabet& sigma, const Word& v, const Word& w);

}  // namespace conepda

#endif
