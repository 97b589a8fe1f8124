#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "foxcalc/error.hpp"

namespace foxcalc {

/// Freely reduced word in a free group. A letter is a signed, 1-based
/// generator index: +i stands for x_i and -i for its inverse.
///
/// Words do not record an ambient rank; the containers that need one
/// (Endomorphism, GroupPresentation, FreeRingElement) carry it and check
/// letters against it.
class Word {
 public:
  Word() = default;
  /// Reduces eagerly. Zero letters are rejected.
  explicit Word(std::vector<int> letters);
  Word(std::initializer_list<int> letters) : Word(std::vector<int>(letters)) {}

  static Word generator(int index, int exponent = 1);

  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int max_index() const noexcept;

  Word inverse() const;
  Word pow(int exponent) const;

  friend Word operator*(const Word& a, const Word& b);
  Word& operator*=(const Word& b);

  friend bool operator==(const Word&, const Word&) = default;
  /// Shortlex: shorter words first, then lexicographic on letters.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<int> letters_;
};

/// Commutator [a, b] = a b a^-1 b^-1.
Word commutator(const Word& a, const Word& b);

/// Image of a word under the letter-substitution homomorphism given by
/// `images` (images[i-1] is the image of x_i).
Word substitute(const Word& w, const std::vector<Word>& images);

/// Endomorphism of F_rank, stored by the images of the generators.
class Endomorphism {
 public:
  Endomorphism() = default;
  Endomorphism(int rank, std::vector<Word> images);

  static Endomorphism identity(int rank);

  int rank() const noexcept { return rank_; }
  const std::vector<Word>& images() const noexcept { return images_; }
  const Word& image(int index) const { return images_.at(static_cast<std::size_t>(index - 1)); }

  Word apply(const Word& w) const;

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

 private:
  int rank_ = 0;
  std::vector<Word> images_;
};

/// (phi o psi)(x) = phi(psi(x)); maps act from the left.
Endomorphism compose(const Endomorphism& phi, const Endomorphism& psi);
Word apply_endo(const Endomorphism& phi, const Word& w);

/// Finite presentation <x_1..x_rank | relators>.
struct GroupPresentation {
  int rank = 0;
  std::vector<Word> relators;
  std::vector<std::string> labels;  // empty, or one label per generator

  void check() const;
};

/// zeta = [x_1, x_{g+1}] [x_2, x_{g+2}] ... [x_g, x_{2g}].
Word boundary_word(int genus);
bool fixes_boundary(const Endomorphism& phi, int genus);

// Text formats -------------------------------------------------------------

/// Tokens `x<k>` or `x<k>^<m>` separated by whitespace; "" or "1" is the identity.
Word parse_word(std::string_view text, int rank);
/// Same grammar, but tokens are looked up in `names` (name -> generator index).
Word parse_word_named(std::string_view text, const std::map<std::string, int, std::less<>>& names);

std::string to_string(const Word& w);
std::string to_string(const Word& w, const std::vector<std::string>& names);

/// One line per generator: `x<k> -> <word>`. Blank lines and `#` comments are skipped.
Endomorphism parse_endomorphism(std::string_view text);
std::string to_string(const Endomorphism& phi);

/// Header `rank <n>`, then `rel <word>` lines.
GroupPresentation parse_presentation(std::string_view text);
std::string to_string(const GroupPresentation& p);

}  // namespace foxcalc
