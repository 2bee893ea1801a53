#pragma once

// Words in a finitely generated group.
//
// A letter is stored as code = 2*generator + (inverse ? 1 : 0), which gives
// the total order a < A < b < B < ... used for shortlex comparison. The text
// form writes generator k as the k-th lowercase letter and its inverse in
// uppercase, so "aBc" is a * b^-1 * c.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fsimple {

using Letter = std::uint8_t;

constexpr Letter make_letter(int gen, bool inverse) noexcept {
  return static_cast<Letter>(2 * gen + (inverse ? 1 : 0));
}
constexpr int letter_gen(Letter l) noexcept { return l >> 1; }
constexpr bool letter_inverse(Letter l) noexcept { return (l & 1) != 0; }
constexpr Letter letter_inv(Letter l) noexcept { return static_cast<Letter>(l ^ 1); }

class Word {
 public:
  Word() = default;
  // Freely reduces the input.
  explicit Word(const std::vector<Letter>& letters);
  // Throws InvalidArgument on characters outside [a-zA-Z].
  static Word parse(std::string_view text);
  static Word generator(int gen, bool inverse = false) { return Word({make_letter(gen, inverse)}); }

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  int max_gen() const noexcept;  // -1 for the empty word

  std::string str() const;
  Word inverse() const;
  Word pow(int n) const;  // negative n uses the inverse
  Word prefix(std::size_t n) const;

  friend Word operator*(const Word& u, const Word& v);
  friend bool operator==(const Word&, const Word&) = default;
  // Shortlex: shorter first, then letter codes lexicographically.
  friend bool operator<(const Word& u, const Word& v) noexcept;

 private:
  std::vector<Letter> letters_;
};

// Removes matching first/last letter pairs.
Word cyclic_reduce(const Word& w);

bool is_cyclically_reduced(const Word& w) noexcept;

// Shortlex-least word among all rotations of the cyclic reduction of w and
// of its inverse.
Word canonical_cyclic(const Word& w);

// Smallest u with cyclic_reduce(w) a rotation of u^k; returns k.
int cyclic_period_count(const Word& cyclic);

// Free-homotopy class of an unoriented closed curve.
struct ConjClass {
  Word canonical;
  bool primitive = true;

  static ConjClass of(const Word& w);
  // Class of the primitive root (canonical word of the shortest period).
  ConjClass root() const;
  friend bool operator==(const ConjClass& x, const ConjClass& y) { return x.canonical == y.canonical; }
  friend bool operator<(const ConjClass& x, const ConjClass& y) { return x.canonical < y.canonical; }
};

// All canonical class words of length 1..radius over `ngens` generators, in
// shortlex order.
std::vector<ConjClass> enumerate_cyclic_classes(int ngens, int radius);

// Exponent sum of generator dualIndex in w, reduced into {0, 1, 2}.
int mod3_class(const Word& w, int dualIndex);

}  // namespace fsimple
