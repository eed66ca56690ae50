#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bridgecancel/rational.hpp"

namespace bridgecancel {

enum class Generator : std::uint8_t { a, b };

/// a^{±1} or b^{±1}. Stored as one signed byte (+1 a, -1 A, +2 b, -2 B) so
/// words can be handed to the byte kernels directly.
class Letter {
 public:
  constexpr Letter(Generator g, int exponent)
      : code_(static_cast<std::int8_t>((g == Generator::a ? 1 : 2) * (exponent < 0 ? -1 : 1))) {}

  static Letter from_char(char c);

  constexpr Generator generator() const { return (code_ == 1 || code_ == -1) ? Generator::a : Generator::b; }
  constexpr int exponent() const { return code_ > 0 ? 1 : -1; }
  constexpr Letter inverse() const { return Letter(generator(), -exponent()); }
  constexpr std::int8_t code() const { return code_; }
  /// 'a', 'A', 'b', 'B'.
  char to_char() const;

  friend constexpr bool operator==(Letter, Letter) = default;
  /// a < A < b < B
  friend constexpr std::strong_ordering operator<=>(Letter x, Letter y) {
    return x.rank() <=> y.rank();
  }

 private:
  constexpr int rank() const { return 2 * (generator() == Generator::a ? 0 : 1) + (code_ < 0 ? 1 : 0); }
  std::int8_t code_;
};

static_assert(sizeof(Letter) == 1);

inline constexpr Letter kA{Generator::a, 1};
inline constexpr Letter kAInv{Generator::a, -1};
inline constexpr Letter kB{Generator::b, 1};
inline constexpr Letter kBInv{Generator::b, -1};

/// A freely reduced word over {a, b}.
class Word {
 public:
  Word() = default;

  /// Parses the compact encoding ("abAB" = a b a^-1 b^-1) and freely reduces.
  static Word parse(std::string_view text);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  Word inverse() const;
  /// Cyclic permutation starting at letter `start`. Only meaningful for
  /// cyclically reduced words; the result is reduced in that case.
  Word rotated(std::size_t start) const;
  bool is_cyclically_reduced() const;

  std::string to_string() const;
  /// Signed generator tokens: a -> 1, A -> -1, b -> 2, B -> -2.
  std::vector<int> tokens() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& x, const Word& y);
  friend Word operator*(const Word& x, const Word& y);

 private:
  friend Word free_reduce(std::span<const Letter> letters);
  explicit Word(std::vector<Letter> reduced) : letters_(std::move(reduced)) {}

  std::vector<Letter> letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// Cancels adjacent x x^-1 pairs until none remain.
Word free_reduce(std::span<const Letter> letters);

/// A cyclically reduced word considered up to rotation.
class CyclicWord {
 public:
  CyclicWord() = default;
  /// Throws DomainError unless `w` is cyclically reduced.
  explicit CyclicWord(Word w);

  const Word& representative() const { return rep_; }
  std::size_t size() const { return rep_.size(); }
  /// Least rotation under a < A < b < B.
  Word canonical() const;

  friend bool operator==(const CyclicWord& x, const CyclicWord& y);

 private:
  Word rep_;
};

/// Free reduction followed by stripping conjugating letters x ... x^-1.
CyclicWord cyclic_reduce(const Word& w);

bool cyclically_equal(const CyclicWord& x, const CyclicWord& y);

/// Consecutive letters (including last -> first) use different generators.
bool is_cyclically_alternating(const CyclicWord& w);

/// The automorphism a -> a, b -> b^-1.
Word flip_b(const Word& w);

/// The relator u_{q/p} of the upper presentation, 0 < q/p <= 1:
///   p odd:  a û b^{(-1)^q} û^-1, û = b^{e1} a^{e2} ... b^{e(p-2)} a^{e(p-1)}
///   p even: a û a^-1 û^-1,       û = b^{e1} a^{e2} ... a^{e(p-2)} b^{e(p-1)}
/// with e_i = (-1)^floor(iq/p).
Word relator(const Rational& r);

}  // namespace bridgecancel
