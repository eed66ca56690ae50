#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace bridgecancel {

using Integer = mpz_class;

/// An element of Q ∪ {∞}, kept in lowest terms with a non-negative
/// denominator. ∞ is stored as 1/0 (so -1/0 and 1/0 are the same point).
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long value) : num_(value), den_(1) {}  // NOLINT(implicit)
  Rational(Integer num, Integer den);

  static Rational infinity();

  /// Accepts "q/p", "n", "-q/p" and "inf".
  static Rational parse(std::string_view text);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }
  bool is_infinite() const { return den_ == 0; }
  bool is_finite() const { return den_ != 0; }

  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  /// Total order with ∞ above every finite value.
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

  // Arithmetic is defined on finite values only; ∞ operands throw DomainError.
  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  friend Rational operator/(const Rational& x, const Rational& y);
  Rational operator-() const;

 private:
  struct Normalized {};
  Rational(Integer num, Integer den, Normalized)
      : num_(std::move(num)), den_(std::move(den)) {}

  Integer num_;
  Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

/// Greatest integer strictly smaller than x, i.e. ceil(x) - 1. Finite x only.
Integer floor_star(const Rational& x);

/// |x.num * y.den - x.den * y.num| == 1; ∞ takes part as 1/0.
bool is_farey_neighbor(const Rational& x, const Rational& y);

/// Evaluates 1/(t1 + 1/(t2 + ... + 1/tk)) for an arbitrary list of positive
/// terms; the empty list evaluates to 0.
Rational evaluate_continued_fraction(std::span<const Integer> terms);

/// A continued fraction [m1, ..., mk] in normal form: all terms positive,
/// mk >= 2 unless k == 1. Its value lies in (0, 1].
class ContinuedFraction {
 public:
  /// Throws DomainError unless `terms` is already in normal form.
  explicit ContinuedFraction(std::vector<Integer> terms);

  /// Folds a trailing 1 into the previous term, so [3,2,1] becomes [3,3].
  static ContinuedFraction normalize(std::vector<Integer> terms);

  /// Accepts "[m1,m2,...]" (normalizing a trailing 1).
  static ContinuedFraction parse(std::string_view text);

  const std::vector<Integer>& terms() const { return terms_; }
  std::size_t length() const { return terms_.size(); }
  const Integer& operator[](std::size_t i) const { return terms_[i]; }
  const Integer& front() const { return terms_.front(); }

  Rational value() const { return evaluate_continued_fraction(terms_); }
  std::string to_string() const;

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

 private:
  std::vector<Integer> terms_;
};

std::ostream& operator<<(std::ostream& os, const ContinuedFraction& cf);

/// Euclidean expansion of 0 < r <= 1.
ContinuedFraction cf_expand(const Rational& r);
inline Rational cf_value(const ContinuedFraction& cf) { return cf.value(); }

/// [m1-1, m2, ..., mk] when m1 >= 2, [m2+1, m3, ..., mk] when m1 == 1.
/// Throws DomainError for [1], which has no predecessor.
ContinuedFraction predecessor(const ContinuedFraction& cf);

/// The well-ordering on normal forms: shorter expansions come first, equal
/// lengths compare lexicographically. Reflexive.
bool precedes(const ContinuedFraction& x, const ContinuedFraction& y);

struct IntervalEndpoints {
  Rational r1;  ///< I1 = [0, r1]
  Rational r2;  ///< I2 = [r2, 1]
};

/// Endpoints of the boundary intervals of the fundamental domain for
/// 0 < r < 1. With r = [m1..mk], the two candidates are [m1..m(k-1)] and
/// [m1..m(k-1), mk - 1]; the parity of k decides which is the lower one.
IntervalEndpoints interval_endpoints(const ContinuedFraction& r);

/// Parses either a rational ("5/17", "inf") or a continued fraction
/// ("[3,2,2]") and returns the rational it denotes.
Rational parse_slope(std::string_view text);

/// Narrows to int64 or throws DomainError naming `what`.
std::int64_t to_int64(const Integer& x, std::string_view what);

}  // namespace bridgecancel
