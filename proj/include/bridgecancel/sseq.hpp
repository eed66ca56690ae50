#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bridgecancel/rational.hpp"
#include "bridgecancel/word.hpp"

namespace bridgecancel {

using Term = std::int64_t;

/// A finite sequence of positive integers (run lengths).
class SSequence {
 public:
  SSequence() = default;
  SSequence(std::initializer_list<Term> terms);
  /// Throws DomainError if any term is < 1.
  explicit SSequence(std::vector<Term> terms);

  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  Term operator[](std::size_t i) const { return terms_[i]; }
  Term front() const { return terms_.front(); }
  Term back() const { return terms_.back(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Term sum() const;
  bool is_symmetric() const;
  SSequence reversed() const;
  SSequence concat(const SSequence& other) const;

  std::string to_string() const;

  friend bool operator==(const SSequence&, const SSequence&) = default;

 private:
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const SSequence& s);

/// An S-sequence considered up to rotation.
class CyclicSSequence {
 public:
  CyclicSSequence() = default;
  explicit CyclicSSequence(SSequence representative) : rep_(std::move(representative)) {}

  const SSequence& representative() const { return rep_; }
  std::size_t size() const { return rep_.size(); }
  /// Lexicographically least rotation.
  SSequence canonical() const;

  friend bool operator==(const CyclicSSequence& x, const CyclicSSequence& y);

 private:
  SSequence rep_;
};

std::ostream& operator<<(std::ostream& os, const CyclicSSequence& s);

/// Maximal same-sign run lengths of a nonempty reduced word.
SSequence s_sequence(const Word& w);
/// As s_sequence, merging the run that wraps from the end to the start.
CyclicSSequence cyclic_s_sequence(const CyclicWord& w);

/// S(q/p) from the closed form s_j = floor*(j p/q) - floor*((j-1) p/q),
/// j = 1..2q, where floor*(x) is the greatest integer strictly below x.
SSequence slope_sseq(const Rational& r);
inline CyclicSSequence cyclic_slope_sseq(const Rational& r) { return CyclicSSequence(slope_sseq(r)); }

/// Adds 1 to every term: CS(r~) -> CS(r) when m1 >= 2.
CyclicSSequence recurrence_up(const CyclicSSequence& cs_pred);

/// The two candidates for CS(r) when m1 == 1: each a_i of CS(r~) becomes
/// (2, (a_i - 2) ones), read forwards and backwards. Throws DomainError if
/// some a_i < 2.
std::pair<CyclicSSequence, CyclicSSequence> recurrence_flip(const CyclicSSequence& cs_pred);

/// CS(r) = ((S1, S2, S1, S2)) with S1, S2 symmetric, each occurring exactly
/// twice; S1 is empty iff k == 1.
struct Decomposition {
  SSequence s1;
  SSequence s2;
};

/// Built by recursion over the predecessor chain and checked against CS(r);
/// a mismatch raises InternalError.
Decomposition decompose(const ContinuedFraction& r);

/// Number of rotations of `cs` at which `pattern` reads off contiguously.
/// Throws DomainError on an empty pattern.
std::size_t count_cyclic_occurrences(const CyclicSSequence& cs, const SSequence& pattern);

/// k == 1: some term of cs_s is >= m1. k >= 2: (S1,S2) or (S2,S1) occurs as
/// a contiguous cyclic block of cs_s.
bool contains_pattern(const ContinuedFraction& r, const CyclicSSequence& cs_s);

/// With r = [m1..mk], s = [l1..lt]: t >= k, l_i = m_i for i < k, and either
/// l_k >= m_k or (l_k == m_k - 1 and t > k).
bool connection_conditions(const ContinuedFraction& r, const ContinuedFraction& s);

/// r1 < s < r2.
bool in_open_interval(const ContinuedFraction& r, const Rational& s);

}  // namespace bridgecancel
