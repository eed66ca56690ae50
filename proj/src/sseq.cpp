#include "bridgecancel/sseq.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "bridgecancel/cyclic.hpp"
#include "bridgecancel/error.hpp"

namespace bridgecancel {

namespace {

// Slopes whose S-sequence would need more than this many terms are refused.
constexpr std::int64_t kMaxMaterializedDenominator = std::int64_t{1} << 30;

void append_ones(std::vector<Term>& out, Term count) {
  out.insert(out.end(), static_cast<std::size_t>(count), Term{1});
}

SSequence shifted(const SSequence& s, Term by) {
  std::vector<Term> out(s.begin(), s.end());
  for (auto& t : out) t += by;
  return SSequence(std::move(out));
}

Decomposition build_decomposition(std::span<const Integer> m) {
  if (m.size() == 1) return {SSequence{}, SSequence{to_int64(m[0], "continued fraction term")}};

  if (m[0] >= 2) {
    // Repeated Case 1 steps down to [1, m2, ..., mk]: every term moves by m1 - 1.
    std::vector<Integer> base(m.begin(), m.end());
    base[0] = 1;
    const Decomposition d = build_decomposition(base);
    const Term by = to_int64(m[0], "continued fraction term") - 1;
    return {shifted(d.s1, by), shifted(d.s2, by)};
  }

  const Term m2 = to_int64(m[1], "continued fraction term");
  if (m.size() == 2) {
    std::vector<Term> ones;
    append_ones(ones, m2 - 1);
    return {SSequence{2}, SSequence(std::move(ones))};
  }

  std::vector<Integer> tail(m.begin() + 1, m.end());
  tail[0] += 1;
  const Decomposition pred = build_decomposition(tail);

  std::vector<Term> s1;
  for (Term a : pred.s2) {
    s1.push_back(2);
    append_ones(s1, a - 2);
  }
  s1.push_back(2);

  std::vector<Term> s2;
  for (std::size_t i = 0; i < pred.s1.size(); ++i) {
    if (i) s2.push_back(2);
    append_ones(s2, pred.s1[i] - 2);
  }
  return {SSequence(std::move(s1)), SSequence(std::move(s2))};
}

}  // namespace

SSequence::SSequence(std::initializer_list<Term> terms) : SSequence(std::vector<Term>(terms)) {}

SSequence::SSequence(std::vector<Term> terms) : terms_(std::move(terms)) {
  for (Term t : terms_) {
    if (t < 1) throw DomainError("S-sequence terms must be positive");
  }
}

Term SSequence::sum() const { return std::accumulate(terms_.begin(), terms_.end(), Term{0}); }

bool SSequence::is_symmetric() const { return std::equal(terms_.begin(), terms_.end(), terms_.rbegin()); }

SSequence SSequence::reversed() const { return SSequence(std::vector<Term>(terms_.rbegin(), terms_.rend())); }

SSequence SSequence::concat(const SSequence& other) const {
  std::vector<Term> out(terms_);
  out.insert(out.end(), other.terms_.begin(), other.terms_.end());
  return SSequence(std::move(out));
}

std::string SSequence::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(terms_[i]);
  }
  return out + ")";
}

std::ostream& operator<<(std::ostream& os, const SSequence& s) { return os << s.to_string(); }

SSequence CyclicSSequence::canonical() const {
  const auto terms = rep_.terms();
  return SSequence(cyclic::rotate_left(terms, cyclic::least_rotation(terms)));
}

bool operator==(const CyclicSSequence& x, const CyclicSSequence& y) {
  return cyclic::is_rotation(x.representative().terms(), y.representative().terms());
}

std::ostream& operator<<(std::ostream& os, const CyclicSSequence& s) {
  return os << "(" << s.representative().to_string() << ")";
}

SSequence s_sequence(const Word& w) {
  if (w.empty()) throw DomainError("S-sequence of the empty word");
  std::vector<Term> runs;
  int sign = 0;
  for (Letter x : w.letters()) {
    if (x.exponent() == sign) {
      ++runs.back();
    } else {
      runs.push_back(1);
      sign = x.exponent();
    }
  }
  return SSequence(std::move(runs));
}

CyclicSSequence cyclic_s_sequence(const CyclicWord& w) {
  const Word& rep = w.representative();
  const SSequence linear = s_sequence(rep);
  std::vector<Term> runs(linear.begin(), linear.end());
  if (runs.size() > 1 && rep.front().exponent() == rep.back().exponent()) {
    runs.front() += runs.back();
    runs.pop_back();
  }
  return CyclicSSequence(SSequence(std::move(runs)));
}

SSequence slope_sseq(const Rational& r) {
  if (r.is_infinite() || r <= Rational(0) || r > Rational(1)) {
    throw DomainError("S-sequence of slope needs 0 < r <= 1, got " + r.to_string());
  }
  const std::int64_t q = to_int64(r.num(), "slope numerator");
  const std::int64_t p = to_int64(r.den(), "slope denominator");
  if (p > kMaxMaterializedDenominator) throw DomainError("slope denominator too large to materialize");

  // floor*(a/q) = ceil(a/q) - 1 for a >= 0, and floor*(0) = -1.
  auto floor_star_over_q = [q](std::int64_t a) { return (a + q - 1) / q - 1; };
  std::vector<Term> terms;
  terms.reserve(static_cast<std::size_t>(2 * q));
  std::int64_t prev = floor_star_over_q(0);
  for (std::int64_t j = 1; j <= 2 * q; ++j) {
    const std::int64_t cur = floor_star_over_q(j * p);
    terms.push_back(cur - prev);
    prev = cur;
  }
  return SSequence(std::move(terms));
}

CyclicSSequence recurrence_up(const CyclicSSequence& cs_pred) {
  return CyclicSSequence(shifted(cs_pred.representative(), 1));
}

std::pair<CyclicSSequence, CyclicSSequence> recurrence_flip(const CyclicSSequence& cs_pred) {
  const SSequence& a = cs_pred.representative();
  for (Term t : a) {
    if (t < 2) throw DomainError("recurrence_flip needs every term >= 2, got " + a.to_string());
  }
  auto unpack = [](auto first, auto last) {
    std::vector<Term> out;
    for (; first != last; ++first) {
      out.push_back(2);
      append_ones(out, *first - 2);
    }
    return CyclicSSequence(SSequence(std::move(out)));
  };
  const auto terms = a.terms();
  return {unpack(terms.begin(), terms.end()), unpack(terms.rbegin(), terms.rend())};
}

Decomposition decompose(const ContinuedFraction& r) {
  Decomposition d = build_decomposition(r.terms());
  const CyclicSSequence expected = cyclic_slope_sseq(r.value());
  const SSequence half = d.s1.concat(d.s2);
  if (!(CyclicSSequence(half.concat(half)) == expected)) {
    throw InternalError("decomposition of " + r.to_string() + " does not reproduce CS(r)");
  }
  return d;
}

std::size_t count_cyclic_occurrences(const CyclicSSequence& cs, const SSequence& pattern) {
  if (pattern.empty()) throw DomainError("cannot count occurrences of an empty pattern");
  return cyclic::cyclic_match_positions(cs.representative().terms(), pattern.terms()).size();
}

bool contains_pattern(const ContinuedFraction& r, const CyclicSSequence& cs_s) {
  if (r.length() == 1) {
    if (r.front() == 1) throw DomainError("contains_pattern needs 0 < r < 1");
    const Term m1 = to_int64(r.front(), "continued fraction term");
    const auto terms = cs_s.representative().terms();
    return std::any_of(terms.begin(), terms.end(), [m1](Term t) { return t >= m1; });
  }
  const Decomposition d = decompose(r);
  return count_cyclic_occurrences(cs_s, d.s1.concat(d.s2)) > 0 ||
         count_cyclic_occurrences(cs_s, d.s2.concat(d.s1)) > 0;
}

bool connection_conditions(const ContinuedFraction& r, const ContinuedFraction& s) {
  const std::size_t k = r.length();
  const std::size_t t = s.length();
  if (t < k) return false;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (s[i] != r[i]) return false;
  }
  const Integer& lk = s[k - 1];
  const Integer& mk = r[k - 1];
  return lk >= mk || (lk == mk - 1 && t > k);
}

bool in_open_interval(const ContinuedFraction& r, const Rational& s) {
  const auto [r1, r2] = interval_endpoints(r);
  return r1 < s && s < r2;
}

}  // namespace bridgecancel
