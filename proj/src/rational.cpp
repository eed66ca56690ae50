#include "bridgecancel/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "bridgecancel/error.hpp"

namespace bridgecancel {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view text, std::string_view context) {
  text = trim(text);
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError("malformed integer '" + std::string(text) + "' in '" + std::string(context) + "'");
  }
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text), 10);
}

void require_finite(const Rational& x, const char* op) {
  if (x.is_infinite()) throw DomainError(std::string("arithmetic on inf in ") + op);
}

}  // namespace

Rational::Rational(Integer num, Integer den) {
  if (num == 0 && den == 0) throw DomainError("0/0 is not an extended rational");
  if (den == 0) {
    num_ = 1;
    den_ = 0;
    return;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1) {
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

Rational Rational::infinity() { return Rational(Integer(1), Integer(0), Normalized{}); }

Rational Rational::parse(std::string_view text) {
  const std::string_view t = trim(text);
  if (t == "inf" || t == "infinity" || t == "1/0") return infinity();
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(t, text), Integer(1));
  Integer num = parse_integer(t.substr(0, slash), text);
  Integer den = parse_integer(t.substr(slash + 1), text);
  if (num == 0 && den == 0) throw ParseError("0/0 is not a slope");
  return Rational(std::move(num), std::move(den));
}

std::string Rational::to_string() const {
  if (is_infinite()) return "inf";
  return num_.get_str() + "/" + den_.get_str();
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  if (x.is_infinite() || y.is_infinite()) {
    return x.is_infinite() <=> y.is_infinite();
  }
  const Integer lhs = x.num_ * y.den_;
  const Integer rhs = y.num_ * x.den_;
  const int c = cmp(lhs, rhs);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Rational operator+(const Rational& x, const Rational& y) {
  require_finite(x, "+");
  require_finite(y, "+");
  return Rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }

Rational operator*(const Rational& x, const Rational& y) {
  require_finite(x, "*");
  require_finite(y, "*");
  return Rational(x.num_ * y.num_, x.den_ * y.den_);
}

Rational operator/(const Rational& x, const Rational& y) {
  require_finite(x, "/");
  require_finite(y, "/");
  if (y.num_ == 0) throw DomainError("division by zero");
  return Rational(x.num_ * y.den_, x.den_ * y.num_);
}

Rational Rational::operator-() const {
  require_finite(*this, "negation");
  return Rational(Integer(-num_), den_, Normalized{});
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

Integer floor_star(const Rational& x) {
  if (x.is_infinite()) throw DomainError("floor_star of inf");
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
  return c - 1;
}

bool is_farey_neighbor(const Rational& x, const Rational& y) {
  const Integer d = x.num() * y.den() - x.den() * y.num();
  return abs(d) == 1;
}

Rational evaluate_continued_fraction(std::span<const Integer> terms) {
  // Backwards recurrence on (num, den) of the tail value.
  Integer num = 0;
  Integer den = 1;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    // tail <- 1 / (m + tail) = den / (m*den + num)
    Integer next_den = *it * den + num;
    num = std::move(den);
    den = std::move(next_den);
  }
  return Rational(std::move(num), std::move(den));
}

ContinuedFraction::ContinuedFraction(std::vector<Integer> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw DomainError("continued fraction must have at least one term");
  for (const auto& m : terms_) {
    if (m < 1) throw DomainError("continued fraction terms must be positive: " + to_string());
  }
  if (terms_.size() > 1 && terms_.back() < 2) {
    throw DomainError("continued fraction not in normal form (last term 1): " + to_string());
  }
}

ContinuedFraction ContinuedFraction::normalize(std::vector<Integer> terms) {
  if (terms.empty()) throw DomainError("continued fraction must have at least one term");
  for (const auto& m : terms) {
    if (m < 1) throw DomainError("continued fraction terms must be positive");
  }
  if (terms.size() > 1 && terms.back() == 1) {
    terms.pop_back();
    terms.back() += 1;
  }
  return ContinuedFraction(std::move(terms));
}

ContinuedFraction ContinuedFraction::parse(std::string_view text) {
  std::string_view t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
    throw ParseError("continued fraction must look like [m1,m2,...]: '" + std::string(text) + "'");
  }
  t = t.substr(1, t.size() - 2);
  std::vector<Integer> terms;
  while (true) {
    const auto comma = t.find(',');
    Integer m = parse_integer(t.substr(0, comma), text);
    if (m < 1) throw ParseError("continued fraction terms must be positive: '" + std::string(text) + "'");
    terms.push_back(std::move(m));
    if (comma == std::string_view::npos) break;
    t.remove_prefix(comma + 1);
  }
  return normalize(std::move(terms));
}

std::string ContinuedFraction::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += ',';
    out += terms_[i].get_str();
  }
  return out + "]";
}

std::ostream& operator<<(std::ostream& os, const ContinuedFraction& cf) { return os << cf.to_string(); }

ContinuedFraction cf_expand(const Rational& r) {
  if (r.is_infinite() || r <= Rational(0) || r > Rational(1)) {
    throw DomainError("continued fraction expansion needs 0 < r <= 1, got " + r.to_string());
  }
  // r = q/p; 1/r = p/q = m1 + rest, and so on down the Euclidean algorithm.
  Integer a = r.den();
  Integer b = r.num();
  std::vector<Integer> terms;
  while (b != 0) {
    Integer quotient;
    Integer rest;
    mpz_fdiv_qr(quotient.get_mpz_t(), rest.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    terms.push_back(std::move(quotient));
    a = std::move(b);
    b = std::move(rest);
  }
  return ContinuedFraction(std::move(terms));
}

ContinuedFraction predecessor(const ContinuedFraction& cf) {
  const auto& m = cf.terms();
  if (m.size() == 1 && m[0] == 1) throw DomainError("[1] has no predecessor");
  std::vector<Integer> out;
  if (m[0] >= 2) {
    out = m;
    out[0] -= 1;
  } else {
    out.assign(m.begin() + 1, m.end());
    out[0] += 1;
  }
  return ContinuedFraction(std::move(out));
}

bool precedes(const ContinuedFraction& x, const ContinuedFraction& y) {
  if (x.length() != y.length()) return x.length() < y.length();
  for (std::size_t j = 0; j < x.length(); ++j) {
    if (x[j] != y[j]) return x[j] < y[j];
  }
  return true;
}

IntervalEndpoints interval_endpoints(const ContinuedFraction& r) {
  const auto& m = r.terms();
  if (m.size() == 1 && m[0] == 1) throw DomainError("interval endpoints need 0 < r < 1");
  const std::span<const Integer> all(m);
  const Rational truncated = evaluate_continued_fraction(all.first(m.size() - 1));
  std::vector<Integer> lowered = m;
  lowered.back() -= 1;
  const Rational decremented = evaluate_continued_fraction(lowered);
  if (m.size() % 2 == 1) return {truncated, decremented};
  return {decremented, truncated};
}

Rational parse_slope(std::string_view text) {
  const std::string_view t = trim(text);
  if (!t.empty() && t.front() == '[') {
    try {
      return ContinuedFraction::parse(t).value();
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  return Rational::parse(t);
}

std::int64_t to_int64(const Integer& x, std::string_view what) {
  if (!x.fits_slong_p()) throw DomainError(std::string(what) + " does not fit in 64 bits");
  return x.get_si();
}

}  // namespace bridgecancel
