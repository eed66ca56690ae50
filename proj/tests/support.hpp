#pragma once

// Test-side generators and oracles. Nothing here calls into the library
// except for type conversions, so the oracles stay independent of the code
// they check.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bridgecancel/rational.hpp"

namespace testsupport {

using bridgecancel::Integer;
using bridgecancel::Rational;

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed'b71d'9e00ull);
  return engine;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

struct Slope {
  std::int64_t q;
  std::int64_t p;
  Rational value() const { return Rational(Integer(q), Integer(p)); }
};

/// Random reduced q/p with 0 < q < p <= max_den.
inline Slope random_slope(std::int64_t max_den) {
  for (;;) {
    const std::int64_t p = uniform(2, max_den);
    const std::int64_t q = uniform(1, p - 1);
    if (std::gcd(q, p) == 1) return {q, p};
  }
}

/// Every reduced q/p with 0 < q < p <= max_den, by p then q.
inline std::vector<Slope> all_slopes(std::int64_t max_den) {
  std::vector<Slope> out;
  for (std::int64_t p = 2; p <= max_den; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(q, p) == 1) out.push_back({q, p});
    }
  }
  return out;
}

/// Random continued fraction terms in normal form.
inline std::vector<std::int64_t> random_cf(std::size_t max_len, std::int64_t max_term) {
  std::vector<std::int64_t> terms(static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(max_len))));
  for (auto& t : terms) t = uniform(1, max_term);
  if (terms.size() > 1 && terms.back() == 1) terms.back() = 2;
  return terms;
}

inline std::vector<Integer> to_integers(const std::vector<std::int64_t>& xs) {
  std::vector<Integer> out;
  for (auto x : xs) out.emplace_back(static_cast<long>(x));
  return out;
}

// ---- oracles over plain integers and strings ----

/// ceil(a/b) - 1 for b > 0 by stepping, not by division.
inline std::int64_t floor_star_by_search(std::int64_t a, std::int64_t b) {
  std::int64_t n = a >= 0 ? -1 : a - 1;
  while ((n + 1) * b < a) ++n;
  return n;
}

/// Euclid on int64, terms m1..mk with q/p = 1/(m1 + 1/(m2 + ...)).
inline std::vector<std::int64_t> euclid_terms(std::int64_t q, std::int64_t p) {
  std::vector<std::int64_t> out;
  while (q != 0) {
    out.push_back(p / q);
    const std::int64_t r = p % q;
    p = q;
    q = r;
  }
  return out;
}

/// The relator word as a string, straight from the sign formula.
inline std::string relator_string(std::int64_t q, std::int64_t p) {
  auto e = [&](std::int64_t i) { return ((i * q) / p) % 2 == 0 ? 1 : -1; };
  auto letter = [](char g, int sign) { return sign > 0 ? g : static_cast<char>(g - 'a' + 'A'); };
  std::string hat;
  for (std::int64_t i = 1; i < p; ++i) hat += letter(i % 2 == 1 ? 'b' : 'a', e(i));
  std::string hat_inv;
  for (auto it = hat.rbegin(); it != hat.rend(); ++it) {
    hat_inv += std::islower(static_cast<unsigned char>(*it)) ? static_cast<char>(std::toupper(*it))
                                                             : static_cast<char>(std::tolower(*it));
  }
  const char middle = p % 2 == 1 ? letter('b', q % 2 == 0 ? 1 : -1) : 'A';
  return "a" + hat + middle + hat_inv;
}

inline char invert(char c) {
  return std::islower(static_cast<unsigned char>(c)) ? static_cast<char>(std::toupper(c))
                                                     : static_cast<char>(std::tolower(c));
}

inline std::string inverse_string(const std::string& w) {
  std::string out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out += invert(*it);
  return out;
}

/// Run lengths of lowercase/uppercase, merged around the end when cyclic.
inline std::vector<std::int64_t> sign_runs(const std::string& w, bool cyclic) {
  std::vector<std::int64_t> runs;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const bool up = std::isupper(static_cast<unsigned char>(w[i]));
    if (i > 0 && up == static_cast<bool>(std::isupper(static_cast<unsigned char>(w[i - 1])))) ++runs.back();
    else runs.push_back(1);
  }
  if (cyclic && runs.size() > 1 &&
      static_cast<bool>(std::isupper(static_cast<unsigned char>(w.front()))) ==
          static_cast<bool>(std::isupper(static_cast<unsigned char>(w.back())))) {
    runs.front() += runs.back();
    runs.pop_back();
  }
  return runs;
}

template <class T>
std::vector<T> rotation(const std::vector<T>& xs, std::size_t by) {
  std::vector<T> out(xs.begin() + static_cast<std::ptrdiff_t>(by), xs.end());
  out.insert(out.end(), xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(by));
  return out;
}

inline std::string rotation(const std::string& s, std::size_t by) { return s.substr(by) + s.substr(0, by); }

template <class Seq>
Seq least_rotation_by_brute_force(const Seq& s) {
  Seq best = s;
  for (std::size_t i = 1; i < s.size(); ++i) best = std::min(best, rotation(s, i));
  return best;
}

template <class Seq>
bool cyclically_equal(const Seq& x, const Seq& y) {
  if (x.size() != y.size()) return false;
  if (x.empty()) return true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (rotation(x, i) == y) return true;
  }
  return false;
}

template <class T>
std::size_t cyclic_occurrences(const std::vector<T>& text, const std::vector<T>& pattern) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < text.size() && pattern.size() <= text.size(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < pattern.size() && ok; ++j) ok = text[(i + j) % text.size()] == pattern[j];
    count += ok;
  }
  return count;
}

/// All rotations of w and w^-1 as distinct strings.
inline std::vector<std::string> symmetrized_strings(const std::string& w) {
  std::set<std::string> all;
  const std::string inv = inverse_string(w);
  for (std::size_t i = 0; i < w.size(); ++i) {
    all.insert(rotation(w, i));
    all.insert(rotation(inv, i));
  }
  return {all.begin(), all.end()};
}

inline std::size_t lcp(const std::string& x, const std::string& y) {
  std::size_t n = 0;
  while (n < x.size() && n < y.size() && x[n] == y[n]) ++n;
  return n;
}

/// Longest piece starting at position i of w: its longest common prefix
/// with any other element of the set.
inline std::size_t piece_at_by_brute_force(const std::vector<std::string>& set, const std::string& w, std::size_t i) {
  const std::string self = rotation(w, i);
  std::size_t best = 0;
  for (const auto& other : set) {
    if (other != self) best = std::max(best, lcp(self, other));
  }
  return best;
}

/// Fewest pieces covering w, by trying every split.
inline std::size_t min_pieces_by_brute_force(const std::vector<std::string>& set, const std::string& w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> piece(n);
  for (std::size_t i = 0; i < n; ++i) piece[i] = piece_at_by_brute_force(set, w, i);
  const std::size_t none = SIZE_MAX;
  // Exhaustive over split masks; n is small in tests.
  std::size_t best = none;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    std::size_t start = 0, parts = 0;
    bool ok = true;
    for (std::size_t cut = 1; cut <= n && ok; ++cut) {
      if (cut == n || ((mask >> (cut - 1)) & 1u)) {
        ok = cut - start <= piece[start];
        start = cut;
        ++parts;
      }
    }
    if (ok) best = std::min(best, parts);
  }
  return best;
}

/// T(4) by enumerating every triple of the symmetrized set.
inline bool t4_by_brute_force(const std::vector<std::string>& set) {
  auto cancels = [](const std::string& x, const std::string& y) { return x.back() == invert(y.front()); };
  for (const auto& x : set) {
    for (const auto& y : set) {
      if (y == inverse_string(x) || !cancels(x, y)) continue;
      for (const auto& z : set) {
        if (z == inverse_string(y) || x == inverse_string(z)) continue;
        if (cancels(y, z) && cancels(z, x)) return false;
      }
    }
  }
  return true;
}

/// Random freely and cyclically reduced word over a, A, b, B.
inline std::string random_cyclic_word(std::size_t max_len) {
  static const char letters[] = {'a', 'A', 'b', 'B'};
  for (;;) {
    const std::size_t n = static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(max_len)));
    std::string w;
    while (w.size() < n) {
      const char c = letters[uniform(0, 3)];
      if (!w.empty() && w.back() == invert(c)) continue;
      w += c;
    }
    if (w.size() == 1 || w.front() != invert(w.back())) return w;
  }
}

/// Reduced x -> (ax + b)/(cx + d) on a pair (num, den), den >= 0.
struct Frac {
  std::int64_t num, den;
  friend bool operator==(const Frac&, const Frac&) = default;
};

inline Frac mobius(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, Frac x) {
  std::int64_t n = a * x.num + b * x.den;
  std::int64_t m = c * x.num + d * x.den;
  if (m < 0 || (m == 0 && n < 0)) {
    n = -n;
    m = -m;
  }
  const std::int64_t g = std::gcd(n, m);
  return {n / g, m / g};
}

}  // namespace testsupport
