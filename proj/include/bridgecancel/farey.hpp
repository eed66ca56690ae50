#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bridgecancel/rational.hpp"

namespace bridgecancel {

/// An orientation-reversing Möbius map x -> (ax + b)/(cx + d) with
/// ad - bc = -1 and a + d = 0, so it squares to the identity.
class ReflectionMatrix {
 public:
  /// Throws DomainError if the determinant is not -1 or the trace not 0.
  ReflectionMatrix(Integer a, Integer b, Integer c, Integer d);

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }

  Rational apply(const Rational& x) const;
  /// "[[a,b],[c,d]]"
  std::string to_string() const;

  friend bool operator==(const ReflectionMatrix&, const ReflectionMatrix&) = default;

 private:
  Integer a_, b_, c_, d_;
};

/// Reflection in the Farey edge (v1, v2): with v1 = q/p, v2 = c/d,
/// [[qd + pc, -2qc], [2pd, -(qd + pc)]]. Throws DomainError if v1, v2 are
/// not Farey neighbours.
ReflectionMatrix reflection_in_edge(const Rational& v1, const Rational& v2);

inline Rational apply_mobius(const ReflectionMatrix& m, const Rational& s) { return m.apply(s); }

struct OrbitResult {
  Rational canonical;
  std::vector<ReflectionMatrix> trail;  ///< in the order applied
};

/// Folds s into [0, 1] ∪ {∞} using reflections in the edges (∞, n).
OrbitResult normalize_mod_gamma_inf(const Rational& s);

/// s ∈ I1 ∪ I2 ∪ {∞, r}, where I1 = [0, r1], I2 = [r2, 1].
bool in_fundamental_set(const Rational& r, const Rational& s);

/// Default iteration budget for reduce_to_fundamental: ten times the bit
/// length of the denominators involved.
std::size_t default_fuel(const Rational& r, const Rational& s);

/// The representative s0 ∈ I1 ∪ I2 ∪ {∞, r} of the orbit of s under the
/// group generated by reflections in Farey edges ending at ∞ or at r.
/// Alternates a fold into [0, 1] ∪ {∞} with a fold across the edges at r;
/// throws InternalError when the iteration budget runs out.
/// Requires 0 < r < 1.
OrbitResult reduce_to_fundamental(const Rational& r, const Rational& s,
                                  std::optional<std::size_t> fuel = std::nullopt);

/// True iff the loop of slope s is null-homotopic in the complement of the
/// 2-bridge link of slope r, i.e. s reduces to ∞ or r.
bool is_null_homotopic(const Rational& r, const Rational& s);

/// Breadth-first closure of an orbit under x -> -x, x -> 2 - x and the
/// reflections in every edge (r, v) with den(v) <= cap, keeping only points
/// with |num| <= cap and den <= cap. Components are cached, so one oracle
/// answers many queries for the same r and cap.
class OrbitOracle {
 public:
  OrbitOracle(const Rational& r, std::int64_t cap);

  struct Exploration {
    std::vector<Rational> fundamental_members;  ///< in discovery order
    std::size_t orbit_size = 0;
  };

  /// The pruned orbit of s. Throws DomainError if s itself exceeds the cap.
  const Exploration& explore(const Rational& s);

  /// The unique member of I1 ∪ I2 ∪ {∞, r} found, or nullopt (unknown) when
  /// the pruned orbit contains none.
  std::optional<Rational> canonical(const Rational& s);

  std::size_t generator_count() const { return generators_.size(); }

 private:
  struct Point {
    std::int64_t num;
    std::int64_t den;
    friend bool operator==(const Point&, const Point&) = default;
  };
  struct PointHash {
    std::size_t operator()(const Point& p) const noexcept;
  };
  struct Matrix {
    std::int64_t a, b, c, d;
  };

  std::optional<Point> apply(const Matrix& m, const Point& x) const;
  bool in_fundamental(const Point& x) const;

  Rational r_;
  std::int64_t cap_;
  Point r_point_;
  Point r1_;
  Point r2_;
  std::vector<Matrix> generators_;
  std::deque<Exploration> components_;  // stable references
  std::unordered_map<Point, std::size_t, PointHash> component_of_;
};

/// One-shot query: OrbitOracle(r, cap).canonical(s).
std::optional<Rational> orbit_bfs_oracle(const Rational& r, const Rational& s, std::int64_t cap);

}  // namespace bridgecancel
