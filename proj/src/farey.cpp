#include "bridgecancel/farey.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "bridgecancel/error.hpp"

namespace bridgecancel {

namespace {

void require_open_unit(const Rational& r) {
  if (r.is_infinite() || r <= Rational(0) || r >= Rational(1)) {
    throw DomainError("orbit reduction needs 0 < r < 1, got " + r.to_string());
  }
}

Integer floor_of(const Rational& x) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
  return f;
}

std::size_t bit_length(const Integer& x) { return x == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2); }

// Coordinates in which r sits at ∞, r1 at 0 and r2 at -1:
// from_chart(y) = (c y + a)/(d y + b) with r = c/d, r1 = a/b.
struct RChart {
  Integer c, d, a, b;

  Rational from_chart(const Rational& y) const {
    if (y.is_infinite()) return Rational(c, d);
    return Rational(c * y.num() + a * y.den(), d * y.num() + b * y.den());
  }
  Rational to_chart(const Rational& x) const {
    // Inverse up to the scalar det = cb - ad = ±1, which Rational absorbs.
    return Rational(b * x.num() - a * x.den(), -d * x.num() + c * x.den());
  }
};

RChart make_chart(const Rational& r, const IntervalEndpoints& ends) {
  RChart chart{r.num(), r.den(), ends.r1.num(), ends.r1.den()};
  if (chart.from_chart(Rational(-1)) != ends.r2) {
    throw InternalError("r1 and r2 are not the Farey parents of " + r.to_string());
  }
  return chart;
}

}  // namespace

ReflectionMatrix::ReflectionMatrix(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_ * d_ - b_ * c_ != -1) throw DomainError("reflection matrix must have determinant -1: " + to_string());
  if (a_ + d_ != 0) throw DomainError("reflection matrix must have trace 0: " + to_string());
}

Rational ReflectionMatrix::apply(const Rational& x) const {
  return Rational(a_ * x.num() + b_ * x.den(), c_ * x.num() + d_ * x.den());
}

std::string ReflectionMatrix::to_string() const {
  return "[[" + a_.get_str() + "," + b_.get_str() + "],[" + c_.get_str() + "," + d_.get_str() + "]]";
}

ReflectionMatrix reflection_in_edge(const Rational& v1, const Rational& v2) {
  if (!is_farey_neighbor(v1, v2)) {
    throw DomainError(v1.to_string() + " and " + v2.to_string() + " do not span a Farey edge");
  }
  const Integer& q = v1.num();
  const Integer& p = v1.den();
  const Integer& c = v2.num();
  const Integer& d = v2.den();
  Integer diag = q * d + p * c;
  return ReflectionMatrix(diag, -2 * q * c, 2 * p * d, -diag);
}

OrbitResult normalize_mod_gamma_inf(const Rational& s) {
  OrbitResult out{s, {}};
  if (s.is_infinite()) return out;
  auto reflect_about = [&out](const Integer& n) {
    out.trail.push_back(reflection_in_edge(Rational::infinity(), Rational(n, Integer(1))));
    out.canonical = out.trail.back().apply(out.canonical);
  };
  if (out.canonical < Rational(0)) reflect_about(0);
  if (out.canonical > Rational(1)) {
    // 2n - x lands in (-1, 1] for n = floor((x + 1) / 2).
    reflect_about(floor_of(Rational(out.canonical.num() + out.canonical.den(), 2 * out.canonical.den())));
    if (out.canonical < Rational(0)) reflect_about(0);
  }
  return out;
}

bool in_fundamental_set(const Rational& r, const Rational& s) {
  require_open_unit(r);
  if (s.is_infinite() || s == r) return true;
  const auto [r1, r2] = interval_endpoints(cf_expand(r));
  return (Rational(0) <= s && s <= r1) || (r2 <= s && s <= Rational(1));
}

std::size_t default_fuel(const Rational& r, const Rational& s) {
  return 10 * std::max<std::size_t>({bit_length(s.den()), bit_length(r.den()), 1});
}

OrbitResult reduce_to_fundamental(const Rational& r, const Rational& s, std::optional<std::size_t> fuel) {
  require_open_unit(r);
  const IntervalEndpoints ends = interval_endpoints(cf_expand(r));
  const RChart chart = make_chart(r, ends);
  auto fundamental = [&](const Rational& x) {
    return x.is_infinite() || x == r || (Rational(0) <= x && x <= ends.r1) ||
           (ends.r2 <= x && x <= Rational(1));
  };

  OrbitResult out{s, {}};
  const std::size_t budget = fuel.value_or(default_fuel(r, s));
  for (std::size_t iteration = 0;; ++iteration) {
    OrbitResult folded = normalize_mod_gamma_inf(out.canonical);
    out.canonical = std::move(folded.canonical);
    out.trail.insert(out.trail.end(), folded.trail.begin(), folded.trail.end());
    if (fundamental(out.canonical)) return out;
    if (iteration == budget) {
      throw InternalError("orbit reduction of " + s.to_string() + " for r = " + r.to_string() +
                          " exhausted its budget of " + std::to_string(budget) + " iterations");
    }

    // Now r1 < s < r2, s != r. In the chart s sits outside [-1, 0]; fold it
    // back across the edges (r, v) whose chart images are the integers.
    auto reflect_in = [&](const Rational& v1, const Rational& v2) {
      out.trail.push_back(reflection_in_edge(v1, v2));
      out.canonical = out.trail.back().apply(out.canonical);
    };

    // An integer v next to r is shared by the edges (inf, v) and (r, v); the
    // two folds alone would only creep toward it. In w = 1/(s - v) the
    // reflections at v are w -> 2jp - w, so reduce w into [0, p] directly.
    std::optional<Integer> shared;
    if (r.num() == 1 && out.canonical < r) shared = 0;
    else if (r.den() - r.num() == 1 && out.canonical > r) shared = 1;
    if (shared) {
      const Rational v(*shared, Integer(1));
      const Rational w = Rational(1) / (out.canonical - v);
      const Integer period = 2 * r.den();
      Integer j;
      const Integer twice = 2 * w.num() + period * w.den();
      mpz_fdiv_q(j.get_mpz_t(), twice.get_mpz_t(), Integer(2 * period * w.den()).get_mpz_t());
      // |w| > p here, so j != 0 and w lands in [-p, p]; the next fold into
      // [0, 1] takes s out of the sector at v.
      const Integer k = j * r.den();
      reflect_in(v, Rational(*shared * k + 1, k));
      continue;
    }

    const Rational y = chart.to_chart(out.canonical);
    auto reflect_about = [&](const Integer& n) {
      reflect_in(r, chart.from_chart(Rational(n, Integer(1))));
    };
    const Integer m = floor_of(y);
    if (y.den() == 1) {
      // Integer y: one reflection reaches 0 (y even) or -1 (y odd).
      reflect_about(mpz_even_p(m.get_mpz_t()) ? Integer(m / 2) : Integer((m - 1) / 2));
    } else if (mpz_even_p(m.get_mpz_t())) {
      reflect_about(Integer(m / 2));
    } else {
      reflect_about(Integer((m + 1) / 2));
      reflect_about(Integer(0));
    }
  }
}

bool is_null_homotopic(const Rational& r, const Rational& s) {
  const Rational s0 = reduce_to_fundamental(r, s).canonical;
  return s0.is_infinite() || s0 == r;
}

std::size_t OrbitOracle::PointHash::operator()(const Point& p) const noexcept {
  return std::hash<std::int64_t>{}(p.num) * 0x9e3779b97f4a7c15ull ^ std::hash<std::int64_t>{}(p.den);
}

OrbitOracle::OrbitOracle(const Rational& r, std::int64_t cap) : r_(r), cap_(cap) {
  require_open_unit(r);
  if (cap < 1 || cap > (std::int64_t{1} << 24)) throw DomainError("oracle cap must lie in [1, 2^24]");
  if (r.den() > cap) throw DomainError("oracle cap must be at least the denominator of r");
  const IntervalEndpoints ends = interval_endpoints(cf_expand(r));
  r_point_ = {to_int64(r.num(), "r"), to_int64(r.den(), "r")};
  r1_ = {to_int64(ends.r1.num(), "r1"), to_int64(ends.r1.den(), "r1")};
  r2_ = {to_int64(ends.r2.num(), "r2"), to_int64(ends.r2.den(), "r2")};

  auto add = [this](const ReflectionMatrix& m) {
    generators_.push_back({to_int64(m.a(), "generator"), to_int64(m.b(), "generator"),
                           to_int64(m.c(), "generator"), to_int64(m.d(), "generator")});
  };
  add(reflection_in_edge(Rational::infinity(), Rational(0)));
  add(reflection_in_edge(Rational::infinity(), Rational(1)));
  // Neighbours of r = c/d are (a + n c)/(b + n d) for r1 = a/b and n ∈ Z.
  const std::int64_t c = r_point_.num, d = r_point_.den, a = r1_.num, b = r1_.den;
  const std::int64_t n_lo = -((cap + b) / d) - 1;
  const std::int64_t n_hi = (cap - b) / d + 1;
  for (std::int64_t n = n_lo; n <= n_hi; ++n) {
    const std::int64_t den = b + n * d;
    if (den == 0 || std::abs(den) > cap) continue;
    add(reflection_in_edge(r, Rational(Integer(a + n * c), Integer(den))));
  }
}

std::optional<OrbitOracle::Point> OrbitOracle::apply(const Matrix& m, const Point& x) const {
  __int128 num = static_cast<__int128>(m.a) * x.num + static_cast<__int128>(m.b) * x.den;
  __int128 den = static_cast<__int128>(m.c) * x.num + static_cast<__int128>(m.d) * x.den;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (den == 0) return Point{1, 0};
  __int128 g = num < 0 ? -num : num;
  for (__int128 h = den; h != 0;) {
    const __int128 t = g % h;
    g = h;
    h = t;
  }
  num /= g;
  den /= g;
  if (den > cap_ || num > cap_ || num < -cap_) return std::nullopt;
  return Point{static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
}

bool OrbitOracle::in_fundamental(const Point& x) const {
  if (x.den == 0 || x == r_point_) return true;
  auto le = [](const Point& u, const Point& v) {
    return static_cast<__int128>(u.num) * v.den <= static_cast<__int128>(v.num) * u.den;
  };
  const Point zero{0, 1}, one{1, 1};
  return (le(zero, x) && le(x, r1_)) || (le(r2_, x) && le(x, one));
}

const OrbitOracle::Exploration& OrbitOracle::explore(const Rational& s) {
  if (s.den() > cap_ || abs(s.num()) > cap_) {
    throw DomainError("oracle cap " + std::to_string(cap_) + " is below the height of " + s.to_string());
  }
  const Point start{s.num().get_si(), s.den().get_si()};
  if (const auto it = component_of_.find(start); it != component_of_.end()) return components_[it->second];

  const std::size_t id = components_.size();
  components_.emplace_back();
  Exploration& found = components_.back();
  std::deque<Point> queue{start};
  component_of_.emplace(start, id);
  while (!queue.empty()) {
    const Point x = queue.front();
    queue.pop_front();
    ++found.orbit_size;
    if (in_fundamental(x)) found.fundamental_members.push_back(Rational(Integer(x.num), Integer(x.den)));
    for (const Matrix& g : generators_) {
      const auto y = apply(g, x);
      if (y && component_of_.emplace(*y, id).second) queue.push_back(*y);
    }
  }
  return found;
}

std::optional<Rational> OrbitOracle::canonical(const Rational& s) {
  const Exploration& e = explore(s);
  if (e.fundamental_members.empty()) return std::nullopt;
  if (e.fundamental_members.size() > 1) {
    throw InternalError("pruned orbit of " + s.to_string() + " meets the fundamental set more than once");
  }
  return e.fundamental_members.front();
}

std::optional<Rational> orbit_bfs_oracle(const Rational& r, const Rational& s, std::int64_t cap) {
  return OrbitOracle(r, cap).canonical(s);
}

}  // namespace bridgecancel
