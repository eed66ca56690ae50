#include "bridgecancel/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <thread>

#include "bridgecancel/error.hpp"
#include "bridgecancel/farey.hpp"
#include "bridgecancel/smallcancel.hpp"
#include "bridgecancel/sseq.hpp"
#include "bridgecancel/word.hpp"

namespace bridgecancel::verify {

namespace {

struct Case {
  Rational r;
  std::optional<Rational> s;
};

// Per-worker state; only the orbit sweep uses it.
struct Scratch {
  std::map<std::pair<std::string, std::int64_t>, std::unique_ptr<OrbitOracle>> oracles;

  OrbitOracle& oracle(const Rational& r, std::int64_t cap) {
    auto& slot = oracles[{r.to_string(), cap}];
    if (!slot) slot = std::make_unique<OrbitOracle>(r, cap);
    return *slot;
  }
};

using Failure = std::optional<std::string>;
using CheckFn = std::function<Failure(const Case&, const Options&, Scratch&)>;

struct Property {
  PropertyInfo info;
  bool paired;  // cases are (r, s) pairs over a sample of r
  CheckFn check;
};

std::string show(const SSequence& s) { return s.to_string(); }

const std::vector<Rational>& default_connection_sample() {
  static const std::vector<Rational> sample = [] {
    std::vector<Rational> out;
    for (const char* cf : {"[2]", "[3]", "[2,2]", "[1,2]", "[3,2,2]", "[1,1,2]", "[2,1,3]"}) {
      out.push_back(ContinuedFraction::parse(cf).value());
    }
    return out;
  }();
  return sample;
}

const std::vector<Rational>& default_orbit_sample() {
  static const std::vector<Rational> sample = {Rational::parse("1/2"), Rational::parse("2/5"),
                                               Rational::parse("3/5"), Rational::parse("5/17")};
  return sample;
}

// All normal forms with value denominator <= n, cached per n.
const std::vector<ContinuedFraction>& cf_universe(std::int64_t n) {
  static std::mutex mutex;
  static std::map<std::int64_t, std::vector<ContinuedFraction>> cache;
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace(n);
  if (inserted) {
    for (const Rational& x : unit_slopes(n, true)) it->second.push_back(cf_expand(x));
  }
  return it->second;
}

// Signs e_i = (-1)^floor(iq/p) straight from the definition, on Rationals.
int epsilon(const Rational& r, std::int64_t i) {
  Integer fl;
  const Integer prod = r.num() * i;
  mpz_fdiv_q(fl.get_mpz_t(), prod.get_mpz_t(), r.den().get_mpz_t());
  return mpz_even_p(fl.get_mpz_t()) ? 1 : -1;
}

Failure check_roundtrip(const Case& c, const Options&, Scratch&) {
  const ContinuedFraction cf = cf_expand(c.r);
  if (cf.value() != c.r) return "cf_value(cf_expand) = " + cf.value().to_string();
  if (cf.length() > 1 && cf.terms().back() < 2) return "not in normal form: " + cf.to_string();
  return std::nullopt;
}

Failure check_well_ordering(const Case& c, const Options& o, Scratch&) {
  const ContinuedFraction x = cf_expand(c.r);
  const auto& all = cf_universe(o.max_denominator.value_or(50));
  std::vector<const ContinuedFraction*> below, above;
  for (const auto& y : all) {
    const bool xy = precedes(x, y);
    const bool yx = precedes(y, x);
    if (!xy && !yx) return "incomparable with " + y.to_string();
    if (xy && yx && !(x == y)) return "not antisymmetric with " + y.to_string();
    if (yx) below.push_back(&y);
    if (xy) above.push_back(&y);
  }
  // Every triple y <= x <= z, with x in the middle.
  for (const auto* y : below) {
    for (const auto* z : above) {
      if (!precedes(*y, *z)) return "not transitive: " + y->to_string() + " <= x <= " + z->to_string();
    }
  }
  return std::nullopt;
}

Failure check_predecessor(const Case& c, const Options&, Scratch&) {
  const ContinuedFraction cf = cf_expand(c.r);
  const ContinuedFraction pred = predecessor(cf);
  if (!precedes(pred, cf) || pred == cf) return "predecessor " + pred.to_string() + " does not precede";
  const Rational t = pred.value();
  const Rational expected = cf.front() >= 2 ? t / (Rational(1) + t) : Rational(1) - t;
  if (expected != c.r) return "value identity gives " + expected.to_string() + " from " + pred.to_string();
  return std::nullopt;
}

Failure check_interval(const Case& c, const Options&, Scratch&) {
  const auto [r1, r2] = interval_endpoints(cf_expand(c.r));
  if (!(r1 < c.r && c.r < r2)) return "endpoints do not bracket: " + r1.to_string() + ", " + r2.to_string();
  if (!is_farey_neighbor(r1, c.r) || !is_farey_neighbor(c.r, r2)) return "endpoints are not Farey neighbours";
  return std::nullopt;
}

Failure check_relator(const Case& c, const Options&, Scratch&) {
  const Word u = relator(c.r);
  const std::int64_t p = c.r.den().get_si();
  if (static_cast<std::int64_t>(u.size()) != 2 * p) return "length " + std::to_string(u.size());
  if (u.front() != kA) return "does not start with a";
  if (!is_cyclically_alternating(CyclicWord(u))) return "not cyclically alternating: " + u.to_string();
  for (std::int64_t i = 1; i < p; ++i) {
    if (u[static_cast<std::size_t>(i)].exponent() != epsilon(c.r, i)) {
      return "exponent at position " + std::to_string(i) + " disagrees with e_i in " + u.to_string();
    }
  }
  return std::nullopt;
}

Failure check_flip(const Case& c, const Options&, Scratch&) {
  const ContinuedFraction cf = cf_expand(c.r);
  if (cf.front() != 1 || cf.length() < 2) return std::nullopt;
  const Rational pred = predecessor(cf).value();
  const CyclicWord flipped(flip_b(relator(pred)));
  const Word u = relator(c.r);
  if (flipped == CyclicWord(u) || flipped == CyclicWord(u.inverse())) return std::nullopt;
  return "flip_b(u(" + pred.to_string() + ")) = " + flipped.representative().to_string() +
         " matches neither u nor u^-1";
}

Failure check_half_rotation(const Case& c, const Options&, Scratch&) {
  const SSequence from_word = s_sequence(relator(c.r));
  const SSequence closed = slope_sseq(c.r);
  if (!(from_word == closed)) return "word route " + show(from_word) + " vs closed form " + show(closed);
  const std::int64_t q = c.r.num().get_si();
  const std::int64_t p = c.r.den().get_si();
  if (static_cast<std::int64_t>(closed.size()) != 2 * q) return "length " + std::to_string(closed.size());
  if (closed.sum() != 2 * p) return "sum " + std::to_string(closed.sum());
  for (std::size_t j = 0; j < static_cast<std::size_t>(q); ++j) {
    if (closed[j] != closed[j + static_cast<std::size_t>(q)]) return "half-rotation fails at j = " + std::to_string(j + 1);
  }
  return std::nullopt;
}

Failure check_cs_terms(const Case& c, const Options&, Scratch&) {
  const ContinuedFraction cf = cf_expand(c.r);
  const SSequence cs = slope_sseq(c.r);
  const Term m1 = cf.front().get_si();
  if (cf.length() == 1) {
    if (!(cs == SSequence{m1, m1})) return "CS(1/m) = " + show(cs);
    return std::nullopt;
  }
  bool low = false, high = false;
  for (Term t : cs) {
    if (t == m1) low = true;
    else if (t == m1 + 1) high = true;
    else return "term " + std::to_string(t) + " outside {m1, m1+1} in " + show(cs);
  }
  if (!low || !high) return "both m1 and m1+1 must occur in " + show(cs);
  return std::nullopt;
}

Failure check_recurrences(const Case& c, const Options&, Scratch&) {
  const ContinuedFraction cf = cf_expand(c.r);
  const CyclicSSequence actual = cyclic_slope_sseq(c.r);
  const CyclicSSequence pred = cyclic_slope_sseq(predecessor(cf).value());
  if (cf.front() >= 2) {
    const CyclicSSequence up = recurrence_up(pred);
    // The +1 recurrence holds term by term, not just up to rotation.
    if (!(up.representative() == actual.representative())) return "recurrence_up gives " + show(up.representative());
    return std::nullopt;
  }
  const auto [forward, backward] = recurrence_flip(pred);
  if (forward == actual || backward == actual) return std::nullopt;
  return "neither flip candidate " + show(forward.representative()) + " / " + show(backward.representative()) +
         " matches " + show(actual.representative());
}

Failure check_decomposition(const Case& c, const Options&, Scratch&) {
  const ContinuedFraction cf = cf_expand(c.r);
  const Decomposition d = decompose(cf);
  const CyclicSSequence cs = cyclic_slope_sseq(c.r);
  const Term m1 = cf.front().get_si();
  const std::string parts = "S1 = " + show(d.s1) + ", S2 = " + show(d.s2);
  if (!d.s1.is_symmetric() || !d.s2.is_symmetric()) return "not symmetric: " + parts;
  if ((cf.length() == 1) != d.s1.empty()) return "S1 emptiness disagrees with k: " + parts;
  if (!d.s1.empty() && (d.s1.front() != m1 + 1 || d.s1.back() != m1 + 1)) return "S1 boundary: " + parts;
  if (d.s2.empty() || d.s2.front() != m1 || d.s2.back() != m1) return "S2 boundary: " + parts;
  const SSequence half = d.s1.concat(d.s2);
  if (!(CyclicSSequence(half.concat(half)) == cs)) return "((S1,S2,S1,S2)) != CS(r): " + parts;
  std::vector<SSequence> blocks{d.s2, half, d.s2.concat(d.s1)};
  if (!d.s1.empty()) blocks.push_back(d.s1);
  for (const auto& block : blocks) {
    const std::size_t n = count_cyclic_occurrences(cs, block);
    if (n != 2) return show(block) + " occurs " + std::to_string(n) + " times: " + parts;
  }
  if (d.s1.sum() + d.s2.sum() != c.r.den().get_si()) return "sum(S1)+sum(S2) != p: " + parts;
  if (static_cast<std::int64_t>(d.s1.size() + d.s2.size()) != c.r.num().get_si()) return "len(S1)+len(S2) != q: " + parts;
  return std::nullopt;
}

Failure check_c4t4(const Case& c, const Options&, Scratch&) {
  const PieceReport report = check_c4(c.r);
  if (!report.c4) return "C(4) fails, min pieces " + std::to_string(report.min_pieces_per_relator);
  if (!check_t4(c.r).t4) return "T(4) fails";
  return std::nullopt;
}

Failure check_connection(const Case& c, const Options&, Scratch&) {
  const ContinuedFraction r = cf_expand(c.r);
  const Rational& s = *c.s;
  const bool conditions = connection_conditions(r, cf_expand(s));
  const bool interval = in_open_interval(r, s);
  const bool pattern = contains_pattern(r, cyclic_slope_sseq(s));
  if (conditions == interval && interval == pattern) return std::nullopt;
  return "connection " + std::to_string(conditions) + ", interval " + std::to_string(interval) + ", pattern " +
         std::to_string(pattern);
}

Failure check_orbit(const Case& c, const Options& o, Scratch& scratch) {
  const Rational& r = c.r;
  const Rational& s = *c.s;
  const OrbitResult result = reduce_to_fundamental(r, s, o.fuel);
  if (!in_fundamental_set(r, result.canonical)) return "landed outside the fundamental set: " + result.canonical.to_string();
  Rational replay = s;
  for (const auto& m : result.trail) replay = m.apply(replay);
  if (replay != result.canonical) return "trail replays to " + replay.to_string();
  const OrbitResult again = reduce_to_fundamental(r, result.canonical, o.fuel);
  if (again.canonical != result.canonical || !again.trail.empty()) return "not idempotent";

  const auto [r1, r2] = interval_endpoints(cf_expand(r));
  std::vector<ReflectionMatrix> generators{reflection_in_edge(Rational::infinity(), Rational(0)),
                                           reflection_in_edge(Rational::infinity(), Rational(1)),
                                           reflection_in_edge(r, r1), reflection_in_edge(r, r2)};
  generators.insert(generators.end(), result.trail.begin(), result.trail.end());
  for (const auto& g : generators) {
    const Rational moved = g.apply(s);
    const Rational other = reduce_to_fundamental(r, moved, o.fuel).canonical;
    if (other != result.canonical) {
      return "generator " + g.to_string() + " moves s to " + moved.to_string() + ", which reduces to " + other.to_string();
    }
  }

  if (s.is_finite() && (s.den() > o.bfs_cap || abs(s.num()) > o.bfs_cap)) return std::nullopt;
  const auto oracle = scratch.oracle(r, o.bfs_cap).canonical(s);
  if (oracle && *oracle != result.canonical) {
    return "reduction gives " + result.canonical.to_string() + ", oracle gives " + oracle->to_string();
  }
  return std::nullopt;
}

Failure check_nullhomotopy(const Case& c, const Options& o, Scratch&) {
  const Rational& r = c.r;
  const Rational& s = *c.s;
  const Rational s0 = reduce_to_fundamental(r, s, o.fuel).canonical;
  const bool null = s0 == r || s0.is_infinite();
  if (null != is_null_homotopic(r, s)) return "is_null_homotopic disagrees with the reduction";
  const ContinuedFraction cf = cf_expand(r);
  if (null && !contains_pattern(cf, cyclic_slope_sseq(s))) return "null-homotopic but CS(s) lacks the pattern";
  const auto [r1, r2] = interval_endpoints(cf);
  const bool in_intervals = s <= r1 || r2 <= s;
  if (in_intervals && null) return "s in I1 ∪ I2 reported null-homotopic";
  return std::nullopt;
}

const std::vector<Property>& registry() {
  static const std::vector<Property> props = {
      {{"roundtrip", "cf_value(cf_expand(q/p)) = q/p, normal form", 200}, false, check_roundtrip},
      {{"well-ordering", "precedes is total, antisymmetric and transitive", 50}, false, check_well_ordering},
      {{"predecessor", "predecessor precedes r and satisfies the value identity", 200}, false, check_predecessor},
      {{"interval", "r1 < r < r2 are Farey neighbours of r", 200}, false, check_interval},
      {{"relator", "|u_r| = 2p, e_i exponents, cyclically alternating", 60}, false, check_relator},
      {{"flip", "flip_b(u(r~)) is u_r or u_r^-1 up to rotation when m1 = 1", 60}, false, check_flip},
      {{"half-rotation", "S(u_r) = closed form, length 2q, sum 2p, s_j = s_(q+j)", 60}, false, check_half_rotation},
      {{"cs-terms", "CS(r) terms are m1 (k = 1) or both of m1, m1+1", 60}, false, check_cs_terms},
      {{"recurrences", "CS(r) from CS(predecessor) by +1 or by the flip unpacking", 60}, false, check_recurrences},
      {{"decomposition", "CS(r) = ((S1,S2,S1,S2)) with all invariants", 60}, false, check_decomposition},
      {{"c4t4", "symmetrized upper presentation satisfies C(4) and T(4)", 40}, false, check_c4t4},
      {{"connection", "connection conditions = open interval = pattern containment", 40}, true, check_connection},
      {{"orbit", "orbit reduction: fundamental, idempotent, invariant, oracle agreement", 60}, true, check_orbit},
      {{"nullhomotopy", "null-homotopic implies the CS pattern; never on I1 ∪ I2", 40}, true, check_nullhomotopy},
  };
  return props;
}

const Property& find(std::string_view name) {
  for (const auto& p : registry()) {
    if (p.info.name == name) return p;
  }
  throw ParseError("unknown property '" + std::string(name) + "'");
}

bool single_needs_open_unit(std::string_view name) {
  return name != "roundtrip" && name != "well-ordering" && name != "relator" && name != "half-rotation" &&
         name != "cs-terms" && name != "decomposition";
}

std::vector<Case> enumerate(const Property& p, const Options& o, std::int64_t n) {
  std::vector<Case> cases;
  if (!p.paired) {
    for (const Rational& x : unit_slopes(n, !single_needs_open_unit(p.info.name))) {
      if (single_needs_open_unit(p.info.name) && x == Rational(1)) continue;
      cases.push_back({x, std::nullopt});
    }
    return cases;
  }
  const bool orbit = p.info.name == "orbit";
  const std::vector<Rational>& sample =
      !o.sample_r.empty() ? o.sample_r : (orbit ? default_orbit_sample() : default_connection_sample());
  for (const Rational& r : sample) {
    if (r.is_infinite() || r <= Rational(0) || r >= Rational(1)) {
      throw DomainError("sample slope must satisfy 0 < r < 1, got " + r.to_string());
    }
    if (orbit) {
      // s ∈ [-1, 2] ∪ {∞}, so the fold into [0, 1] is exercised too.
      cases.push_back({r, Rational::infinity()});
      for (std::int64_t den = 1; den <= n; ++den) {
        for (std::int64_t num = -den; num <= 2 * den; ++num) {
          if (std::gcd(num, den) == 1) cases.push_back({r, Rational(Integer(num), Integer(den))});
        }
      }
    } else {
      for (const Rational& s : unit_slopes(n, true)) cases.push_back({r, s});
    }
  }
  return cases;
}

Failure guarded(const Property& p, const Case& c, const Options& o, Scratch& scratch) {
  try {
    return p.check(c, o, scratch);
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}

}  // namespace

const std::vector<PropertyInfo>& properties() {
  static const std::vector<PropertyInfo> infos = [] {
    std::vector<PropertyInfo> out;
    for (const auto& p : registry()) out.push_back(p.info);
    return out;
  }();
  return infos;
}

bool is_property(std::string_view name) {
  return std::any_of(registry().begin(), registry().end(), [&](const Property& p) { return p.info.name == name; });
}

std::vector<Rational> unit_slopes(std::int64_t max_denominator, bool include_one) {
  std::vector<Rational> out;
  for (std::int64_t p = 1; p <= max_denominator; ++p) {
    for (std::int64_t q = 1; q <= p; ++q) {
      if (std::gcd(q, p) != 1) continue;
      if (p == 1 && !include_one) continue;
      out.emplace_back(Integer(q), Integer(p));
    }
  }
  return out;
}

unsigned default_worker_count() {
  const unsigned hardware = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("BRIDGE_CANCEL_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return std::min(hardware, static_cast<unsigned>(n));
  }
  return hardware;
}

VerificationReport run(std::string_view property, const Options& options) {
  const Property& p = find(property);
  const std::int64_t n = options.max_denominator.value_or(p.info.default_max_denominator);
  if (n < 2) throw DomainError("--max-denominator must be at least 2");
  Options effective = options;
  effective.max_denominator = n;

  const std::vector<Case> cases = enumerate(p, effective, n);
  std::vector<Failure> results(cases.size());
  const unsigned workers =
      std::max(1u, std::min<unsigned>(options.threads ? options.threads : default_worker_count(),
                                      static_cast<unsigned>(std::max<std::size_t>(cases.size(), 1))));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    Scratch scratch;
    for (std::size_t i = next++; i < cases.size(); i = next++) results[i] = guarded(p, cases[i], effective, scratch);
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }

  VerificationReport report;
  report.property = std::string(p.info.name);
  report.cases = cases.size();
  report.range = "denominator <= " + std::to_string(n);
  if (p.paired) {
    const auto& sample = !options.sample_r.empty()
                             ? options.sample_r
                             : (p.info.name == "orbit" ? default_orbit_sample() : default_connection_sample());
    report.range += ", r in {";
    for (std::size_t i = 0; i < sample.size(); ++i) report.range += (i ? ", " : "") + sample[i].to_string();
    report.range += "}";
  }
  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (results[i]) {
      report.failures.push_back(
          {cases[i].r.to_string(), cases[i].s ? cases[i].s->to_string() : std::string(), *results[i]});
    }
  }
  return report;
}

std::optional<std::string> recheck(std::string_view property, const Counterexample& record, const Options& options) {
  const Property& p = find(property);
  Options effective = options;
  if (!effective.max_denominator) effective.max_denominator = p.info.default_max_denominator;
  Case c{Rational::parse(record.r), std::nullopt};
  if (!record.s.empty()) c.s = Rational::parse(record.s);
  Scratch scratch;
  return guarded(p, c, effective, scratch);
}

}  // namespace bridgecancel::verify
