#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bridgecancel/error.hpp"
#include "bridgecancel/farey.hpp"
#include "bridgecancel/json.hpp"
#include "bridgecancel/smallcancel.hpp"
#include "bridgecancel/sseq.hpp"
#include "bridgecancel/verify.hpp"
#include "bridgecancel/word.hpp"

namespace bc = bridgecancel;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kUsage = 2;
constexpr int kDomain = 3;

struct Settings {
  bool json = true;
  std::int64_t max_denominator = 0;
  std::vector<std::string> sample_r;
  std::optional<std::size_t> fuel;
  std::int64_t bfs_cap = 500;
};

// r = 1 and r = inf belong to the trivial cases, which are handled separately.
bc::Rational open_unit_slope(const std::string& text) {
  const bc::Rational r = bc::parse_slope(text);
  if (r.is_infinite() || r >= bc::Rational(1) || r <= bc::Rational(0)) {
    throw bc::DomainError("r = " + r.to_string() +
                          " is outside 0 < r < 1; r = 1 and r = inf are the trivial cases and are not covered here");
  }
  return r;
}

void emit(const Settings& s, const json& doc, const std::string& text) {
  if (s.json) std::cout << doc.dump() << '\n';
  else std::cout << text;
}

std::string joined(const bc::SSequence& s) { return s.to_string(); }

int cmd_relator(const Settings& s, const std::string& arg) {
  const bc::Rational r = bc::parse_slope(arg);
  const bc::Word u = bc::relator(r);
  const bc::SSequence seq = bc::s_sequence(u);
  std::ostringstream text;
  text << "r       " << r << "\nword    " << u << "\nlength  " << u.size() << "\nsseq    " << seq << '\n';
  emit(s, {{"r", r.to_string()}, {"word", u.to_string()}, {"length", u.size()}, {"sseq", bc::json::terms(seq)}},
       text.str());
  return kOk;
}

int cmd_sseq(const Settings& s, const std::string& arg) {
  const bc::Rational r = bc::parse_slope(arg);
  const bc::SSequence seq = bc::slope_sseq(r);
  const bc::SSequence canonical = bc::CyclicSSequence(seq).canonical();
  std::ostringstream text;
  text << "r          " << r << "\nsseq       " << seq << "\ncanonical  " << canonical << '\n';
  emit(s,
       {{"r", r.to_string()},
        {"sseq", bc::json::terms(seq)},
        {"cyclic_canonical", bc::json::terms(canonical)}},
       text.str());
  return kOk;
}

int cmd_decompose(const Settings& s, const std::string& arg) {
  const bc::Rational r = open_unit_slope(arg);
  const bc::ContinuedFraction cf = bc::cf_expand(r);
  const bc::Decomposition d = bc::decompose(cf);
  const bc::CyclicSSequence cs = bc::cyclic_slope_sseq(r);
  auto count = [&](const bc::SSequence& pattern) -> json {
    if (pattern.empty()) return nullptr;
    return bc::count_cyclic_occurrences(cs, pattern);
  };
  const json occurrences = {{"S1", count(d.s1)},
                            {"S2", count(d.s2)},
                            {"S1S2", count(d.s1.concat(d.s2))},
                            {"S2S1", count(d.s2.concat(d.s1))}};
  std::ostringstream text;
  text << "r    " << r << " = " << cf << "\nCS   " << cs.canonical() << "\nS1   " << d.s1 << "\nS2   " << d.s2
       << '\n';
  emit(s,
       {{"r", r.to_string()},
        {"cf", cf.to_string()},
        {"CS", bc::json::terms(cs.canonical())},
        {"S1", bc::json::terms(d.s1)},
        {"S2", bc::json::terms(d.s2)},
        {"occurrences", occurrences}},
       text.str());
  return kOk;
}

int cmd_smallcancel(const Settings& s, const std::string& arg) {
  const bc::Rational r = open_unit_slope(arg);
  const bc::PieceReport report = bc::check_c4(r);
  std::ostringstream text;
  text << "r           " << r << "\nmax piece   " << report.max_piece_length << "\nmin pieces  "
       << report.min_pieces_per_relator << "\nC(4)        " << (report.c4 ? "yes" : "no") << "\nT(4)        "
       << (report.t4 ? "yes" : "no") << '\n';
  emit(s, bc::json::piece_report(r, report), text.str());
  return kOk;
}

int cmd_orbit(const Settings& s, const std::string& r_arg, const std::string& s_arg, bool brief) {
  const bc::Rational r = open_unit_slope(r_arg);
  const bc::Rational x = bc::parse_slope(s_arg);
  const bc::OrbitResult result = bc::reduce_to_fundamental(r, x, s.fuel);
  json doc = bc::json::orbit(r, x, result);
  std::ostringstream text;
  text << "r               " << r << "\ns               " << x << "\ncanonical       " << result.canonical
       << "\nnull-homotopic  " << (doc["null_homotopic"].get<bool>() ? "yes" : "no") << '\n';
  if (brief) {
    doc.erase("trail");
  } else {
    for (const auto& m : result.trail) text << "  " << m.to_string() << '\n';
  }
  emit(s, doc, text.str());
  return kOk;
}

int cmd_verify(const Settings& s, const std::string& property) {
  bc::verify::Options options;
  if (s.max_denominator != 0) options.max_denominator = s.max_denominator;
  for (const auto& text : s.sample_r) options.sample_r.push_back(open_unit_slope(text));
  options.bfs_cap = s.bfs_cap;
  options.fuel = s.fuel;
  const bc::verify::VerificationReport report = bc::verify::run(property, options);
  std::ostringstream text;
  text << report.property << ": " << report.cases << " cases (" << report.range << "), " << report.failures.size()
       << " failures\n";
  for (const auto& f : report.failures) {
    text << "  r = " << f.r << (f.s.empty() ? "" : ", s = " + f.s) << ": " << f.detail << '\n';
  }
  emit(s, bc::json::report(report), text.str());
  return report.passed() ? kOk : kPropertyFailure;
}

int cmd_list(const Settings& s) {
  json doc = json::array();
  std::ostringstream text;
  for (const auto& p : bc::verify::properties()) {
    doc.push_back({{"name", p.name}, {"summary", p.summary}, {"default_max_denominator", p.default_max_denominator}});
    text << p.name << "  (N = " << p.default_max_denominator << ")  " << p.summary << '\n';
  }
  emit(s, doc, text.str());
  return kOk;
}

int fail(int code, const char* kind, const std::exception& e) {
  std::cerr << "bridgecancel: " << kind << ": " << e.what() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Small cancellation and orbit tools for upper presentations of 2-bridge link groups"};
  app.require_subcommand(1);
  Settings settings;
  app.add_flag("--json,!--text", settings.json, "Emit JSON (default) or plain text")->capture_default_str();
  app.set_version_flag("--version", "bridgecancel 0.1.0");

  std::string r_arg, s_arg, property;
  auto slope = [&](CLI::App* sub, std::string& target, const char* name, const char* what) {
    sub->add_option(name, target, what)->required();
  };

  auto* relator = app.add_subcommand("relator", "Relator word u_r, its length and S-sequence");
  slope(relator, r_arg, "r", "Slope as q/p or [m1,...,mk]");
  auto* sseq = app.add_subcommand("sseq", "S-sequence of r from the closed form");
  slope(sseq, r_arg, "r", "Slope as q/p or [m1,...,mk]");
  auto* decompose = app.add_subcommand("decompose", "CS(r) = ((S1, S2, S1, S2))");
  slope(decompose, r_arg, "r", "Slope as q/p or [m1,...,mk]");
  auto* smallcancel = app.add_subcommand("smallcancel", "C(4) and T(4) for the symmetrized relator");
  slope(smallcancel, r_arg, "r", "Slope as q/p or [m1,...,mk]");
  auto* orbit = app.add_subcommand("orbit-reduce", "Representative of s in I1 u I2 u {inf, r}");
  slope(orbit, r_arg, "r", "Link slope");
  slope(orbit, s_arg, "s", "Loop slope");
  auto* nullhomotopic = app.add_subcommand("nullhomotopic", "Whether the loop of slope s is null-homotopic");
  slope(nullhomotopic, r_arg, "r", "Link slope");
  slope(nullhomotopic, s_arg, "s", "Loop slope");
  for (auto* sub : {orbit, nullhomotopic}) {
    sub->add_option("--fuel", settings.fuel, "Iteration budget (default: 10 x bit length)");
  }

  auto* verify = app.add_subcommand("verify", "Run a property sweep");
  bool list = false;
  verify->add_option("property", property, "Property name");
  verify->add_flag("--list", list, "List the properties");
  verify->add_option("--max-denominator", settings.max_denominator, "Largest denominator swept")
      ->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 20));
  verify->add_option("--sample-r", settings.sample_r, "Link slopes for paired properties")->delimiter(',');
  verify->add_option("--fuel", settings.fuel, "Iteration budget for orbit reduction");
  verify->add_option("--bfs-cap", settings.bfs_cap, "Height cap of the orbit oracle")
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 24));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*relator) return cmd_relator(settings, r_arg);
    if (*sseq) return cmd_sseq(settings, r_arg);
    if (*decompose) return cmd_decompose(settings, r_arg);
    if (*smallcancel) return cmd_smallcancel(settings, r_arg);
    if (*orbit) return cmd_orbit(settings, r_arg, s_arg, false);
    if (*nullhomotopic) return cmd_orbit(settings, r_arg, s_arg, true);
    if (*verify) {
      if (list) return cmd_list(settings);
      if (property.empty()) {
        std::cerr << "bridgecancel: usage error: verify needs a property name (see verify --list)\n";
        return kUsage;
      }
      return cmd_verify(settings, property);
    }
  } catch (const bc::ParseError& e) {
    return fail(kUsage, "parse error", e);
  } catch (const bc::DomainError& e) {
    return fail(kDomain, "domain error", e);
  } catch (const bc::InternalError& e) {
    return fail(kPropertyFailure, "internal error", e);
  }
  return kUsage;
}
