#pragma once

// JSON views of the library's result types, as emitted by the command line.

#include <json.hpp>

#include "bridgecancel/farey.hpp"
#include "bridgecancel/smallcancel.hpp"
#include "bridgecancel/sseq.hpp"
#include "bridgecancel/verify.hpp"

namespace bridgecancel::json {

using nlohmann::json;

/// A number when it fits in 64 bits, a decimal string otherwise.
inline json integer(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

inline json terms(const SSequence& s) { return json(std::vector<Term>(s.begin(), s.end())); }

inline json matrix(const ReflectionMatrix& m) {
  return json::array({json::array({integer(m.a()), integer(m.b())}), json::array({integer(m.c()), integer(m.d())})});
}

inline json piece_report(const Rational& r, const PieceReport& report) {
  return {{"r", r.to_string()},
          {"max_piece", report.max_piece_length},
          {"min_pieces", report.min_pieces_per_relator},
          {"c4", report.c4},
          {"t4", report.t4}};
}

inline json orbit(const Rational& r, const Rational& s, const OrbitResult& result) {
  json trail = json::array();
  for (const auto& m : result.trail) trail.push_back(matrix(m));
  return {{"r", r.to_string()},
          {"s", s.to_string()},
          {"canonical", result.canonical.to_string()},
          {"null_homotopic", result.canonical.is_infinite() || result.canonical == r},
          {"trail", std::move(trail)}};
}

inline json report(const verify::VerificationReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures) {
    json entry = {{"r", f.r}, {"detail", f.detail}};
    if (!f.s.empty()) entry["s"] = f.s;
    failures.push_back(std::move(entry));
  }
  return {{"property", report.property},
          {"range", report.range},
          {"cases", report.cases},
          {"passed", report.passed()},
          {"failures", std::move(failures)}};
}

}  // namespace bridgecancel::json
