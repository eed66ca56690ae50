#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bridgecancel/rational.hpp"

namespace bridgecancel::verify {

struct Counterexample {
  std::string r;
  std::string s;  ///< empty for single-slope properties
  std::string detail;
};

struct VerificationReport {
  std::string property;
  std::string range;
  std::size_t cases = 0;
  std::vector<Counterexample> failures;  ///< ordered by case index

  bool passed() const { return failures.empty(); }
};

struct Options {
  /// Property default when unset.
  std::optional<std::int64_t> max_denominator;
  /// Property default when empty.
  std::vector<Rational> sample_r;
  std::int64_t bfs_cap = 500;
  std::optional<std::size_t> fuel;
  /// 0 means: BRIDGE_CANCEL_THREADS, else the hardware concurrency.
  unsigned threads = 0;
};

struct PropertyInfo {
  std::string_view name;
  std::string_view summary;
  std::int64_t default_max_denominator;
};

const std::vector<PropertyInfo>& properties();
bool is_property(std::string_view name);

/// Runs every case of `property`. Throws ParseError for an unknown name and
/// DomainError when max_denominator < 2.
VerificationReport run(std::string_view property, const Options& options = {});

/// Re-evaluates one recorded case; returns its failure detail, or nullopt if
/// it now passes.
std::optional<std::string> recheck(std::string_view property, const Counterexample& record,
                                   const Options& options = {});

/// q/p in (0, 1] with p <= max_denominator, by increasing p then q.
/// `include_one` controls whether 1/1 is listed.
std::vector<Rational> unit_slopes(std::int64_t max_denominator, bool include_one);

/// Hardware concurrency, capped by BRIDGE_CANCEL_THREADS when set.
unsigned default_worker_count();

}  // namespace bridgecancel::verify
