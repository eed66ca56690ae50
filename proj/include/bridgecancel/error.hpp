#pragma once

#include <stdexcept>
#include <string>

namespace bridgecancel {

/// Malformed textual input (slope, continued fraction, word).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed input outside the domain an operation is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A postcondition failed at runtime: a decomposition that does not
/// reproduce CS(r), or an orbit reduction that ran out of fuel.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bridgecancel
