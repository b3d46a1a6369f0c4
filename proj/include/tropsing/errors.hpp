#ifndef TROPSING_ERRORS_HPP
#define TROPSING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tropsing {

/// An argument outside an operation's domain (non-positive weight,
/// positive support-function argument, dimension mismatch, ...).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A violated operation precondition (weight not maximal, infinite
/// covolume where finiteness is required, missing coefficients, ...).
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tropsing

#endif  // TROPSING_ERRORS_HPP
