#ifndef THERMOWAVE_ERRORS_HPP
#define THERMOWAVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace thermowave {

// Base class for all domain failures; CLI maps these to exit code 1.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Base class for usage/parse failures; CLI maps these to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EqualStates : DomainError {
  using DomainError::DomainError;
};
struct ImaginarySpeed : DomainError {
  using DomainError::DomainError;
};
struct NoConnection : DomainError {
  using DomainError::DomainError;
};
struct InadmissibleProfile : DomainError {
  using DomainError::DomainError;
};
struct NoClosedForm : DomainError {
  using DomainError::DomainError;
};
struct LinearSolveFailure : DomainError {
  using DomainError::DomainError;
};
struct BlowUp : DomainError {
  using DomainError::DomainError;
};
struct PositivityViolation : DomainError {
  PositivityViolation(const std::string& msg, double t_fail)
      : DomainError(msg), t(t_fail) {}
  double t;
};
struct GridMismatch : DomainError {
  using DomainError::DomainError;
};
struct NonPositiveValues : DomainError {
  using DomainError::DomainError;
};
struct TooFewPoints : DomainError {
  using DomainError::DomainError;
};
struct InsufficientWindow : DomainError {
  using DomainError::DomainError;
};
struct NonMonotoneErrors : DomainError {
  using DomainError::DomainError;
};
struct SetupError : DomainError {
  using DomainError::DomainError;
};
struct ParseError : UsageError {
  using UsageError::UsageError;
};

}  // namespace thermowave

#endif
