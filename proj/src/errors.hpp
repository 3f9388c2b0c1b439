#pragma once

#include <stdexcept>
#include <string>

namespace zolotarev {

// Caller passed arguments violating a documented precondition.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Request is valid but outside the supported range (degree > 9).
struct CapabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numeric input outside the domain of an analytic family.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A set of cacti handed to the atlas builder is not closed under
// wall crossing; `missing` names the absent class.
struct ClosureError : std::runtime_error {
  explicit ClosureError(const std::string& what, std::string missing_key)
      : std::runtime_error(what), missing(std::move(missing_key)) {}
  std::string missing;
};

// A numeric or combinatorial cross-check did not hold.
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Broken internal invariant; indicates a bug, not a data condition.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace zolotarev
