#pragma once

#include <stdexcept>
#include <string>

namespace hq {

/// Invalid parameters or malformed input. The CLI maps this to exit code 1.
class UsageError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A computation would exceed its configured size budget.
class BudgetExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A verification step produced a result that contradicts the mathematics
/// (negative deficit, off-curve image, ...). The CLI maps this to exit code 2.
class AuditFailure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace hq
