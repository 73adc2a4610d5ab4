#pragma once

#include <stdexcept>
#include <string>

namespace matroid {

/// Raised when an exponential-size computation would exceed its configured cap.
struct ResourceLimitError : std::runtime_error {
  explicit ResourceLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised by validate_bases when the basis-exchange axiom fails.
struct NotAMatroidError : std::runtime_error {
  explicit NotAMatroidError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when a construction that must succeed fails its own final check.
struct VerificationFailedError : std::runtime_error {
  explicit VerificationFailedError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised for inputs the operation defines no result for (e.g. rank 0 where blocks are needed).
struct DegenerateInputError : std::invalid_argument {
  explicit DegenerateInputError(const std::string& msg) : std::invalid_argument(msg) {}
};

struct UnsupportedError : std::runtime_error {
  explicit UnsupportedError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace matroid
