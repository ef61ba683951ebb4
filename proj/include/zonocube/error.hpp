#pragma once

#include <stdexcept>
#include <string>

namespace zonocube {

/// Malformed request parameters (bad colors, inconsistent dimensions, non-flippable subsets).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text that cannot be parsed into the requested data model.
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structure that parsed fine but violates an invariant an operation depends on.
class CorruptInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters outside the range an algorithm supports.
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that is well formed yet not the image of any fine zonotopal tiling.
class NotRealizable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation declined up front when it would exceed a resource guard.
class Refused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Outcome of a structural check: either success or the first failed condition.
struct Diagnostic {
  bool ok = true;
  std::string condition;
  std::string detail;

  static Diagnostic success() { return {}; }
  static Diagnostic failure(std::string condition, std::string detail) {
    return {false, std::move(condition), std::move(detail)};
  }
  explicit operator bool() const { return ok; }
  std::string message() const { return ok ? "ok" : condition + ": " + detail; }
};

}  // namespace zonocube
