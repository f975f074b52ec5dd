#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pseudoherm {

enum class ErrorKind {
  InvalidArgument,
  Domain,
  Shape,
  Consistency,
  Degree,
  Length,
  Overflow,
  Convergence,
  Resolution,
  Unsupported,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Shape: return "shape";
    case ErrorKind::Consistency: return "consistency";
    case ErrorKind::Degree: return "degree";
    case ErrorKind::Length: return "length";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::Convergence: return "convergence";
    case ErrorKind::Resolution: return "resolution";
    case ErrorKind::Unsupported: return "unsupported";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI exit-code mapping) can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + " error: " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pseudoherm
