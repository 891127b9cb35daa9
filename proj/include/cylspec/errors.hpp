#pragma once

#include <stdexcept>
#include <string>

namespace cylspec {

// Error taxonomy; exit_code() gives the CLI mapping
// (1 = validation/domain, 2 = environment/size).
enum class ErrorKind {
  InvalidParameter,
  NotRegular,
  SizeGuard,
  InvalidKind,
  DegenerateDegree,
  DegenerateSpectrum,
  Parse,
  Validation,
  Io,
  Solver,
};

class CylError : public std::runtime_error {
 public:
  CylError(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  int exit_code() const {
    switch (kind_) {
      case ErrorKind::SizeGuard:
      case ErrorKind::Io:
      case ErrorKind::Solver:
        return 2;
      default:
        return 1;
    }
  }

  const char* kind_name() const {
    switch (kind_) {
      case ErrorKind::InvalidParameter: return "invalid-parameter";
      case ErrorKind::NotRegular: return "not-regular";
      case ErrorKind::SizeGuard: return "size-guard";
      case ErrorKind::InvalidKind: return "invalid-kind";
      case ErrorKind::DegenerateDegree: return "degenerate-degree";
      case ErrorKind::DegenerateSpectrum: return "degenerate-spectrum";
      case ErrorKind::Parse: return "parse";
      case ErrorKind::Validation: return "validation";
      case ErrorKind::Io: return "io";
      case ErrorKind::Solver: return "solver";
    }
    return "unknown";
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw CylError(kind, message);
}

}  // namespace cylspec
