#pragma once

#include <stdexcept>
#include <string>

namespace polyzeta {

// Every failure the library reports is one of these kinds. The CLI maps
// them onto process exit codes.
enum class ErrorKind {
  InvalidSpec,   // spec or input violates a documented precondition
  Dimension,     // mismatched variable counts
  OutOfWindow,   // coefficient requested outside a truncation profile
  NonInvertible, // series inverse of a series with zero constant term
  Unsupported,   // input outside the supported alphabet or size
  Divergence,    // divergent word, endpoint or substitution
  NotReady,      // integration requested before dependence was normalized
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace polyzeta
