#pragma once

#include <stdexcept>
#include <string>

namespace citor {

enum class ErrorKind {
  incompatible_operands,
  graded_violation,
  hypothesis_missing,
  needs_minimal_primes,
  insufficient_window,
  minimality_required,
  oracle_too_large,
  parse_error,
  unknown_id,
  undeclared_name,
  too_large,
};

const char* error_kind_name(ErrorKind kind);

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

}  // namespace citor
