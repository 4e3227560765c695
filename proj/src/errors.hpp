#pragma once

#include <stdexcept>
#include <string>

namespace skv {

// Error taxonomy shared by the whole library.  Every throwing operation uses
// Error with a kind, so the C API can map failures onto stable status codes.
enum class ErrorKind {
  DivisionByZero,
  SingularElement,
  Inconsistency,
  Precondition,
  Parse,
  Shape,
  NonRational,
  InsufficientPrecision,
  UnknownCheck,
  NoWitness,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace skv
