#pragma once

#include <stdexcept>
#include <string>

namespace polyreg {

// Error categories; mirrored one-to-one by the C status codes in polyreg.h.
enum class ErrorKind {
  InvalidArgument = 1,
  Parse = 2,
  Domain = 3,        // outside the supported region of an operation
  Pole = 4,          // evaluation at (or too close to) a pole
  DivisionByZero = 5,
  Unsupported = 6,   // e.g. residue field is not Q
  Convergence = 7,
  Internal = 8,
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

}  // namespace polyreg
