#pragma once

#include <stdexcept>
#include <string>

namespace zpm {

enum class ErrorKind {
  invalid_input,  // malformed or out-of-contract arguments
  domain,         // arguments outside the physical/perturbative domain
  convergence,    // quadrature or extrapolation did not converge
  io,             // file access
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

}  // namespace zpm
