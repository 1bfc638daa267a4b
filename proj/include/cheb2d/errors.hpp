#pragma once

#include <stdexcept>
#include <string>

namespace cheb2d {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPositiveDefinite : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class InvalidFamily : public Error {
 public:
  using Error::Error;
};

class UnsupportedFamily : public Error {
 public:
  using Error::Error;
};

/// The operator has no finite free tail, or a Jost-function hypothesis fails.
class AssumptionViolated : public Error {
 public:
  using Error::Error;
};

class ZeroArgument : public Error {
 public:
  using Error::Error;
};

class SingularJost : public Error {
 public:
  using Error::Error;
};

class NearSingularJost : public Error {
 public:
  using Error::Error;
};

class InsufficientMoments : public Error {
 public:
  using Error::Error;
};

/// Raised by two_param_link when an identity misses its tolerance.
class LinkBroken : public Error {
 public:
  LinkBroken(const std::string& what, double residual)
      : Error(what + " (max residual " + std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace cheb2d
