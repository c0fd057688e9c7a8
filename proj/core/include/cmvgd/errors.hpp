#pragma once

#include <stdexcept>
#include <string>

namespace cmvgd {

/// Base class for all cmvgd errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A parameter lies outside its admissible range (e.g. a shape that makes
/// the defining integral diverge).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// A matrix that must be hermitian positive definite failed certification.
class NotPositiveDefinite : public Error {
 public:
  explicit NotPositiveDefinite(const std::string& msg) : Error(msg) {}
};

/// A matrix argument lies outside the support of the density being evaluated.
class SupportError : public Error {
 public:
  explicit SupportError(const std::string& msg) : Error(msg) {}
};

/// Matrix or tuple dimensions do not match.
class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

/// The finite-difference Jacobian matrix is numerically singular.
class SingularJacobian : public Error {
 public:
  explicit SingularJacobian(const std::string& msg) : Error(msg) {}
};

}  // namespace cmvgd
