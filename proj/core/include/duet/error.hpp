#pragma once

#include <stdexcept>
#include <string>

namespace duet {

// Parameter or configuration violates a documented precondition.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical procedure (quadrature, root search, plateau detection) did not
// reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computed or supplied state violates the uncertainty principle beyond
// tolerance, or a covariance is not positive definite.
class PhysicalityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// D(omega) vanished exactly on the real axis (lossless resonance).
class SingularResponse : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace duet
