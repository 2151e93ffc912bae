#pragma once

#include <stdexcept>
#include <string>

namespace ifm {

// Base class for every error thrown by this library, so callers can catch
// ifm::Error and map it to a diagnostic without enumerating subtypes.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A state vector with every amplitude equal to zero cannot be normalized.
class AllZeroError : public Error {
 public:
  using Error::Error;
};

// An amplitude or matrix entry is NaN or infinite.
class NonFiniteError : public Error {
 public:
  using Error::Error;
};

// A vector that must be unit-norm is not.
class NotNormalizedError : public Error {
 public:
  using Error::Error;
};

// A matrix handed to the Hermitian eigensolver is not Hermitian.
class NotHermitianError : public Error {
 public:
  using Error::Error;
};

// A spectrum fails its density-matrix sanity checks (negative eigenvalue
// beyond rounding, or trace away from one).
class InvalidSpectrumError : public Error {
 public:
  using Error::Error;
};

// An (alpha, beta) amplitude pair violates its normalization constraint.
class InvalidConfigError : public Error {
 public:
  using Error::Error;
};

// A (gamma, delta) interaction pair violates |gamma|^2 + |delta|^2 = 1, or a
// transparency parameter is outside [0, 1].
class InvalidSpecError : public Error {
 public:
  using Error::Error;
};

// Conditioning on an outcome whose probability vanishes.
class ZeroProbabilityError : public Error {
 public:
  using Error::Error;
};

// A probability triple is not a distribution (component outside [0, 1] or
// the components do not sum to one).
class InvalidDistributionError : public Error {
 public:
  using Error::Error;
};

}  // namespace ifm
