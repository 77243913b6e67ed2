#pragma once

#include <stdexcept>
#include <string>

namespace klconv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (x <= 0 for K_iy, beta out of range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An integrand returned NaN or infinity at a quadrature node.
class NonFiniteEvaluation : public Error {
 public:
  using Error::Error;
};

class DimensionUnsupported : public Error {
 public:
  using Error::Error;
};

/// The spectral convolution route needs 0 < beta < 1.
class RouteUnavailable : public Error {
 public:
  using Error::Error;
};

class NonFiniteNorm : public Error {
 public:
  using Error::Error;
};

/// Exponents handed to an inequality check violate its reciprocal relation.
class ParameterRelationViolated : public Error {
 public:
  using Error::Error;
};

/// 1 + 2A(y) came too close to zero while building the resolvent spectrum.
class DenominatorNearZero : public Error {
 public:
  using Error::Error;
};

/// |(F_c g)(y)| fell below the division floor on the working grid.
class SpectralDivisionUnstable : public Error {
 public:
  using Error::Error;
};

/// Malformed user input: grid specs, config files, problem files, catalog labels.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace klconv
