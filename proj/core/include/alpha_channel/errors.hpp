#pragma once

#include <stdexcept>
#include <string>

namespace alpha_channel {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the region where the quantity is defined
/// (a grid sample outside the walls, a negative height, an even mode where
/// only odd modes carry weight).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input data violates a stated invariant (pressure bound, no-slip endpoints,
/// periodicity, rugosity geometry).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The sampling is too coarse or has the wrong shape for the requested
/// stencil or quadrature rule.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// Pointwise kernel evaluation requested below the permitted time floor.
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// A decay fit was requested on data with nothing to fit.
class DegenerateFitError : public Error {
 public:
  using Error::Error;
};

}  // namespace alpha_channel
