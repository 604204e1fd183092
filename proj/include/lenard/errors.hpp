#pragma once

#include <stdexcept>
#include <string>

namespace lenard {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point lies on (or within the margin of) a singular locus.
class SingularPointError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Parameters violate a construction invariant.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// A matrix that must be inverted is singular or too ill-conditioned.
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// The sampler could not find enough regular points.
class SamplingExhausted : public Error {
 public:
  using Error::Error;
};

/// An integration path crosses a singular locus.
class PathCrossesSingularity : public Error {
 public:
  using Error::Error;
};

}  // namespace lenard
