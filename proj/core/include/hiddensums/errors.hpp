#pragma once

#include <stdexcept>
#include <string>

namespace hiddensums {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

// Gauss-Jordan hit a rank deficiency where an inverse was required.
struct SingularMatrix : Error {
  using Error::Error;
};

struct InvalidGroup : Error {
  using Error::Error;
};

// Closure of a generator set exceeded 2^(N+2) elements.
struct ClosureOverflow : Error {
  using Error::Error;
};

// A triangularized group has no block normal form (it is not normalized
// by the plain translation group).
struct NotNormalized : Error {
  using Error::Error;
};

struct BudgetExceeded : Error {
  using Error::Error;
};

struct CapExceeded : Error {
  using Error::Error;
};

// An orbit step produced a group outside the enumerated universe.  This
// cannot happen for valid inputs and signals a bug.
struct OrbitEscapedUniverse : Error {
  using Error::Error;
};

struct NoEncodingVerifies : Error {
  using Error::Error;
};

// The derived coordinate matrix rows are linearly dependent: the oracle is
// not affine for the supplied hidden sum.
struct SingularReconstruction : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace hiddensums
