#pragma once

#include <stdexcept>
#include <string>

namespace xlag {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid parameters or arguments (CLI maps this to exit code 2).
class InvalidParams : public Error {
 public:
  using Error::Error;
};

/// Exact division with nonzero remainder.
class DivisionError : public Error {
 public:
  using Error::Error;
};

/// An iterative numerical method hit its iteration cap.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

class DegenerateParams : public Error {
 public:
  using Error::Error;
};

/// A linear factor of the normalization constant vanishes.
class PoleInC : public Error {
 public:
  using Error::Error;
};

/// A Wronskian expression expected to be polynomial kept a nonzero shift.
class NotPolynomial : public Error {
 public:
  using Error::Error;
};

/// An exact or numerical identity did not hold.
class IdentityFailure : public Error {
 public:
  using Error::Error;
};

class MultipleRoot : public Error {
 public:
  using Error::Error;
};

class TailBoundExceeded : public Error {
 public:
  using Error::Error;
};

class PoleOnAxis : public Error {
 public:
  using Error::Error;
};

}  // namespace xlag
