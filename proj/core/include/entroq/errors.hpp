#pragma once

#include <stdexcept>
#include <string>

namespace entroq {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// matcore
class NotHermitian : public Error {
 public:
  using Error::Error;
};
class NoConvergence : public Error {
 public:
  using Error::Error;
};
class NotUnitary : public Error {
 public:
  using Error::Error;
};

// states
class UnknownLabel : public Error {
 public:
  using Error::Error;
};
class ParameterOutOfRange : public Error {
 public:
  using Error::Error;
};
class BadRank : public Error {
 public:
  using Error::Error;
};

// maps
class NotBipartite : public Error {
 public:
  using Error::Error;
};
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// entropy
class InvalidDistribution : public Error {
 public:
  using Error::Error;
};
class InvalidState : public Error {
 public:
  using Error::Error;
};

// tomography
class UnsupportedSpin : public Error {
 public:
  using Error::Error;
};
class BadLabels : public Error {
 public:
  using Error::Error;
};
class BadQuadratureOrder : public Error {
 public:
  using Error::Error;
};

// cli / io
class UnknownFamily : public Error {
 public:
  using Error::Error;
};
class ParseError : public Error {
 public:
  using Error::Error;
};
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace entroq
