#pragma once
#include <cstddef>
#include <stdexcept>
#include <string>

namespace slicewb {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// m must be odd and >= 3.
struct DimensionError : Error {
  using Error::Error;
};

// m == 1: gamma_m vanishes and the whole theory degenerates.
struct DegenerateDimension : DimensionError {
  using DimensionError::DimensionError;
};

struct SignatureMismatch : Error {
  using Error::Error;
};

struct NotParavector : Error {
  using Error::Error;
};

struct ZeroNorm : Error {
  using Error::Error;
};

struct IrrationalBeta : Error {
  using Error::Error;
};

// Evaluation of a Laurent stem at beta_h == 0.
struct PoleError : Error {
  using Error::Error;
};

struct InvalidStem : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

// Internal consistency failure (e.g. nonzero reconstruction residual).
struct ConsistencyError : Error {
  using Error::Error;
};

struct DoubleFactorialRange : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

}  // namespace slicewb
