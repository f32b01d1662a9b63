#pragma once

#include <stdexcept>
#include <string>

namespace cwtop {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input document could not be parsed or fails schema validation.
struct ParseError : Error {
  using Error::Error;
};

// Vector/matrix shapes do not match.
struct DimensionMismatch : Error {
  using Error::Error;
};

// Requested a canonical cyclic coordinate of a quotient that is not cyclic.
struct NonCyclicQuotient : Error {
  using Error::Error;
};

// Top cohomology of the source is neither infinite cyclic, Z/2 nor trivial.
struct NonCyclicTopCohomology : Error {
  using Error::Error;
};

// Cell/skeleton degree data does not commute with the attaching maps.
struct ChainMapIncompatible : Error {
  using Error::Error;
};

// Tree segments (or rotated tree copies) intersect away from shared vertices.
struct EmbeddingViolation : Error {
  using Error::Error;
};

}  // namespace cwtop
