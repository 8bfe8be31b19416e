#pragma once

#include <stdexcept>
#include <string>

namespace hyposign {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (sign patterns, rationals, order words).
struct ParseError : Error {
  using Error::Error;
};

/// Two roots share the same modulus, so no order word exists.
struct DistinctModuliViolation : Error {
  using Error::Error;
};

/// A polynomial coefficient vanished where a strict sign was required.
struct ZeroCoefficient : Error {
  using Error::Error;
};

/// An order word is incompatible with the sign pattern it was paired with.
struct InvalidWord : Error {
  using Error::Error;
};

/// The requested construction does not apply to this input.
struct NotApplicable : Error {
  using Error::Error;
};

/// No seed pair with distinct orders could be produced for a two-block pattern.
struct SeedUnavailable : Error {
  using Error::Error;
};

/// Plan parameters violate the hypotheses of the three-block construction.
struct HypothesisViolation : Error {
  using Error::Error;
};

/// A shrink loop hit its hard cap. The caps are generous; reaching one is a bug.
struct DeformationBudgetExhausted : Error {
  using Error::Error;
};

/// Catalog file I/O failure.
struct StorageError : Error {
  using Error::Error;
};

}  // namespace hyposign
