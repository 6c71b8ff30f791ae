#pragma once

#include <stdexcept>
#include <string>

namespace qsync {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Wire lists disagree in length, kind, set or dimension.
struct WireMismatch : Error {
  using Error::Error;
};

// Diagram-expression parse failure; carries line/column in the message.
struct SyntaxError : Error {
  using Error::Error;
};

struct UnknownPrimitive : Error {
  using Error::Error;
};

struct UnboundName : Error {
  using Error::Error;
};

// A structural self-check failed (e.g. the diagrammatic classical dimension
// does not match the block count).
struct DiagramMismatch : Error {
  using Error::Error;
};

struct OppositeStructureMissing : Error {
  using Error::Error;
};

struct NotAGame : Error {
  using Error::Error;
};

struct NotIrreflexive : Error {
  using Error::Error;
};

struct InvalidGraph : Error {
  using Error::Error;
};

struct InvalidAdjacency : Error {
  using Error::Error;
};

struct InvalidQuantumFunction : Error {
  using Error::Error;
};

struct CommutationFailure : Error {
  using Error::Error;
};

struct DimMismatch : Error {
  using Error::Error;
};

struct UnnormalizedState : Error {
  using Error::Error;
};

struct Unsatisfiable : Error {
  using Error::Error;
};

struct ExtractionFailure : Error {
  using Error::Error;
};

struct UnknownSuite : Error {
  using Error::Error;
};

}  // namespace qsync
