#pragma once

#include <stdexcept>
#include <string>

namespace remop {

// Base of all library errors. Subtypes map to CLI exit codes:
// data/format/lookup problems exit 2, internal invariant violations exit 3.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dimension or shape disagreement between operands.
struct ShapeError : Error {
  using Error::Error;
};

// Invalid configuration (bad field values, unknown keys, malformed lexicon).
struct ConfigError : Error {
  using Error::Error;
};

// Prompt-algebra failure: empty operand list, incompatible stacks.
struct CompositionError : Error {
  using Error::Error;
};

// A named module could not be resolved.
struct LookupError : Error {
  using Error::Error;
};

// On-disk format violation: bad magic, version, CRC, truncation.
struct FormatError : Error {
  using Error::Error;
};

// Inconsistent or unusable input data (corpus, examples, qrels).
struct DataError : Error {
  using Error::Error;
};

// Filesystem failure.
struct IoError : Error {
  using Error::Error;
};

// Function evaluation produced a non-finite value.
struct EvalError : Error {
  using Error::Error;
};

// Broken internal invariant; indicates a bug, not bad input.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace remop
