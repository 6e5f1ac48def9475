#ifndef INVAR_ERRORS_HPP
#define INVAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace invar {

// Base class for failures raised by the computation layer.
struct EngineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : EngineError {
  using EngineError::EngineError;
};

struct DomainError : EngineError {
  using EngineError::EngineError;
};

struct InvalidGeneratorError : EngineError {
  using EngineError::EngineError;
};

struct UnderspecifiedGroupError : EngineError {
  using EngineError::EngineError;
};

struct ZeroDenominatorError : EngineError {
  using EngineError::EngineError;
};

struct InternalError : EngineError {
  using EngineError::EngineError;
};

// Closure enumeration hit the configured element cap; the generated group is
// not finite within that bound.
struct ClosureCapError : EngineError {
  using EngineError::EngineError;
};

// A polynomial (or quotient) expected to be invariant is moved by some group
// element. witness_index is 1-based into the canonical element order.
struct NotInvariantError : EngineError {
  NotInvariantError(const std::string& what, int witness)
      : EngineError(what), witness_index(witness) {}
  int witness_index;
};

// Syntax error in an expression or a group specification file.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line_, int column_)
      : std::runtime_error(what), line(line_), column(column_) {}
  int line;
  int column;
};

struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace invar

#endif
