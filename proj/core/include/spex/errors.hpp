#pragma once

// Error taxonomy for the library.  Everything thrown here derives from
// spex::Error so callers can separate library failures from other exceptions;
// the concrete subclasses let the CLI map failures to exit codes and messages.

#include <stdexcept>
#include <string>

namespace spex {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Parameters outside the mathematical domain of a family or operation
// (e.g. MatchingDeletedClique with even t, rotate_edge without vw in E).
class DomainError : public Error {
public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

// Graph too large for the requested representation tier or algorithm.
class CapacityError : public Error {
public:
  explicit CapacityError(const std::string& what) : Error(what) {}
};

// Requested numeric width is unattainable by the chosen method.
class PrecisionError : public Error {
public:
  explicit PrecisionError(const std::string& what) : Error(what) {}
};

// An internal cross-check failed (e.g. a partition handed to quotient_rho is
// not equitable, or a produced witness does not verify).
class ValidationError : public Error {
public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

// Malformed textual input: graph6 strings, family descriptors, config files.
class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace spex
