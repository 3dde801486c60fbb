#pragma once

#include <stdexcept>
#include <string>

namespace plurigeo {

// Failure categories surfaced by the library. The CLI maps them to exit
// codes: validation-type errors -> 1, NoConvergence -> 3.
enum class ErrorKind {
  NonConvexInput,
  PositivityViolation,
  IncompatibleGrids,
  EmptyInput,
  ResolutionTooCoarse,
  DegenerateSet,
  DimensionMismatch,
  EmptyLevelSet,
  InconsistentLevels,
  InfiniteEnergy,
  NoConvergence,
  InvalidInput,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace plurigeo
