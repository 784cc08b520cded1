#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rigidlift {

enum class ErrorKind {
  // input / construction
  ParseError,
  LoopEdge,
  Disconnected,
  DuplicateEdgeId,
  MissingBaseEdge,
  UnknownVertex,
  UnknownEdge,
  // structural preconditions
  NotTwoEdgeConnected,
  NotTwoConnected,
  NoCommonCycle,
  BaseEdgeInArch,
  // divisors and lattices
  EnumerationBoundExceeded,
  WrongDegree,
  NotInCycleSpace,
  NonIntegralClass,
  // orientations
  BiorientedPresent,
  InvalidMove,
  DegreeMismatch,
  DegreeTooHigh,
  QIsEffective,
  NotFullyOriented,
  // morphisms
  NotBijection,
  BaseNotPreserved,
  InvalidCyclicBijection,
  CompositionMismatch,
  GenusTooSmall,
  MorphismIsRigid,
  MorphismNotRigid,
  NotLiftable,
  Internal,
};

std::string_view to_string(ErrorKind kind);

// True for errors caused by malformed or invalid input rather than by the
// mathematics of a well-formed question.
bool is_input_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }
  // what() without the kind prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace rigidlift
