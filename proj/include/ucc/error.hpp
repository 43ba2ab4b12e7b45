#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ucc {

enum class ErrorKind {
  CapacityExceeded,
  IndexOutOfRange,
  ConstraintConflict,
  EmptyFamily,
  EmptyMemberSet,
  IsolatedVertexPresent,
  Overlap,
  Undercover,
  HypothesisFailed,
  InvalidInstance,
  CommonSetTooLarge,
  NotTwoLayered,
  InvalidParams,
  UnknownSuite,
  ParseError,
  IoError,
};

std::string_view toString(ErrorKind kind);

/// Every failure raised by the library carries a kind so the CLI can map it
/// to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(toString(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ucc
