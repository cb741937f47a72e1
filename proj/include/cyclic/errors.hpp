#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclic {

enum class ErrorKind {
  InvalidFiltration,
  Inconsistent,
  NotADivisor,
  NotPrimitive,
  DegenerateModel,
  UnsupportedCharacteristic,
  BadGenus,
  PreconditionViolated,
  FieldTooLarge,
  InsufficientCounts,
  NotAnAutomorphism,
  OrderMismatch,
  Overflow,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so that
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cyclic
