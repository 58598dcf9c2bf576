#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lenscx {

/// Failure categories raised by the library. The CLI reports the name of
/// the kind in its `{"error": ...}` object.
enum class ErrorKind {
  InvalidInput,
  IndexOutOfRange,
  EmptyFacet,
  DimensionOutOfRange,
  NotPseudomanifold,
  NonOrientable,
  NotCoprime,
  BadCycleLength,
  NotSimplicial,
  FreenessViolation,
  IdentificationClash,
  DomainViolation,
  SupportViolation,
  NotOnSphere,
  Disconnected,
  WrongTorsion,
  NotCocycle,
  NotUnit,
  RankMismatch,
  BadIndices,
  CycleCheckFailed,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lenscx
