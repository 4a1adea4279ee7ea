#pragma once

#include <stdexcept>
#include <string>

namespace qcoh {

enum class ErrorKind {
  NotAUnit,
  ZeroInput,
  NotInvertible,
  DimensionMismatch,
  RingMismatch,
  FieldMismatch,
  HasTorsion,
  InvalidSheaf,
  InvalidMorphism,
  NotInUPerp,
  KernelMismatch,
  SourceMismatch,
  InfiniteDimensional,
  NotInSpan,
  Parse,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Domain error raised by every operation in the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qcoh
