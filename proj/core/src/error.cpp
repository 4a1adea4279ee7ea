#include "qcoh/error.hpp"

namespace qcoh {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::HasTorsion: return "HasTorsion";
    case ErrorKind::InvalidSheaf: return "InvalidSheaf";
    case ErrorKind::InvalidMorphism: return "InvalidMorphism";
    case ErrorKind::NotInUPerp: return "NotInUPerp";
    case ErrorKind::KernelMismatch: return "KernelMismatch";
    case ErrorKind::SourceMismatch: return "SourceMismatch";
    case ErrorKind::InfiniteDimensional: return "InfiniteDimensional";
    case ErrorKind::NotInSpan: return "NotInSpan";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace qcoh
