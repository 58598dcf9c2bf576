#include "lenscx/error.hpp"

namespace lenscx {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::EmptyFacet: return "EmptyFacet";
    case ErrorKind::DimensionOutOfRange: return "DimensionOutOfRange";
    case ErrorKind::NotPseudomanifold: return "NotPseudomanifold";
    case ErrorKind::NonOrientable: return "NonOrientable";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::BadCycleLength: return "BadCycleLength";
    case ErrorKind::NotSimplicial: return "NotSimplicial";
    case ErrorKind::FreenessViolation: return "FreenessViolation";
    case ErrorKind::IdentificationClash: return "IdentificationClash";
    case ErrorKind::DomainViolation: return "DomainViolation";
    case ErrorKind::SupportViolation: return "SupportViolation";
    case ErrorKind::NotOnSphere: return "NotOnSphere";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::WrongTorsion: return "WrongTorsion";
    case ErrorKind::NotCocycle: return "NotCocycle";
    case ErrorKind::NotUnit: return "NotUnit";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::BadIndices: return "BadIndices";
    case ErrorKind::CycleCheckFailed: return "CycleCheckFailed";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace lenscx
