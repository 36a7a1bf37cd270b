#include "scherk/error.hpp"

namespace scherk {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::SpacelikeViolation: return "SpacelikeViolation";
    case ErrorKind::PoleProximity: return "PoleProximity";
    case ErrorKind::ToleranceNotMet: return "ToleranceNotMet";
    case ErrorKind::SingularFactor: return "SingularFactor";
    case ErrorKind::ImaginaryResidue: return "ImaginaryResidue";
    case ErrorKind::GuardViolation: return "GuardViolation";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::ScalarDomain: return "ScalarDomain";
    case ErrorKind::EmptyMesh: return "EmptyMesh";
    case ErrorKind::Io: return "IoError";
  }
  return "Error";
}

}  // namespace scherk
