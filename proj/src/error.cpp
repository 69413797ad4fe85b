#include "sbcert/error.hpp"

namespace sbcert {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::WrongResidue: return "WrongResidue";
    case ErrorCode::BadResidue: return "BadResidue";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::SingularBasis: return "SingularBasis";
    case ErrorCode::ParamMismatch: return "ParamMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::BoundTooLarge: return "BoundTooLarge";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::RelationFailure: return "RelationFailure";
    case ErrorCode::IsoFailure: return "IsoFailure";
    case ErrorCode::RejectedOverride: return "RejectedOverride";
  }
  return "Unknown";
}

}  // namespace sbcert
