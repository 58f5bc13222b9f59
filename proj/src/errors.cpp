#include "sextic/errors.hpp"

namespace sextic {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSkew: return "NonSkew";
    case ErrorCode::OddSize: return "OddSize";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::WrongDegree: return "WrongDegree";
    case ErrorCode::MixedRings: return "MixedRings";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::PrimeTooLarge: return "PrimeTooLarge";
    case ErrorCode::NotVeryDegenerate: return "NotVeryDegenerate";
    case ErrorCode::VeryDegenerate: return "VeryDegenerate";
    case ErrorCode::InconsistentResolvent: return "InconsistentResolvent";
    case ErrorCode::NotAResolvent: return "NotAResolvent";
    case ErrorCode::CharTwo: return "CharTwo";
    case ErrorCode::NotInsideM0: return "NotInsideM0";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::UnknownExample: return "UnknownExample";
    case ErrorCode::MissingPrime: return "MissingPrime";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace sextic
