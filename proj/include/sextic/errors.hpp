#pragma once

#include <stdexcept>
#include <string>

namespace sextic {

enum class ErrorCode {
  NonSkew,
  OddSize,
  NonSquare,
  RankDeficient,
  SingularSystem,
  DegreeOverflow,
  WrongDegree,
  MixedRings,
  DimensionMismatch,
  NotInvertible,
  FieldTooLarge,
  PrimeTooLarge,
  NotVeryDegenerate,
  VeryDegenerate,
  InconsistentResolvent,
  NotAResolvent,
  CharTwo,
  NotInsideM0,
  SearchBudgetExceeded,
  UnknownExample,
  MissingPrime,
  ParseError,
};

const char* to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sextic
