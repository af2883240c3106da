// SPDX-License-Identifier: Apache-2.0

#ifndef LUQ_ERRORS_HPP
#define LUQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace luq {

// Error taxonomy shared by the whole library. The CLI maps categories to
// exit codes, so every throw site picks the closest category rather than
// inventing a new exception type.
enum class ErrorCode {
  NotSquare,
  NotHermitian,
  NonRealTrace,
  DimensionMismatch,
  DimensionOrder,
  WrongArity,
  BadLabel,
  BadSubset,
  NotUnitary,
  FamilyMismatch,
  ShapeMismatch,
  BadCut,
  BadDimensionParity,
  BadWeightCount,
  NonOrthogonalBranches,
  BadSpec,
  ParseError,
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NonRealTrace: return "NonRealTrace";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DimensionOrder: return "DimensionOrder";
    case ErrorCode::WrongArity: return "WrongArity";
    case ErrorCode::BadLabel: return "BadLabel";
    case ErrorCode::BadSubset: return "BadSubset";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::FamilyMismatch: return "FamilyMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::BadCut: return "BadCut";
    case ErrorCode::BadDimensionParity: return "BadDimensionParity";
    case ErrorCode::BadWeightCount: return "BadWeightCount";
    case ErrorCode::NonOrthogonalBranches: return "NonOrthogonalBranches";
    case ErrorCode::BadSpec: return "BadSpec";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace luq

#endif  // LUQ_ERRORS_HPP
