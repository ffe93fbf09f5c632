#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qchl {

enum class ErrorCode {
  BadOrder,
  ArityMismatch,
  NotBicharacter,
  GradingViolation,
  DimensionMismatch,
  NoForm,
  SpaceMismatch,
  GroupMismatch,
  KindMismatch,
  NotWeakMorphism,
  NotSymmetricAutomorphism,
  NotCentroid,
  NotInvertible,
  NotBSymmetric,
  NotColorLie,
  NotHomAssociative,
  NotRepresentation,
  NotMultiplicative,
  AlgebraMismatch,
  CocycleConditionFailed,
  NotSkewDerivation,
  NotCocycle,
  CoadjointUndefined,
  NotInvolutive,
  NotQuadratic,
  NotFaithful,
  DNotBijective,
  VerificationFailed,
  ParseError,
  UnknownEntry,
  BadParams,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::NotBicharacter: return "NotBicharacter";
    case ErrorCode::GradingViolation: return "GradingViolation";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NoForm: return "NoForm";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::NotWeakMorphism: return "NotWeakMorphism";
    case ErrorCode::NotSymmetricAutomorphism: return "NotSymmetricAutomorphism";
    case ErrorCode::NotCentroid: return "NotCentroid";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotBSymmetric: return "NotBSymmetric";
    case ErrorCode::NotColorLie: return "NotColorLie";
    case ErrorCode::NotHomAssociative: return "NotHomAssociative";
    case ErrorCode::NotRepresentation: return "NotRepresentation";
    case ErrorCode::NotMultiplicative: return "NotMultiplicative";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::CocycleConditionFailed: return "CocycleConditionFailed";
    case ErrorCode::NotSkewDerivation: return "NotSkewDerivation";
    case ErrorCode::NotCocycle: return "NotCocycle";
    case ErrorCode::CoadjointUndefined: return "CoadjointUndefined";
    case ErrorCode::NotInvolutive: return "NotInvolutive";
    case ErrorCode::NotQuadratic: return "NotQuadratic";
    case ErrorCode::NotFaithful: return "NotFaithful";
    case ErrorCode::DNotBijective: return "DNotBijective";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownEntry: return "UnknownEntry";
    case ErrorCode::BadParams: return "BadParams";
  }
  return "Unknown";
}

/// Every failure raised by the library. `witness` holds the basis indices
/// (or generator indices) of the first offending tuple when one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::vector<std::size_t> witness = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<std::size_t> witness_;
};

}  // namespace qchl
