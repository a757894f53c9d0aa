#include "gdss/core/error.hpp"

namespace gdss {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidMatrix: return "InvalidMatrix";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NonPositiveEntry: return "NonPositiveEntry";
    case ErrorCode::OutOfSaatyRange: return "OutOfSaatyRange";
    case ErrorCode::ReciprocityViolation: return "ReciprocityViolation";
    case ErrorCode::OrderOutOfRange: return "OrderOutOfRange";
    case ErrorCode::ThresholdOrderViolation: return "ThresholdOrderViolation";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::ParamDimensionMismatch: return "ParamDimensionMismatch";
    case ErrorCode::InvalidRanking: return "InvalidRanking";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::MissingParams: return "MissingParams";
    case ErrorCode::MethodMismatch: return "MethodMismatch";
    case ErrorCode::PhaseExhausted: return "PhaseExhausted";
    case ErrorCode::UnknownAction: return "UnknownAction";
    case ErrorCode::IncompleteResponses: return "IncompleteResponses";
    case ErrorCode::NoParticipants: return "NoParticipants";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::SessionNotFound: return "SessionNotFound";
    case ErrorCode::WrongPhase: return "WrongPhase";
    case ErrorCode::UnknownShape: return "UnknownShape";
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::TokenCountMismatch: return "TokenCountMismatch";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace gdss
