#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gdss {

/// Machine-readable failure categories. The names double as the error codes
/// carried by HTTP responses and CLI diagnostics.
enum class ErrorCode {
  // mcda
  InvalidMatrix,
  NonSquare,
  NonPositiveEntry,
  OutOfSaatyRange,
  ReciprocityViolation,
  OrderOutOfRange,
  ThresholdOrderViolation,
  InvalidParams,
  ParamDimensionMismatch,
  InvalidRanking,
  // negotiation
  InvalidConfig,
  MissingParams,
  MethodMismatch,
  PhaseExhausted,
  UnknownAction,
  IncompleteResponses,
  NoParticipants,
  // session service / import
  ValidationFailed,
  SessionNotFound,
  WrongPhase,
  UnknownShape,
  MalformedLine,
  TokenCountMismatch,
  Io,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view code_name() const noexcept { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

/// Raised by the legacy importer; carries the 1-based offending line.
class MalformedLineError : public Error {
 public:
  MalformedLineError(std::size_t line, const std::string& message)
      : Error(ErrorCode::MalformedLine, "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace gdss
