#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gaugekit {

enum class ErrorCode {
  InvalidArgument,
  IndexOutOfRange,
  ZeroQuaternion,
  NotInvertible,
  DegeneratePath,
  EndpointMismatch,
  UnknownPath,
  PathOutsideAtlas,
  NonConvergent,
  NotClosed,
  NotTrivializable,
  NotApplicable,
  ContractionFailed,
  UnknownAction,
  TypeMismatch,
  OpenPathInInvarianceTest,
  SchemaViolation,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ZeroQuaternion: return "ZeroQuaternion";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::DegeneratePath: return "DegeneratePath";
    case ErrorCode::EndpointMismatch: return "EndpointMismatch";
    case ErrorCode::UnknownPath: return "UnknownPath";
    case ErrorCode::PathOutsideAtlas: return "PathOutsideAtlas";
    case ErrorCode::NonConvergent: return "NonConvergent";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotTrivializable: return "NotTrivializable";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::ContractionFailed: return "ContractionFailed";
    case ErrorCode::UnknownAction: return "UnknownAction";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::OpenPathInInvarianceTest: return "OpenPathInInvarianceTest";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
  }
  return "Unknown";
}

/// Single exception type for the library; `code()` is what callers branch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  /// Message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace gaugekit
