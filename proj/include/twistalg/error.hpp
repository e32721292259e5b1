#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twistalg {

enum class ErrorCode {
  NotAGroup,
  DimensionTooLarge,
  GroupTooLarge,
  GroupMismatch,
  DimensionMismatch,
  TwistNotInvertive,
  TwistNotProper,
  TwistNotAssociative,
  UnsupportedTwist,
  ZeroElement,
  DepthMismatch,
  NotSignedBasis,
  MalformedENotation,
  MalformedElement,
  MalformedTable,
  InconsistentResult,
  InvalidArgument,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::TwistNotInvertive: return "TwistNotInvertive";
    case ErrorCode::TwistNotProper: return "TwistNotProper";
    case ErrorCode::TwistNotAssociative: return "TwistNotAssociative";
    case ErrorCode::UnsupportedTwist: return "UnsupportedTwist";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::DepthMismatch: return "DepthMismatch";
    case ErrorCode::NotSignedBasis: return "NotSignedBasis";
    case ErrorCode::MalformedENotation: return "MalformedENotation";
    case ErrorCode::MalformedElement: return "MalformedElement";
    case ErrorCode::MalformedTable: return "MalformedTable";
    case ErrorCode::InconsistentResult: return "InconsistentResult";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace twistalg
