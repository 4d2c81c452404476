#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "topolab/point_set.hpp"

namespace topolab {

enum class ErrorCode {
  MissingEmptyOrFull,
  NotClosedUnderUnion,
  NotClosedUnderIntersection,
  OutOfRangePoint,
  GroundTooLarge,
  UnknownFixture,
  MalformedShape,
  BadSize,
  BadIndex,
  UnknownCheckId,
  MalformedGoal,
  ParseError,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingEmptyOrFull: return "MissingEmptyOrFull";
    case ErrorCode::NotClosedUnderUnion: return "NotClosedUnderUnion";
    case ErrorCode::NotClosedUnderIntersection: return "NotClosedUnderIntersection";
    case ErrorCode::OutOfRangePoint: return "OutOfRangePoint";
    case ErrorCode::GroundTooLarge: return "GroundTooLarge";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::MalformedShape: return "MalformedShape";
    case ErrorCode::BadSize: return "BadSize";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::UnknownCheckId: return "UnknownCheckId";
    case ErrorCode::MalformedGoal: return "MalformedGoal";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail,
        std::optional<std::pair<PointSet, PointSet>> witness = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code), witness_(witness) {}

  ErrorCode code() const { return code_; }
  /// Offending pair for the closure errors.
  const std::optional<std::pair<PointSet, PointSet>>& witness() const { return witness_; }

 private:
  ErrorCode code_;
  std::optional<std::pair<PointSet, PointSet>> witness_;
};

inline void require_within(PointSet set, std::size_t n) {
  if (!set.within(n)) throw Error(ErrorCode::OutOfRangePoint, set.to_string() + " exceeds ground of size " + std::to_string(n));
}

}  // namespace topolab
