#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace gog {

enum class Errc {
  ShapeMismatch,
  StrictIncreaseViolated,
  InterlacingViolated,
  BadBottomRow,
  SizeTooSmall,
  NotAColumnSumMatrix,
  NotAnASM,
  NotAPermutation,
  SizeMismatch,
  EmptyInput,
  RowOutOfRange,
  LimitExceeded,
  IndexOutOfRange,
  ParseError,
  UsageError,
  VerificationFailure,
};

inline std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::StrictIncreaseViolated: return "StrictIncreaseViolated";
    case Errc::InterlacingViolated: return "InterlacingViolated";
    case Errc::BadBottomRow: return "BadBottomRow";
    case Errc::SizeTooSmall: return "SizeTooSmall";
    case Errc::NotAColumnSumMatrix: return "NotAColumnSumMatrix";
    case Errc::NotAnASM: return "NotAnASM";
    case Errc::NotAPermutation: return "NotAPermutation";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::RowOutOfRange: return "RowOutOfRange";
    case Errc::LimitExceeded: return "LimitExceeded";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ParseError: return "ParseError";
    case Errc::UsageError: return "UsageError";
    case Errc::VerificationFailure: return "VerificationFailure";
  }
  return "Unknown";
}

/// 1-based (row, column) location of a defect, in the a(i,j) convention.
struct Position {
  int row = 0;
  int col = 0;
  friend bool operator==(const Position&, const Position&) = default;
};

/// Every failure raised by the library. `code()` is the stable, testable part;
/// `what()` is for humans.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail, std::optional<Position> where = std::nullopt)
      : std::runtime_error(format(code, detail, where)), code_(code), where_(where) {}

  Errc code() const noexcept { return code_; }
  const std::optional<Position>& where() const noexcept { return where_; }

 private:
  static std::string format(Errc code, const std::string& detail, std::optional<Position> where) {
    std::string msg(errc_name(code));
    if (where) msg += " at (" + std::to_string(where->row) + "," + std::to_string(where->col) + ")";
    if (!detail.empty()) msg += ": " + detail;
    return msg;
  }

  Errc code_;
  std::optional<Position> where_;
};

}  // namespace gog
