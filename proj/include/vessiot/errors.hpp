#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vessiot {

enum class ErrorCode {
  DivisionByZero,
  PoleAtPoint,
  DimensionMismatch,
  Singular,
  BadBlockSize,
  PrincipalMinorVanishes,
  ChartMinorVanishes,
  ChartDenominatorVanishes,
  DiagonalPoint,
  NotOnSphere,
  SingularCurve,
  NotOnCurve,
  PointCollision,
  ZeroCoefficient,
  RelationViolated,
  DegenerateEnergy,
  SyntaxError,
  DivisionByZeroFunction,
  RaggedRows,
  InvalidArgument,
};

// Stable machine-readable names, used by the CLI record output.
constexpr std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::PoleAtPoint: return "PoleAtPoint";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::BadBlockSize: return "BadBlockSize";
    case ErrorCode::PrincipalMinorVanishes: return "PrincipalMinorVanishes";
    case ErrorCode::ChartMinorVanishes: return "ChartMinorVanishes";
    case ErrorCode::ChartDenominatorVanishes: return "ChartDenominatorVanishes";
    case ErrorCode::DiagonalPoint: return "DiagonalPoint";
    case ErrorCode::NotOnSphere: return "NotOnSphere";
    case ErrorCode::SingularCurve: return "SingularCurve";
    case ErrorCode::NotOnCurve: return "NotOnCurve";
    case ErrorCode::PointCollision: return "PointCollision";
    case ErrorCode::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorCode::RelationViolated: return "RelationViolated";
    case ErrorCode::DegenerateEnergy: return "DegenerateEnergy";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DivisionByZeroFunction: return "DivisionByZeroFunction";
    case ErrorCode::RaggedRows: return "RaggedRows";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Carries the 1-based order k of the first vanishing leading principal minor,
// so callers can pick a basis permutation and retry.
class PrincipalMinorVanishes : public Error {
 public:
  explicit PrincipalMinorVanishes(std::size_t k)
      : Error(ErrorCode::PrincipalMinorVanishes,
              "leading principal minor of order " + std::to_string(k) + " vanishes"),
        index_(k) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error(ErrorCode::SyntaxError,
              "syntax error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace vessiot
