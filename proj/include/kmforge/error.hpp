#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kmforge {

enum class ErrorCode {
  DivisionByZero,
  LevelMismatch,
  UnknownAlgebra,
  AlgebraMismatch,
  NotFiniteOrder,
  IncompatibleDenominator,
  ContextMismatch,
  InvalidInput,
  TwistMismatch,
  NotFirstKind,
  NotSecondKind,
  OrderMismatch,
  CatalogMiss,
  IncompatibleData,
  SquareMismatch,
  ClassifierUnavailable,
  NotApplicable,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kmforge
