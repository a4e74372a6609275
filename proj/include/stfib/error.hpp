#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stfib {

/// Every failure the library reports carries one of these codes.
enum class Errc {
  ParseError,
  DivisionByZero,
  MismatchedRadicand,
  NegativeRadicand,
  NegativeDiscriminant,
  InvalidParameters,
  InvalidArgument,
  ZeroFactorInFactorial,
  IndexOutOfRange,
  ZeroScale,
  WrongRegime,
  NonNegativeT,
  EmptySeries,
  UnitModulusQ,
  HypothesisViolated,
  NotConvergentAtOne,
  WidthUnreachable,
  NotInStarSet,
  NonConvergentTail,
  DepthTooSmall,
  IntegerU,
  Internal,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace stfib
