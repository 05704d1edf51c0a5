#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace adlie {

enum class Errc {
  Inconsistent,
  NotSymmetric,
  DimensionMismatch,
  LinearlyDependent,
  NotTotallyIsotropic,
  NoSuchComplement,
  TooManyParameters,
  NotAlternating,
  BadParameter,
  InvalidRho,
  DegenerateGram,
  DegenerateMetric,
  NotTwoStep,
  NotAdInvariant,
  NotSkewDerivation,
  NotPositiveDefinite,
  SizeMismatch,
  Singular,
  NotEligible,
  ShapeMismatch,
  NotSkew,
  NotClassical,
  OddDimension,
  ParseError,
  // A self-check on a computed result failed. Never expected in practice.
  InvariantBreach,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace adlie
