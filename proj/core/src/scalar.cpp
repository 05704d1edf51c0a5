#include "adlie/scalar.hpp"

#include <cctype>

#include "adlie/error.hpp"

namespace adlie {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::Inconsistent: return "Inconsistent";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::LinearlyDependent: return "LinearlyDependent";
    case Errc::NotTotallyIsotropic: return "NotTotallyIsotropic";
    case Errc::NoSuchComplement: return "NoSuchComplement";
    case Errc::TooManyParameters: return "TooManyParameters";
    case Errc::NotAlternating: return "NotAlternating";
    case Errc::BadParameter: return "BadParameter";
    case Errc::InvalidRho: return "InvalidRho";
    case Errc::DegenerateGram: return "DegenerateGram";
    case Errc::DegenerateMetric: return "DegenerateMetric";
    case Errc::NotTwoStep: return "NotTwoStep";
    case Errc::NotAdInvariant: return "NotAdInvariant";
    case Errc::NotSkewDerivation: return "NotSkewDerivation";
    case Errc::NotPositiveDefinite: return "NotPositiveDefinite";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::Singular: return "Singular";
    case Errc::NotEligible: return "NotEligible";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::NotSkew: return "NotSkew";
    case Errc::NotClassical: return "NotClassical";
    case Errc::OddDimension: return "OddDimension";
    case Errc::ParseError: return "ParseError";
    case Errc::InvariantBreach: return "InvariantBreach";
  }
  return "Unknown";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw Error(Errc::ParseError, "malformed scalar '" + std::string(text) + "'");
  }
  std::string num_str(num);
  if (num_str.front() == '+') num_str.erase(0, 1);
  mpz_class n(num_str, 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Scalar make_scalar(long numerator, long denominator) {
  if (denominator == 0) throw Error(Errc::BadParameter, "zero denominator");
  Scalar q(numerator, denominator);
  q.canonicalize();
  return q;
}

}  // namespace adlie
