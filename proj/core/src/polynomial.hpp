#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "adlie/matrix.hpp"

namespace adlie::detail {

using Monomial = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial over Q in a fixed number of variables.
/// std::map orders monomials lexicographically, so rbegin() is the leading term.
class Poly {
 public:
  explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}
  static Poly constant(std::size_t nvars, const Scalar& c);
  static Poly variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  std::uint32_t degree_in(std::size_t var) const;

  void add_term(const Monomial& m, const Scalar& c);
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  /// Exact quotient; throws InvariantBreach if the division is not exact.
  Poly exact_div(const Poly& divisor) const;
  Poly substitute(std::size_t var, const Scalar& value) const;

 private:
  std::size_t nvars_;
  std::map<Monomial, Scalar> terms_;
};

/// Fraction-free (Bareiss) determinant of a square polynomial matrix.
Poly determinant(std::vector<std::vector<Poly>> m, std::size_t nvars);

}  // namespace adlie::detail
