#include "polynomial.hpp"

#include <utility>

#include "adlie/error.hpp"

namespace adlie::detail {

Poly Poly::constant(std::size_t nvars, const Scalar& c) {
  Poly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  Poly p(nvars);
  Monomial m(nvars, 0);
  m[i] = 1;
  p.add_term(m, Scalar(1));
  return p;
}

std::uint32_t Poly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out(a.nvars_);
  Monomial m(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Poly Poly::exact_div(const Poly& divisor) const {
  if (divisor.is_zero()) throw Error(Errc::InvariantBreach, "polynomial division by zero");
  const auto& [lead_m, lead_c] = *divisor.terms_.rbegin();
  Poly quotient(nvars_);
  Poly rest = *this;
  Monomial t(nvars_);
  while (!rest.is_zero()) {
    const auto& [rm, rc] = *rest.terms_.rbegin();
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (rm[i] < lead_m[i]) throw Error(Errc::InvariantBreach, "inexact polynomial division");
      t[i] = rm[i] - lead_m[i];
    }
    Poly step(nvars_);
    step.add_term(t, rc / lead_c);
    quotient += step;
    rest -= step * divisor;
  }
  return quotient;
}

Poly Poly::substitute(std::size_t var, const Scalar& value) const {
  Poly out(nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial reduced = m;
    Scalar factor = c;
    for (std::uint32_t e = 0; e < m[var]; ++e) factor *= value;
    reduced[var] = 0;
    out.add_term(reduced, factor);
  }
  return out;
}

Poly determinant(std::vector<std::vector<Poly>> m, std::size_t nvars) {
  const std::size_t n = m.size();
  if (n == 0) return Poly::constant(nvars, Scalar(1));
  bool negate = false;
  Poly prev = Poly::constant(nvars, Scalar(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return Poly(nvars);
      std::swap(m[p], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = num.exact_div(prev);
      }
    }
    prev = m[k][k];
  }
  Poly det = m[n - 1][n - 1];
  if (negate) det = Poly(nvars) - det;
  return det;
}

}  // namespace adlie::detail
