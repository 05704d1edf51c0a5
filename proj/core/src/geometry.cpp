#include "adlie/geometry.hpp"

#include "adlie/construct.hpp"
#include "adlie/error.hpp"
#include "adlie/liealg.hpp"
#include "adlie/linalg.hpp"

namespace adlie {

Mat ConnectionCoeffs::nabla(std::size_t i) const {
  Mat m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m(k, j) = at(i, j, k);
  return m;
}

ConnectionCoeffs koszul(const LieAlgebra& lie, const Mat& gram) {
  const std::size_t n = lie.dim();
  if (gram.rows() != n || gram.cols() != n) throw Error(Errc::DimensionMismatch, "gram dimension");
  if (!is_invertible(gram)) throw Error(Errc::DegenerateMetric, "metric is degenerate");
  const Mat ginv = inverse(gram);
  // p[(i*n + j)*n + l] = <[e_i, e_j], e_l>
  std::vector<Scalar> p(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [m, c] : lie.bracket_sparse(i, j))
        for (std::size_t l = 0; l < n; ++l)
          if (sgn(gram(m, l)) != 0) p[(i * n + j) * n + l] += c * gram(m, l);
  auto pv = [&](std::size_t a, std::size_t b, std::size_t c) -> const Scalar& { return p[(a * n + b) * n + c]; };
  ConnectionCoeffs out{n, std::vector<Scalar>(n * n * n)};
  Vec kvec(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) kvec[l] = (pv(i, j, l) - pv(j, l, i) + pv(l, i, j)) / 2;
      if (is_zero(kvec)) continue;
      const Vec g = ginv * kvec;
      for (std::size_t k = 0; k < n; ++k) out.gamma[(i * n + j) * n + k] = g[k];
    }
  }
  return out;
}

ConnectionCoeffs koszul(const MetricLieAlgebra& m) { return koszul(m.algebra, m.gram()); }

bool torsion_free(const LieAlgebra& lie, const ConnectionCoeffs& c) {
  const std::size_t n = lie.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (c.at(i, j, k) - c.at(j, i, k) != lie.constant(i, j, k)) return false;
  return true;
}

bool metric_compatible(const Mat& gram, const ConnectionCoeffs& c) {
  for (std::size_t i = 0; i < c.n; ++i) {
    const Mat gn = gram * c.nabla(i);
    if (!(gn + gn.transpose()).is_zero()) return false;
  }
  return true;
}

CurvatureResult curvature(const MetricLieAlgebra& m) {
  const std::size_t n = m.dim();
  const ConnectionCoeffs c = koszul(m);
  std::vector<Mat> nab;
  std::vector<Mat> ads;
  for (std::size_t i = 0; i < n; ++i) {
    nab.push_back(c.nabla(i));
    ads.push_back(m.algebra.ad_basis(i));
  }
  const bool invariant = static_cast<bool>(is_ad_invariant(m));
  CurvatureResult out;
  out.n = n;
  out.r.assign(n * n, Mat(n, n));
  if (invariant) out.matches_ad_formula = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Mat r = commutator(nab[i], nab[j]);
      Mat formula(n, n);
      for (const auto& [k, coeff] : m.algebra.bracket_sparse(i, j)) {
        r -= nab[k] * coeff;
        formula -= ads[k] * (coeff / 4);
      }
      if (invariant && r != formula) out.matches_ad_formula = false;
      if (!r.is_zero()) out.flat = false;
      out.r[j * n + i] = -r;
      out.r[i * n + j] = std::move(r);
    }
  }
  if (out.matches_ad_formula == false) {
    throw Error(Errc::InvariantBreach, "curvature differs from -1/4 ad of the bracket");
  }
  return out;
}

RicciKilling ricci_and_killing(const MetricLieAlgebra& m) {
  if (!is_ad_invariant(m)) throw Error(Errc::NotAdInvariant, "metric is not ad-invariant");
  const std::size_t n = m.dim();
  const CurvatureResult cur = curvature(m);
  RicciKilling out{Mat(n, n), killing_form(m.algebra).gram()};
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) out.ricci(j, k) += cur.at(i, j)(i, k);
  if (out.ricci != out.killing * Scalar(-1, 4)) throw Error(Errc::InvariantBreach, "Ric != -1/4 B");
  return out;
}

std::vector<Mat> holonomy_span(const MetricLieAlgebra& m) {
  if (!is_ad_invariant(m)) throw Error(Errc::NotAdInvariant, "metric is not ad-invariant");
  const std::size_t n = m.dim();
  const CurvatureResult cur = curvature(m);
  std::vector<Vec> flat;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!cur.at(i, j).is_zero()) flat.push_back(flatten(cur.at(i, j)));
  const SubspaceBasis hol = SubspaceBasis::span(n * n, flat);
  std::vector<Vec> ad_flat;
  const SubspaceBasis c1 = commutator(m.algebra);
  for (const auto& w : c1.vectors()) ad_flat.push_back(flatten(m.algebra.ad(w)));
  if (!same_subspace(hol, SubspaceBasis::span(n * n, ad_flat))) {
    throw Error(Errc::InvariantBreach, "holonomy span differs from ad of the commutator");
  }
  std::vector<Mat> out;
  for (const auto& v : hol.vectors()) out.push_back(unflatten(v, n, n));
  return out;
}

MullerReport muller_check(const MetricLieAlgebra& m, const Mat& a) { return muller_check(m, m, a); }

MullerReport muller_check(const MetricLieAlgebra& from, const MetricLieAlgebra& to, const Mat& a) {
  const std::size_t n = from.dim();
  if (to.dim() != n || a.rows() != n || a.cols() != n) throw Error(Errc::DimensionMismatch, "map shape");
  MullerReport out;
  out.orthogonal = a.transpose() * to.gram() * a == from.gram();
  auto holds_at = [&](const Vec& x) {
    const Mat adx = from.algebra.ad(x);
    const Mat adax = to.algebra.ad(a * x);
    return a * (adx * adx) == adax * adax * a;
  };
  out.double_bracket = true;
  for (std::size_t i = 0; i < n && out.double_bracket; ++i) {
    out.double_bracket = holds_at(unit_vec(n, i));
    for (std::size_t j = i + 1; j < n && out.double_bracket; ++j) {
      Vec x = unit_vec(n, i);
      x[j] = 1;
      out.double_bracket = holds_at(x);
    }
  }
  return out;
}

namespace {

bool is_corank_zero_two_step(const MetricLieAlgebra& m) {
  const SeriesReport s = series(m.algebra);
  return s.is_two_step() && s.corank == 0u;
}

}  // namespace

IsometryDescriptor isometry_descriptor(const MetricLieAlgebra& m) {
  if (!is_ad_invariant(m)) throw Error(Errc::NotEligible, "metric is not ad-invariant");
  IsometryDescriptor out;
  const Signature sig = m.metric.signature();
  if (is_corank_zero_two_step(m)) {
    const std::size_t k = commutator(m.algebra).dim();
    if (sig.positive != k || sig.negative != k) throw Error(Errc::InvariantBreach, "signature is not (k, k)");
    out.kind = IsometryDescriptor::Kind::orthogonal_group;
    out.p = k;
    out.q = k;
    out.description = "O(" + std::to_string(k) + "," + std::to_string(k) + ")";
    return out;
  }
  out.kind = IsometryDescriptor::Kind::generic;
  out.p = sig.positive;
  out.q = sig.negative;
  out.description = "A with A^T G A = G and A[x,[x,y]] = [Ax,[Ax,Ay]] for all x, y";
  return out;
}

Mat build_cross_isometry(const MetricLieAlgebra& m, const MetricLieAlgebra& m2) {
  if (m.dim() != m2.dim()) throw Error(Errc::DimensionMismatch, "algebras differ in dimension");
  if (!is_corank_zero_two_step(m) || !is_corank_zero_two_step(m2)) {
    throw Error(Errc::NotEligible, "both algebras must be 2-step nilpotent of corank zero");
  }
  if (!is_ad_invariant(m) || !is_ad_invariant(m2)) throw Error(Errc::NotEligible, "metrics must be ad-invariant");
  // Both normal forms live on (z, v) with the same hyperbolic metric.
  const NormalFormResult a = normal_form(m);
  const NormalFormResult b = normal_form(m2);
  const Mat iso = inverse(b.iso) * a.iso;
  if (!muller_check(m, m2, iso).ok()) {
    throw Error(Errc::InvariantBreach, "cross isometry is not an isometry");
  }
  return iso;
}

Mat cayley(const Mat& gram, const Mat& k) {
  if (!k.is_antisymmetric()) throw Error(Errc::NotSkew, "K must be antisymmetric");
  const std::size_t n = gram.rows();
  const Mat x = inverse(gram) * k;
  const Mat id = Mat::identity(n);
  return inverse(id - x) * (id + x);
}

}  // namespace adlie
