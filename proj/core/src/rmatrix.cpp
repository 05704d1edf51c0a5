#include "adlie/rmatrix.hpp"

#include "adlie/construct.hpp"
#include "adlie/error.hpp"
#include "adlie/linalg.hpp"
#include "adlie/rho.hpp"

namespace adlie {

RBracketResult r_bracket(const LieAlgebra& g, const Mat& r) {
  const std::size_t n = g.dim();
  if (r.rows() != n || r.cols() != n) throw Error(Errc::ShapeMismatch, "r must be n × n");
  LieAlgebra b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec v = add(g.bracket(r.col(i), unit_vec(n, j)), g.bracket(unit_vec(n, i), r.col(j)));
      if (!is_zero(v)) b.set_bracket(i, j, v);
    }
  }
  RBracketResult out{b, validate(b), false};
  out.classical = out.jacobi.ok();
  return out;
}

LiftResult lift_r(const MetricLieAlgebra& g, const Mat& r) {
  const std::size_t n = g.dim();
  if (r.rows() != n || r.cols() != n) throw Error(Errc::ShapeMismatch, "r must be n × n");
  if (!is_ad_invariant(g)) throw Error(Errc::NotAdInvariant, "metric on g is not ad-invariant");
  std::vector<Mat> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(g.algebra.ad_basis(i));
  LiftResult out;
  out.cotangent = modified_cotangent(RhoMap(g.metric, std::move(ads)));
  const Mat& k = g.gram();
  out.lifted = direct_sum(k * r * inverse(k), r);
  out.classical = r_bracket(out.cotangent.algebra, out.lifted).classical;
  out.skew = is_skew(out.cotangent.gram(), out.lifted);
  out.input_skew = is_skew(k, r);
  return out;
}

CobracketResult coboundary(const MetricLieAlgebra& m, const Mat& r) {
  const std::size_t n = m.dim();
  if (r.rows() != n || r.cols() != n) throw Error(Errc::ShapeMismatch, "r must be n × n");
  if (!is_ad_invariant(m)) throw Error(Errc::NotAdInvariant, "metric is not ad-invariant");
  if (!is_skew(m.gram(), r)) throw Error(Errc::NotSkew, "r is not skew for the metric");
  const Mat rt = -(r * inverse(m.gram()));
  std::vector<Mat> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(m.algebra.ad_basis(i));
  auto act = [](const Mat& ad, const Mat& t) { return ad * t + t * ad.transpose(); };
  CobracketResult out;
  for (std::size_t k = 0; k < n; ++k) out.delta.push_back(act(ads[k], rt));
  auto delta_of = [&](const Vec& x) {
    Mat d(n, n);
    for (std::size_t k = 0; k < n; ++k)
      if (sgn(x[k]) != 0) d += out.delta[k] * x[k];
    return d;
  };
  out.cocycle = true;
  for (std::size_t i = 0; i < n && out.cocycle; ++i) {
    for (std::size_t j = i + 1; j < n && out.cocycle; ++j) {
      const Mat lhs = delta_of(m.algebra.bracket(i, j));
      out.cocycle = lhs == act(ads[i], out.delta[j]) - act(ads[j], out.delta[i]);
    }
  }
  out.dual = LieAlgebra(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      Vec v(n);
      for (std::size_t k = 0; k < n; ++k) v[k] = out.delta[k](a, b);
      if (!is_zero(v)) out.dual.set_bracket(a, b, v);
    }
  }
  out.dual_jacobi = validate(out.dual).ok();
  const RBracketResult rb = r_bracket(m.algebra, r);
  out.r_bracket_jacobi = rb.classical;
  out.matches_r_bracket = verify_isomorphism(rb.bracket, out.dual, m.gram());
  return out;
}

CobracketResult cobracket_from_r(const MetricLieAlgebra& m, const Mat& r) {
  if (!is_skew(m.gram(), r)) throw Error(Errc::NotSkew, "r is not skew for the metric");
  if (!r_bracket(m.algebra, r).classical) throw Error(Errc::NotClassical, "r is not a classical r-matrix");
  return coboundary(m, r);
}

ComplexStructureReport complex_structure_check(const LieAlgebra& g, const Mat& j) {
  const std::size_t n = g.dim();
  if (j.rows() != n || j.cols() != n) throw Error(Errc::ShapeMismatch, "J must be n × n");
  if (n % 2 != 0) throw Error(Errc::OddDimension, "complex structures need even dimension");
  ComplexStructureReport out;
  out.square = j * j == -Mat::identity(n);
  out.integrable = true;
  for (std::size_t a = 0; a < n && out.integrable; ++a) {
    for (std::size_t b = a + 1; b < n && out.integrable; ++b) {
      const Vec x = unit_vec(n, a);
      const Vec y = unit_vec(n, b);
      const Vec jx = j * x;
      const Vec jy = j * y;
      Vec nij = sub(g.bracket(jx, jy), g.bracket(x, y));
      nij = sub(nij, j * g.bracket(jx, y));
      nij = sub(nij, j * g.bracket(x, jy));
      if (!is_zero(nij)) {
        out.integrable = false;
        out.nijenhuis_violation = std::make_pair(a, b);
      }
    }
  }
  out.j_bracket_jacobi = r_bracket(g, j).classical;
  return out;
}

}  // namespace adlie
