#include "adlie/construct.hpp"

#include <string>

#include "adlie/catalog.hpp"
#include "adlie/error.hpp"
#include "adlie/liealg.hpp"
#include "adlie/linalg.hpp"

namespace adlie {

MetricLieAlgebra modified_cotangent(const RhoMap& rho) {
  if (!validate_rho(rho).ok()) throw Error(Errc::InvalidRho, "rho must be skew, satisfy rho(v)v = 0 and be injective");
  const std::size_t n = rho.dim();
  const AltTrilinearForm w = to_form(rho);
  LieAlgebra lie(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        const Scalar& c = w.get(i, j, k);
        if (sgn(c) != 0) lie.add_bracket_term(n + j, n + k, i, c);
      }
    }
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("z" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i + 1));
  lie.set_labels(std::move(labels));
  return MetricLieAlgebra(std::move(lie), hyperbolic_space(n));
}

MetricLieAlgebra cotangent(const LieAlgebra& h) {
  const std::size_t n = h.dim();
  LieAlgebra lie(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, c] : h.bracket_sparse(i, j)) {
        if (i < j) lie.add_bracket_term(n + i, n + j, n + k, c);
        // [x_i, phi_k] = -Σ_j c^k_ij phi_j
        lie.add_bracket_term(n + i, k, j, -c);
      }
    }
  }
  MetricLieAlgebra out(std::move(lie), hyperbolic_space(n));
  if (!is_ad_invariant(out)) throw Error(Errc::InvariantBreach, "cotangent metric is not ad-invariant");
  return out;
}

MetricLieAlgebra add_central_factor(const MetricLieAlgebra& m, std::size_t dim, const Mat& gram) {
  if (gram.rows() != dim || gram.cols() != dim) throw Error(Errc::DimensionMismatch, "central gram size");
  if (!gram.is_symmetric() || !is_invertible(gram)) {
    throw Error(Errc::DegenerateGram, "central factor gram must be symmetric and invertible");
  }
  return direct_sum(abelian_metric(gram), m);
}

CenterSplit split_center(const MetricLieAlgebra& m) {
  const SeriesReport s = series(m.algebra);
  if (!s.at_most_two_step()) throw Error(Errc::NotTwoStep, "algebra is not 2-step nilpotent");
  if (!is_ad_invariant(m)) throw Error(Errc::NotAdInvariant, "metric is not ad-invariant");
  // The form restricted to the center has radical C^1, so any complement is non-degenerate.
  SubspaceBasis ztilde = greedy_complement(s.commutator, s.center);
  SubspaceBasis perp = orthogonal_complement(m.metric, ztilde);
  MetricLieAlgebra perp_algebra = restrict_to(m, perp);
  const SeriesReport ps = series(perp_algebra.algebra);
  if (ps.corank != 0u || ps.commutator.dim() != s.commutator.dim()) {
    throw Error(Errc::InvariantBreach, "orthogonal complement of the central factor has nonzero corank");
  }
  return CenterSplit{std::move(ztilde), std::move(perp), std::move(perp_algebra)};
}

NormalFormResult normal_form(const MetricLieAlgebra& m) {
  const CenterSplit split = split_center(m);
  const SeriesReport s = series(m.algebra);
  const std::size_t n = m.dim();
  const std::size_t k = s.commutator.dim();

  std::vector<Vec> u_coords;
  for (const auto& z : s.commutator.vectors()) u_coords.push_back(split.perp.coordinates(z));
  const BilinearSpace perp_space = m.metric.restrict_to(split.perp);
  const auto dual = hyperbolic_dual(perp_space, SubspaceBasis(split.perp.dim(), u_coords));
  const Mat perp_cols = split.perp.as_cols();
  std::vector<Vec> vs;
  for (const auto& d : dual) vs.push_back(perp_cols * d);
  const auto& zs = s.commutator.vectors();

  std::vector<Scalar> tensor(k * k * k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t l = 0; l < k; ++l) {
      const Vec b = m.algebra.bracket(vs[j], vs[l]);
      for (std::size_t i = 0; i < k; ++i) tensor[(i * k + j) * k + l] = m.metric.form(b, vs[i]);
    }
  }
  NormalFormResult result;
  result.corank = split.ztilde.dim();
  result.central_gram = m.metric.restrict_to(split.ztilde).gram();
  result.rho = from_form(AltTrilinearForm::from_tensor(k, tensor));
  result.model = add_central_factor(modified_cotangent(result.rho), result.corank, result.central_gram);

  std::vector<Vec> cols = split.ztilde.vectors();
  cols.insert(cols.end(), zs.begin(), zs.end());
  cols.insert(cols.end(), vs.begin(), vs.end());
  result.iso = inverse(Mat::from_cols(cols, n));
  if (!verify_isometric_isomorphism(m, result.model, result.iso)) {
    throw Error(Errc::InvariantBreach, "normal form isomorphism failed verification");
  }
  return result;
}

MetricLieAlgebra double_extension(const MetricLieAlgebra& b, const Mat& s) {
  const std::size_t n = b.dim();
  if (s.rows() != n || s.cols() != n) throw Error(Errc::DimensionMismatch, "derivation shape");
  if (!is_ad_invariant(b)) throw Error(Errc::NotAdInvariant, "base metric is not ad-invariant");
  if (!is_derivation(b.algebra, s) || !is_skew(b.gram(), s)) {
    throw Error(Errc::NotSkewDerivation, "S must be a skew-symmetric derivation");
  }
  const Mat phi_s = s.transpose() * b.gram();  // phi(S b_i, b_j) = (Sᵀ G)_ij
  LieAlgebra lie(n + 2);
  const std::size_t z = 0, t = n + 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (const auto& [k, c] : b.algebra.bracket_sparse(i, j)) lie.add_bracket_term(1 + i, 1 + j, 1 + k, c);
      if (sgn(phi_s(i, j)) != 0) lie.add_bracket_term(1 + i, 1 + j, z, phi_s(i, j));
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(s(k, i)) != 0) lie.add_bracket_term(t, 1 + i, 1 + k, s(k, i));
    }
  }
  Mat g(n + 2, n + 2);
  g.set_block(1, 1, b.gram());
  g(z, t) = 1;
  g(t, z) = 1;
  MetricLieAlgebra out(std::move(lie), BilinearSpace(std::move(g)));
  if (!validate(out.algebra).ok() || !is_ad_invariant(out)) {
    throw Error(Errc::InvariantBreach, "double extension failed validation");
  }
  return out;
}

Mat cotangent_block_derivation(const Mat& b, const Mat& c) {
  const std::size_t n = b.rows();
  if (!b.is_square() || c.rows() != n || c.cols() != n) throw Error(Errc::ShapeMismatch, "blocks must be n × n");
  Mat d(2 * n, 2 * n);
  d.set_block(0, 0, -b.transpose());
  d.set_block(0, n, c);
  d.set_block(n, n, b);
  return d;
}

bool block_b_condition(const RhoMap& rho, const Mat& b) {
  const std::size_t n = rho.dim();
  if (b.rows() != n || b.cols() != n) throw Error(Errc::ShapeMismatch, "B must be n × n");
  const Mat& g = rho.space().gram();
  const Mat bt = inverse(g) * b.transpose() * g;
  for (std::size_t w = 0; w < n; ++w) {
    const Mat& rw = rho.mats()[w];
    if (-rho.at(b.col(w)) != rw * b + bt * rw) return false;
  }
  return true;
}

}  // namespace adlie
