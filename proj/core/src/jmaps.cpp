#include "adlie/jmaps.hpp"

#include <random>

#include "adlie/error.hpp"
#include "adlie/liealg.hpp"
#include "adlie/linalg.hpp"

namespace adlie {

Mat JData::j_of(const Vec& z) const {
  const std::size_t d = v_basis.dim();
  Mat k(d, d);
  const Vec gz = inner.gram() * z;
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t c = a + 1; c < d; ++c) {
      const Scalar x = dot(gz, algebra.bracket(v_basis[a], v_basis[c]));
      k(a, c) = x;
      k(c, a) = -x;
    }
  }
  return -(inverse(v_gram) * k);
}

Vec JData::from_v_coords(const Vec& coords) const { return v_basis.as_cols() * coords; }

JData compute_J(const LieAlgebra& lie, const BilinearSpace& inner) {
  if (inner.dim() != lie.dim()) throw Error(Errc::DimensionMismatch, "inner product dimension");
  if (!inner.is_positive_definite()) throw Error(Errc::NotPositiveDefinite, "inner product is not positive definite");
  const SeriesReport s = series(lie);
  if (!s.at_most_two_step()) throw Error(Errc::NotTwoStep, "algebra is not 2-step nilpotent");
  JData j;
  j.algebra = lie;
  j.inner = inner;
  j.center = s.center;
  j.commutator = s.commutator;
  j.v_basis = orthogonal_complement(inner, s.center);
  j.v_gram = inner.restrict_to(j.v_basis).gram();
  for (const auto& z : s.commutator.vectors()) {
    Mat m = j.j_of(z);
    if (!is_skew(j.v_gram, m)) throw Error(Errc::InvariantBreach, "J_z is not skew");
    j.j_maps.push_back(std::move(m));
  }
  return j;
}

BilinearSpace metric_from_s(const JData& j, const Mat& s) {
  const std::size_t n = j.algebra.dim();
  const std::size_t k = j.commutator.dim();
  if (s.rows() != k || s.cols() != j.v_basis.dim()) throw Error(Errc::ShapeMismatch, "S has the wrong shape");
  const SubspaceBasis ztilde = intersect(j.center, orthogonal_complement(j.inner, j.commutator));
  const std::size_t m = ztilde.dim();
  Mat nmat(n, n);
  nmat.set_block(0, 0, j.inner.restrict_to(ztilde).gram());
  const Mat p = j.inner.restrict_to(j.commutator).gram() * s;
  nmat.set_block(m, m + k, p);
  nmat.set_block(m + k, m, p.transpose());
  std::vector<Vec> cols = ztilde.vectors();
  cols.insert(cols.end(), j.commutator.vectors().begin(), j.commutator.vectors().end());
  cols.insert(cols.end(), j.v_basis.vectors().begin(), j.v_basis.vectors().end());
  const Mat qinv = inverse(Mat::from_cols(cols, n));
  return BilinearSpace(qinv.transpose() * nmat * qinv);
}

namespace {

ParamMatrixFamily s_family(const JData& j) {
  const std::size_t k = j.commutator.dim();
  const std::size_t d = j.v_basis.dim();
  auto var = [d](std::size_t i, std::size_t a) { return i * d + a; };
  std::vector<Vec> rows;
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a; b < d; ++b) {
      for (std::size_t r = 0; r < d; ++r) {
        Vec row(k * d);
        for (std::size_t i = 0; i < k; ++i) {
          row[var(i, a)] += j.j_maps[i](r, b);
          row[var(i, b)] += j.j_maps[i](r, a);
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
    }
  }
  std::vector<Vec> sols;
  if (rows.empty()) {
    for (std::size_t u = 0; u < k * d; ++u) sols.push_back(unit_vec(k * d, u));
  } else {
    sols = kernel(Mat::from_rows(rows, k * d));
  }
  ParamMatrixFamily f{Mat(k, d), {}};
  for (const auto& s : sols) f.directions.push_back(unflatten(s, k, d));
  return f;
}

}  // namespace

AdmitsDecision decide_admits_ad_invariant(const LieAlgebra& lie, const BilinearSpace& inner) {
  const JData j = compute_J(lie, inner);
  AdmitsDecision out;
  const std::size_t k = j.commutator.dim();
  if (k != j.v_basis.dim()) {
    out.failed = "i";
    return out;
  }
  if (k > 0) {
    std::vector<Vec> flat;
    for (const auto& m : j.j_maps) flat.push_back(flatten(m));
    if (rank(Mat::from_rows(flat, k * k)) != k) {
      out.failed = "ii";
      return out;
    }
  }
  const ParamMatrixFamily family = s_family(j);
  out.family = family_contains_invertible(family);
  if (!out.family->invertible) {
    out.failed = "iii";
    return out;
  }
  out.s = family.evaluate(out.family->witness);
  MetricLieAlgebra metric(lie, metric_from_s(j, out.s));
  if (!is_ad_invariant(metric)) throw Error(Errc::InvariantBreach, "constructed metric is not ad-invariant");
  out.metric = std::move(metric);
  out.admits = true;
  return out;
}

bool is_H_type(const JData& j) {
  const auto& zs = j.commutator.vectors();
  const std::size_t d = j.v_basis.dim();
  auto check = [&](const Vec& z) {
    const Mat jz = j.j_of(z);
    return jz * jz == Mat::identity(d) * (-j.inner.form(z, z));
  };
  for (std::size_t i = 0; i < zs.size(); ++i) {
    if (!check(zs[i])) return false;
    for (std::size_t l = i + 1; l < zs.size(); ++l) {
      if (!check(add(zs[i], zs[l]))) return false;
    }
  }
  return true;
}

std::optional<std::pair<Vec, Vec>> singular_witness(const JData& j, std::uint32_t seed) {
  const auto& zs = j.commutator.vectors();
  const std::size_t n = j.algebra.dim();
  if (zs.empty() || j.v_basis.empty()) return std::nullopt;
  auto try_z = [&](const Vec& z) -> std::optional<std::pair<Vec, Vec>> {
    if (is_zero(z)) return std::nullopt;
    const Mat jz = j.j_of(z);
    const auto ker = kernel(jz);
    if (ker.empty()) return std::nullopt;
    return std::make_pair(z, j.from_v_coords(ker.front()));
  };
  for (const auto& z : zs) {
    if (auto w = try_z(z)) return w;
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-4, 4);
  for (int attempt = 0; attempt < 32; ++attempt) {
    Vec z(n);
    for (const auto& zi : zs) axpy(z, Scalar(dist(rng)), zi);
    if (auto w = try_z(z)) return w;
  }
  const AdmitsDecision dec = decide_admits_ad_invariant(j.algebra, j.inner);
  if (!dec.admits) return std::nullopt;
  // J_{S u} u = 0 by condition (iii) with u = v.
  for (std::size_t a = 0; a < j.v_basis.dim(); ++a) {
    const Vec z = j.commutator.as_cols() * dec.s.col(a);
    const Vec u = j.v_basis[a];
    if (!is_zero(z) && is_zero(j.j_of(z) * unit_vec(j.v_basis.dim(), a))) return std::make_pair(z, u);
  }
  return std::nullopt;
}

EvLemmaResult check_ev_lemma(const JData& j, const std::vector<Vec>& z_basis, const std::vector<Vec>& v_basis) {
  if (z_basis.size() != v_basis.size()) throw Error(Errc::SizeMismatch, "z and v lists differ in length");
  EvLemmaResult out;
  const std::size_t k = z_basis.size();
  std::vector<Mat> jz;
  std::vector<Vec> vc;
  for (std::size_t i = 0; i < k; ++i) {
    if (!j.commutator.contains(z_basis[i]) || !j.v_basis.contains(v_basis[i])) return out;
    jz.push_back(j.j_of(z_basis[i]));
    vc.push_back(j.v_basis.coordinates(v_basis[i]));
  }
  out.precondition = true;
  for (std::size_t i = 0; i < k; ++i) out.precondition = out.precondition && is_zero(jz[i] * vc[i]);
  if (!out.precondition) return out;
  out.holds = true;
  for (std::size_t i = 0; i < k && out.holds; ++i) {
    for (std::size_t l = i + 1; l < k && out.holds; ++l) {
      out.holds = is_zero(add(jz[i] * vc[l], jz[l] * vc[i]));
    }
  }
  if (!out.holds) return out;
  if (k != j.commutator.dim() || k != j.v_basis.dim()) return out;
  std::vector<Vec> zc;
  for (const auto& z : z_basis) zc.push_back(j.commutator.coordinates(z));
  const Mat vmat = Mat::from_cols(vc, k);
  if (!is_invertible(vmat) || !is_invertible(Mat::from_cols(zc, k))) return out;
  const Mat s = Mat::from_cols(zc, k) * inverse(vmat);
  MetricLieAlgebra metric(j.algebra, metric_from_s(j, s));
  if (!is_ad_invariant(metric)) throw Error(Errc::InvariantBreach, "metric from the ev data is not ad-invariant");
  out.metric = std::move(metric);
  out.decision_agrees = decide_admits_ad_invariant(j.algebra, j.inner).admits;
  return out;
}

}  // namespace adlie
