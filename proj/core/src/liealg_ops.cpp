#include <algorithm>

#include "adlie/error.hpp"
#include "adlie/liealg.hpp"
#include "adlie/linalg.hpp"

namespace adlie {

namespace {

// [a, b] for a dense, b given as the basis index j.
Vec bracket_with_basis(const LieAlgebra& lie, const Vec& a, std::size_t j) {
  Vec out(lie.dim());
  for (std::size_t i = 0; i < lie.dim(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (const auto& [k, c] : lie.bracket_sparse(i, j)) out[k] += a[i] * c;
  }
  return out;
}

}  // namespace

ValidationReport validate(const LieAlgebra& lie) {
  ValidationReport report;
  const std::size_t n = lie.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (lie.constant(i, j, k) + lie.constant(j, i, k) != 0) report.antisymmetry.push_back({i, j, k});
      }
    }
  }
  // With antisymmetry the Jacobiator is alternating, so i < j < k suffices.
  const bool all_triples = !report.antisymmetry.empty();
  auto jacobiator = [&](std::size_t i, std::size_t j, std::size_t k) {
    Vec out(n);
    auto accumulate = [&](std::size_t a, std::size_t b, std::size_t c) {
      for (const auto& [m, coeff] : lie.bracket_sparse(a, b)) {
        for (const auto& [l, d] : lie.bracket_sparse(m, c)) out[l] += coeff * d;
      }
    };
    accumulate(i, j, k);
    accumulate(j, k, i);
    accumulate(k, i, j);
    return out;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = all_triples ? 0 : i + 1; j < n; ++j) {
      for (std::size_t k = all_triples ? 0 : j + 1; k < n; ++k) {
        const Vec jac = jacobiator(i, j, k);
        for (std::size_t l = 0; l < n; ++l) {
          if (sgn(jac[l]) != 0) report.jacobi.push_back({i, j, k, l});
        }
      }
    }
  }
  return report;
}

SubspaceBasis bracket_span(const LieAlgebra& lie, const SubspaceBasis& a, const SubspaceBasis& b) {
  const std::size_t n = lie.dim();
  std::vector<Vec> vecs;
  for (const auto& x : a.vectors()) {
    for (const auto& y : b.vectors()) {
      Vec v = lie.bracket(x, y);
      if (!is_zero(v)) vecs.push_back(std::move(v));
    }
  }
  return SubspaceBasis::span(n, vecs);
}

SubspaceBasis commutator(const LieAlgebra& lie) {
  const std::size_t n = lie.dim();
  std::vector<Vec> vecs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!lie.bracket_sparse(i, j).empty()) vecs.push_back(lie.bracket(i, j));
    }
  }
  return SubspaceBasis::span(n, vecs);
}

namespace {

// {x : [x, e_j] in W for all j}, with W given by its annihilator.
SubspaceBasis preimage_of(const LieAlgebra& lie, const SubspaceBasis& w) {
  const std::size_t n = lie.dim();
  const SubspaceBasis ann = annihilator(w);
  std::vector<Vec> rows;
  for (const auto& y : ann.vectors()) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec row(n);
      bool nonzero = false;
      for (std::size_t i = 0; i < n; ++i) {
        Scalar s = 0;
        for (const auto& [k, c] : lie.bracket_sparse(i, j)) s += y[k] * c;
        if (sgn(s) != 0) {
          row[i] = s;
          nonzero = true;
        }
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return SubspaceBasis::whole(n);
  return SubspaceBasis(n, kernel(Mat::from_rows(rows, n)));
}

}  // namespace

SubspaceBasis center(const LieAlgebra& lie) { return preimage_of(lie, SubspaceBasis(lie.dim())); }

bool is_ideal(const LieAlgebra& lie, const SubspaceBasis& w) {
  for (const auto& x : w.vectors()) {
    for (std::size_t j = 0; j < lie.dim(); ++j) {
      if (!w.contains(bracket_with_basis(lie, x, j))) return false;
    }
  }
  return true;
}

SeriesReport series(const LieAlgebra& lie) {
  const std::size_t n = lie.dim();
  SeriesReport report;
  const SubspaceBasis whole = SubspaceBasis::whole(n);
  report.descending.push_back(whole);
  while (true) {
    const SubspaceBasis& last = report.descending.back();
    SubspaceBasis next = report.descending.size() == 1 ? commutator(lie) : bracket_span(lie, whole, last);
    if (next.dim() == last.dim()) break;
    report.descending.push_back(std::move(next));
  }
  report.ascending.push_back(SubspaceBasis(n));
  while (true) {
    const SubspaceBasis& last = report.ascending.back();
    SubspaceBasis next = preimage_of(lie, last);
    if (next.dim() == last.dim()) break;
    report.ascending.push_back(std::move(next));
  }
  report.commutator = report.descending.size() > 1 ? report.descending[1] : report.descending[0];
  report.center = report.ascending.size() > 1 ? report.ascending[1] : report.ascending[0];
  if (report.descending.back().empty()) {
    report.nilpotency_class = report.descending.size() - 1;
    report.corank = report.center.dim() - report.commutator.dim();
  }
  return report;
}

BilinearSpace killing_form(const LieAlgebra& lie) {
  const std::size_t n = lie.dim();
  std::vector<Mat> ads;
  ads.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ads.push_back(lie.ad_basis(i));
  Mat b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Scalar t = 0;
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t m = 0; m < n; ++m) {
          if (sgn(ads[i](k, m)) != 0 && sgn(ads[j](m, k)) != 0) t += ads[i](k, m) * ads[j](m, k);
        }
      }
      b(i, j) = t;
      b(j, i) = t;
    }
  }
  return BilinearSpace(std::move(b));
}

CompactnessReport compactness_test(const LieAlgebra& lie) {
  CompactnessReport report;
  const BilinearSpace b = killing_form(lie);
  report.killing_negative_semidefinite = b.signature().positive == 0;
  const SubspaceBasis c = center(lie);
  const SubspaceBasis d = commutator(lie);
  const bool splits = c.dim() + d.dim() == lie.dim() && intersect(c, d).empty();
  const Signature on_d = b.restrict_to(d).signature();
  report.splits_center_plus_semisimple = splits && on_d.negative == d.dim();
  return report;
}

InvarianceReport is_ad_invariant(const LieAlgebra& lie, const Mat& form) {
  const std::size_t n = lie.dim();
  if (form.rows() != n || form.cols() != n) throw Error(Errc::DimensionMismatch, "form dimension");
  // p[i*n+j][k] = <[e_i, e_j], e_k>
  std::vector<Vec> p(n * n, Vec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [m, c] : lie.bracket_sparse(i, j)) {
        for (std::size_t k = 0; k < n; ++k) {
          if (sgn(form(m, k)) != 0) p[i * n + j][k] += c * form(m, k);
        }
      }
    }
  }
  InvarianceReport report;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = j; k < n; ++k) {
        if (p[i * n + j][k] + p[i * n + k][j] != 0) {
          report.ok = false;
          report.violation = {i, j, k};
          return report;
        }
      }
    }
  }
  return report;
}

InvarianceReport is_ad_invariant(const MetricLieAlgebra& m) { return is_ad_invariant(m.algebra, m.gram()); }

ParamMatrixFamily invariant_symmetric_forms(const LieAlgebra& lie) {
  const std::size_t n = lie.dim();
  auto idx = [n](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return a * n - a * (a + 1) / 2 + b;
  };
  const std::size_t unknowns = n * (n + 1) / 2;
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = j; k < n; ++k) {
        Vec row(unknowns);
        for (const auto& [m, c] : lie.bracket_sparse(i, j)) row[idx(m, k)] += c;
        for (const auto& [m, c] : lie.bracket_sparse(i, k)) row[idx(m, j)] += c;
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
    }
  }
  std::vector<Vec> sols;
  if (rows.empty()) {
    for (std::size_t u = 0; u < unknowns; ++u) sols.push_back(unit_vec(unknowns, u));
  } else {
    sols = kernel(Mat::from_rows(rows, unknowns));
  }
  ParamMatrixFamily family{Mat(n, n), {}};
  for (const auto& s : sols) {
    Mat g(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) g(a, b) = s[idx(a, b)];
    family.directions.push_back(std::move(g));
  }
  return family;
}

bool PerpDualityReport::ok() const {
  return dimension_identity && std::all_of(per_r.begin(), per_r.end(), [](bool b) { return b; });
}

PerpDualityReport check_perp_duality(const MetricLieAlgebra& m) {
  if (!is_ad_invariant(m)) throw Error(Errc::NotAdInvariant, "metric is not ad-invariant");
  const SeriesReport s = series(m.algebra);
  PerpDualityReport report;
  const std::size_t steps = std::max(s.descending.size(), s.ascending.size());
  for (std::size_t r = 0; r < steps; ++r) {
    const auto& down = s.descending[std::min(r, s.descending.size() - 1)];
    const auto& up = s.ascending[std::min(r, s.ascending.size() - 1)];
    report.per_r.push_back(same_subspace(orthogonal_complement(m.metric, down), up));
  }
  report.dimension_identity = m.dim() == s.center.dim() + s.commutator.dim();
  return report;
}

bool is_derivation(const LieAlgebra& lie, const Mat& d) {
  const std::size_t n = lie.dim();
  if (d.rows() != n || d.cols() != n) throw Error(Errc::DimensionMismatch, "derivation shape");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec lhs = d * lie.bracket(i, j);
      const Vec rhs = add(lie.bracket(d.col(i), unit_vec(n, j)), lie.bracket(unit_vec(n, i), d.col(j)));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool is_skew(const Mat& gram, const Mat& d) {
  const Mat gd = gram * d;
  return (gd + gd.transpose()).is_zero();
}

ParamMatrixFamily skew_derivations(const MetricLieAlgebra& m) {
  if (!is_ad_invariant(m)) throw Error(Errc::NotAdInvariant, "metric is not ad-invariant");
  const LieAlgebra& lie = m.algebra;
  const Mat& g = m.gram();
  const std::size_t n = lie.dim();
  const std::size_t unknowns = n * n;
  auto var = [n](std::size_t a, std::size_t b) { return a * n + b; };
  std::vector<Vec> rows;
  // D[e_i, e_j] - [D e_i, e_j] - [e_i, D e_j] = 0, coordinate k.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vec row(unknowns);
        for (const auto& [mm, c] : lie.bracket_sparse(i, j)) row[var(k, mm)] += c;
        for (std::size_t mm = 0; mm < n; ++mm) {
          const Scalar a = lie.constant(mm, j, k);
          if (sgn(a) != 0) row[var(mm, i)] -= a;
          const Scalar b = lie.constant(i, mm, k);
          if (sgn(b) != 0) row[var(mm, j)] -= b;
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      Vec row(unknowns);
      for (std::size_t mm = 0; mm < n; ++mm) {
        if (sgn(g(a, mm)) != 0) row[var(mm, b)] += g(a, mm);
        if (sgn(g(b, mm)) != 0) row[var(mm, a)] += g(b, mm);
      }
      if (!is_zero(row)) rows.push_back(std::move(row));
    }
  }
  ParamMatrixFamily family{Mat(n, n), {}};
  const auto sols = rows.empty() ? std::vector<Vec>{} : kernel(Mat::from_rows(rows, unknowns));
  for (const auto& s : sols) family.directions.push_back(unflatten(s, n, n));
  return family;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t na = a.dim();
  LieAlgebra out(na + b.dim());
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (const auto& [k, c] : a.bracket_sparse(i, j)) out.set_constant_raw(i, j, k, c);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (const auto& [k, c] : b.bracket_sparse(i, j)) out.set_constant_raw(na + i, na + j, na + k, c);
  if (!a.labels().empty() && !b.labels().empty()) {
    auto labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    out.set_labels(std::move(labels));
  }
  return out;
}

MetricLieAlgebra direct_sum(const MetricLieAlgebra& a, const MetricLieAlgebra& b) {
  return MetricLieAlgebra(direct_sum(a.algebra, b.algebra), BilinearSpace(direct_sum(a.gram(), b.gram())));
}

bool verify_isomorphism(const LieAlgebra& from, const LieAlgebra& to, const Mat& phi) {
  const std::size_t n = from.dim();
  if (to.dim() != n || phi.rows() != n || phi.cols() != n) {
    throw Error(Errc::DimensionMismatch, "isomorphism shape");
  }
  if (!is_invertible(phi)) return false;
  std::vector<Vec> cols;
  cols.reserve(n);
  for (std::size_t i = 0; i < n; ++i) cols.push_back(phi.col(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (phi * from.bracket(i, j) != to.bracket(cols[i], cols[j])) return false;
    }
  }
  return true;
}

bool verify_isometric_isomorphism(const MetricLieAlgebra& from, const MetricLieAlgebra& to, const Mat& phi) {
  if (!verify_isomorphism(from.algebra, to.algebra, phi)) return false;
  return phi.transpose() * to.gram() * phi == from.gram();
}

CoadjointReport coadjoint_intertwiner(const MetricLieAlgebra& m) {
  if (!is_ad_invariant(m)) throw Error(Errc::NotAdInvariant, "metric is not ad-invariant");
  CoadjointReport report{m.gram(), true};
  const Mat tinv = inverse(report.t);
  for (std::size_t u = 0; u < m.dim() && report.verified; ++u) {
    const Mat ad = m.algebra.ad_basis(u);
    report.verified = report.t * ad * tinv == -ad.transpose();
  }
  return report;
}

LieAlgebra transport(const LieAlgebra& lie, const Mat& s) {
  const std::size_t n = lie.dim();
  if (s.rows() != n || s.cols() != n) throw Error(Errc::DimensionMismatch, "transport matrix shape");
  const Mat sinv = inverse(s);
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(sinv.col(i));
  LieAlgebra out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) out.set_bracket(i, j, s * lie.bracket(cols[i], cols[j]));
  }
  return out;
}

MetricLieAlgebra transport(const MetricLieAlgebra& m, const Mat& s) {
  const Mat sinv = inverse(s);
  return MetricLieAlgebra(transport(m.algebra, s), BilinearSpace(sinv.transpose() * m.gram() * sinv));
}

MetricLieAlgebra restrict_to(const MetricLieAlgebra& m, const SubspaceBasis& basis) {
  const std::size_t d = basis.dim();
  LieAlgebra sub(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const Vec b = m.algebra.bracket(basis[i], basis[j]);
      if (!is_zero(b)) sub.set_bracket(i, j, basis.coordinates(b));
    }
  }
  return MetricLieAlgebra(std::move(sub), m.metric.restrict_to(basis));
}

}  // namespace adlie
