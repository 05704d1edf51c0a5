#include "adlie/bilinear.hpp"

#include <utility>

#include "adlie/error.hpp"
#include "adlie/linalg.hpp"

namespace adlie {

namespace {

void swap_index(Mat& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  const std::size_t n = m.rows();
  for (std::size_t j = 0; j < n; ++j) std::swap(m(a, j), m(b, j));
  for (std::size_t i = 0; i < n; ++i) std::swap(m(i, a), m(i, b));
}

// Row and column operation x_a -> x_a + x_b.
void add_index(Mat& m, std::size_t a, std::size_t b) {
  const std::size_t n = m.rows();
  for (std::size_t j = 0; j < n; ++j) m(a, j) += m(b, j);
  for (std::size_t i = 0; i < n; ++i) m(i, a) += m(i, b);
}

}  // namespace

Signature signature(const Mat& gram) {
  if (!gram.is_symmetric()) throw Error(Errc::NotSymmetric, "gram matrix is not symmetric");
  Mat m = gram;
  const std::size_t n = m.rows();
  Signature sig;
  std::size_t k = 0;
  for (; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(m(p, p)) == 0) ++p;
    if (p == n) {
      // Zero diagonal: find an off-diagonal entry and use x_i -> x_i + x_j.
      bool found = false;
      for (std::size_t i = k; i < n && !found; ++i) {
        for (std::size_t j = i + 1; j < n && !found; ++j) {
          if (sgn(m(i, j)) != 0) {
            add_index(m, i, j);
            p = i;
            found = true;
          }
        }
      }
      if (!found) break;
    }
    swap_index(m, k, p);
    const Scalar pivot = m(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (sgn(m(r, k)) == 0) continue;
      const Scalar f = m(r, k) / pivot;
      for (std::size_t j = k; j < n; ++j) m(r, j) -= f * m(k, j);
      for (std::size_t i = k; i < n; ++i) m(i, r) -= f * m(i, k);
    }
    if (sgn(pivot) > 0) {
      ++sig.positive;
    } else {
      ++sig.negative;
    }
  }
  sig.zero = n - sig.positive - sig.negative;
  return sig;
}

BilinearSpace::BilinearSpace(Mat gram) : gram_(std::move(gram)) {
  if (!gram_.is_symmetric()) throw Error(Errc::NotSymmetric, "gram matrix is not symmetric");
}

bool BilinearSpace::is_nondegenerate() const { return is_invertible(gram_); }

bool BilinearSpace::is_positive_definite() const {
  const Signature s = signature();
  return s.positive == dim();
}

BilinearSpace BilinearSpace::restrict_to(const SubspaceBasis& w) const {
  if (w.ambient_dim() != dim()) throw Error(Errc::DimensionMismatch, "subspace ambient dimension");
  const Mat rows = w.as_rows();
  return BilinearSpace(rows * gram_ * rows.transpose());
}

SubspaceBasis orthogonal_complement(const BilinearSpace& space, const SubspaceBasis& w) {
  if (w.ambient_dim() != space.dim()) throw Error(Errc::DimensionMismatch, "subspace ambient dimension");
  if (w.empty()) return SubspaceBasis::whole(space.dim());
  return SubspaceBasis(space.dim(), kernel(w.as_rows() * space.gram()));
}

std::string_view to_string(SubspaceKind kind) {
  switch (kind) {
    case SubspaceKind::nondegenerate: return "nondegenerate";
    case SubspaceKind::isotropic: return "isotropic";
    case SubspaceKind::totally_isotropic: return "totally_isotropic";
    case SubspaceKind::degenerate_other: return "degenerate_other";
  }
  return "unknown";
}

SubspaceKind classify_subspace(const BilinearSpace& space, const SubspaceBasis& w) {
  const SubspaceBasis perp = orthogonal_complement(space, w);
  if (same_subspace(w, perp)) return SubspaceKind::totally_isotropic;
  if (intersect(w, perp).empty()) return SubspaceKind::nondegenerate;
  if (perp.contains(w)) return SubspaceKind::isotropic;
  return SubspaceKind::degenerate_other;
}

std::vector<Vec> hyperbolic_dual(const BilinearSpace& space, const SubspaceBasis& u) {
  if (u.ambient_dim() != space.dim()) throw Error(Errc::DimensionMismatch, "subspace ambient dimension");
  if (!space.is_nondegenerate()) throw Error(Errc::DegenerateGram, "ambient form is degenerate");
  if (!space.restrict_to(u).gram().is_zero()) {
    throw Error(Errc::NotTotallyIsotropic, "form does not vanish on the subspace");
  }
  const std::size_t k = u.dim();
  if (k == 0) return {};
  const SubspaceBasis w0 = greedy_complement(orthogonal_complement(space, u), SubspaceBasis::whole(space.dim()));
  // Pairing P_ij = <u_i, w0_j> is invertible because w0 meets U^⊥ trivially.
  const Mat pairing = u.as_rows() * space.gram() * w0.as_cols();
  const Mat dual = inverse(pairing).transpose() * w0.as_rows();
  std::vector<Vec> w(k);
  for (std::size_t j = 0; j < k; ++j) w[j] = dual.row(j);
  std::vector<Vec> out(k);
  for (std::size_t j = 0; j < k; ++j) {
    out[j] = w[j];
    for (std::size_t i = 0; i < k; ++i) {
      const Scalar c = space.form(w[j], w[i]);
      if (sgn(c) != 0) axpy(out[j], -c / 2, u[i]);
    }
  }
  return out;
}

SubspaceBasis witt_complement(const BilinearSpace& space, const SubspaceBasis& u, WittFlavor flavor) {
  const std::vector<Vec> dual = hyperbolic_dual(space, u);
  const std::size_t n = space.dim();
  auto pair_span = u.vectors();
  pair_span.insert(pair_span.end(), dual.begin(), dual.end());
  const SubspaceBasis rest = orthogonal_complement(space, SubspaceBasis(n, pair_span));
  if (flavor == WittFlavor::isotropic) {
    if (!rest.empty()) {
      throw Error(Errc::NoSuchComplement, "no totally isotropic complement unless dim V = 2 dim U");
    }
    return SubspaceBasis(n, dual);
  }
  if (!space.restrict_to(rest).is_positive_definite()) {
    throw Error(Errc::NoSuchComplement, "form is not positive definite off the hyperbolic part");
  }
  std::vector<Vec> w;
  w.reserve(n - u.dim());
  for (std::size_t i = 0; i < dual.size(); ++i) {
    Vec v = dual[i];
    axpy(v, Scalar(1, 2), u[i]);
    w.push_back(std::move(v));
  }
  w.insert(w.end(), rest.vectors().begin(), rest.vectors().end());
  return SubspaceBasis(n, std::move(w));
}

BilinearSpace hyperbolic_space(std::size_t n) {
  Mat g(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, n + i) = 1;
    g(n + i, i) = 1;
  }
  return BilinearSpace(std::move(g));
}

}  // namespace adlie
