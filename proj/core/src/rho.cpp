#include "adlie/rho.hpp"

#include <algorithm>
#include <numeric>

#include "adlie/error.hpp"
#include "adlie/linalg.hpp"
#include "adlie/liealg.hpp"

namespace adlie {

RhoMap::RhoMap(BilinearSpace space, std::vector<Mat> mats) : space_(std::move(space)), mats_(std::move(mats)) {
  const std::size_t n = space_.dim();
  if (mats_.size() != n) throw Error(Errc::ShapeMismatch, "rho needs one matrix per basis vector");
  for (const auto& m : mats_) {
    if (m.rows() != n || m.cols() != n) throw Error(Errc::ShapeMismatch, "rho matrix has wrong size");
  }
}

Mat RhoMap::at(const Vec& v) const {
  if (v.size() != dim()) throw Error(Errc::DimensionMismatch, "rho argument length");
  Mat out(dim(), dim());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) out += mats_[i] * v[i];
  }
  return out;
}

RhoReport validate_rho(const RhoMap& rho) {
  RhoReport report;
  const std::size_t n = rho.dim();
  const Mat& g = rho.space().gram();
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_skew(g, rho.mats()[i])) {
      report.skew = false;
      report.skew_violations.push_back(i);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      bool bad = false;
      for (std::size_t r = 0; r < n && !bad; ++r) {
        bad = rho.mats()[i](r, j) + rho.mats()[j](r, i) != 0;
      }
      if (bad) {
        report.ss = false;
        report.ss_violations.emplace_back(i, j);
      }
    }
  }
  if (n > 0) {
    std::vector<Vec> flat;
    flat.reserve(n);
    for (const auto& m : rho.mats()) flat.push_back(flatten(m));
    report.injective = rank(Mat::from_rows(flat, n * n)) == n;
  }
  return report;
}

AltTrilinearForm::AltTrilinearForm(std::size_t n) : n_(n), c_(n * n * n) {}

AltTrilinearForm AltTrilinearForm::from_tensor(std::size_t n, const std::vector<Scalar>& components) {
  if (components.size() != n * n * n) throw Error(Errc::DimensionMismatch, "tensor size");
  AltTrilinearForm w(n);
  w.c_ = components;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& x = w.get(i, j, k);
        if (w.get(j, i, k) != -x || w.get(i, k, j) != -x) {
          throw Error(Errc::NotAlternating, "tensor is not totally antisymmetric");
        }
      }
    }
  }
  return w;
}

void AltTrilinearForm::set(std::size_t i, std::size_t j, std::size_t k, const Scalar& value) {
  if (i >= n_ || j >= n_ || k >= n_) throw Error(Errc::DimensionMismatch, "form index out of range");
  if (i == j || j == k || i == k) {
    if (sgn(value) != 0) throw Error(Errc::NotAlternating, "repeated index with nonzero value");
    return;
  }
  auto at = [&](std::size_t a, std::size_t b, std::size_t c) -> Scalar& { return c_[(a * n_ + b) * n_ + c]; };
  at(i, j, k) = value;
  at(j, k, i) = value;
  at(k, i, j) = value;
  at(j, i, k) = -value;
  at(i, k, j) = -value;
  at(k, j, i) = -value;
}

bool AltTrilinearForm::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

AltTrilinearForm to_form(const RhoMap& rho) {
  const std::size_t n = rho.dim();
  std::vector<Scalar> t(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Mat ga = rho.space().gram() * rho.mats()[i];
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t[(i * n + j) * n + k] = ga(k, j);
  }
  try {
    return AltTrilinearForm::from_tensor(n, t);
  } catch (const Error&) {
    throw Error(Errc::InvalidRho, "<A^i e_j, e_k> is not totally antisymmetric");
  }
}

RhoMap from_form(const AltTrilinearForm& form, const BilinearSpace& space) {
  const std::size_t n = form.dim();
  if (space.dim() != n) throw Error(Errc::DimensionMismatch, "form and space dimensions differ");
  if (!space.is_positive_definite()) throw Error(Errc::NotPositiveDefinite, "space is not an inner product space");
  const Mat ginv = inverse(space.gram());
  std::vector<Mat> mats;
  mats.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Mat x(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) x(k, j) = form.get(i, j, k);
    mats.push_back(ginv * x);
  }
  return RhoMap(space, std::move(mats));
}

RhoMap from_form(const AltTrilinearForm& form) { return from_form(form, BilinearSpace::identity(form.dim())); }

SubspaceBasis radical(const AltTrilinearForm& form) {
  const std::size_t n = form.dim();
  if (n == 0) return SubspaceBasis(0);
  Mat m(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(j * n + k, i) = form.get(i, j, k);
  return SubspaceBasis(n, kernel(m));
}

namespace {

Vec dim4_formula(const AltTrilinearForm& w) {
  return {w.get(1, 2, 3), -w.get(0, 2, 3), w.get(0, 1, 3), -w.get(0, 1, 2)};
}

const Mat& r_block(std::size_t s) {
  static const Mat blocks[3] = {
      Mat{{0, 0, 0}, {0, 0, -1}, {0, 1, 0}},
      Mat{{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}},
      Mat{{0, -1, 0}, {1, 0, 0}, {0, 0, 0}},
  };
  return blocks[s];
}

RhoMap primitive3(const Scalar& a) {
  if (sgn(a) == 0) throw Error(Errc::BadParameter, "the three-dimensional family needs a != 0");
  std::vector<Mat> mats;
  // r-blocks equal the a = -1 member; scale to get a general a.
  for (std::size_t s = 0; s < 3; ++s) mats.push_back(r_block(s) * (-a));
  return RhoMap(BilinearSpace::identity(3), std::move(mats));
}

RhoMap primitive5() {
  std::vector<Mat> mats(5, Mat(5, 5));
  mats[0].set_block(0, 0, r_block(0));
  mats[1].set_block(0, 0, r_block(1));
  mats[2] = Mat{{0, -1, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, -1}, {0, 0, 0, 1, 0}};
  mats[3] = Mat{{0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 1}, {0, 0, 0, 0, 0}, {0, 0, -1, 0, 0}};
  // With the opposite sign this matrix violates rho(u)v + rho(v)u = 0 at
  // the pairs (3,5) and (4,5).
  mats[4] = Mat{{0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, -1, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 0, 0}};
  return RhoMap(BilinearSpace::identity(5), std::move(mats));
}

RhoMap primitive7() {
  AltTrilinearForm w(7);
  const std::size_t lines[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5}};
  for (const auto& l : lines) w.set(l[0] - 1, l[1] - 1, l[2] - 1, Scalar(1));
  return from_form(w);
}

RhoMap block_sum(const std::vector<RhoMap>& parts) {
  RhoMap out(BilinearSpace(Mat(0, 0)), {});
  for (const auto& p : parts) out = direct_sum_rho(out, p);
  return out;
}

}  // namespace

Vec radical_witness_dim4(const AltTrilinearForm& form) {
  if (form.dim() != 4) throw Error(Errc::DimensionMismatch, "the radical witness rule is for dimension 4");
  if (form.is_zero()) return unit_vec(4, 0);
  return dim4_formula(form);
}

RhoMap primitive(std::size_t n, const Scalar& a) {
  switch (n) {
    case 3: return primitive3(a);
    case 5: return primitive5();
    case 7: return primitive7();
    default: throw Error(Errc::BadParameter, "primitive blocks exist for n = 3, 5, 7");
  }
}

RhoMap direct_sum_rho(const RhoMap& a, const RhoMap& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  std::vector<Mat> mats;
  mats.reserve(na + nb);
  for (const auto& m : a.mats()) mats.push_back(direct_sum(m, Mat(nb, nb)));
  for (const auto& m : b.mats()) mats.push_back(direct_sum(Mat(na, na), m));
  return RhoMap(BilinearSpace(direct_sum(a.space().gram(), b.space().gram())), std::move(mats));
}

std::variant<RhoMap, NonexistenceCertificate> generate(std::size_t n) {
  if (n == 0) throw Error(Errc::BadParameter, "dimension must be positive");
  if (n <= 2) {
    return NonexistenceCertificate{n, "no three distinct indices: every alternating 3-form vanishes, so rho = 0", 0};
  }
  if (n == 4) {
    // rho(x) for the witness x is bilinear in the four form coordinates, so
    // vanishing on {0,1,2}^4 proves it vanishes identically.
    std::size_t checked = 0;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c)
          for (int d = 0; d < 3; ++d) {
            AltTrilinearForm w(4);
            w.set(0, 1, 2, Scalar(a));
            w.set(0, 1, 3, Scalar(b));
            w.set(0, 2, 3, Scalar(c));
            w.set(1, 2, 3, Scalar(d));
            if (!from_form(w).at(dim4_formula(w)).is_zero()) {
              throw Error(Errc::InvariantBreach, "dimension-4 radical witness failed");
            }
            ++checked;
          }
    return NonexistenceCertificate{
        4, "x = (w234, -w134, w124, -w123) (e1 if w = 0) satisfies rho(x) = 0 for every alternating w", checked};
  }
  std::vector<RhoMap> parts;
  std::size_t tail = n % 3 == 0 ? 0 : (n % 3 == 2 ? 5 : 7);
  for (std::size_t i = 0; i < (n - tail) / 3; ++i) parts.push_back(primitive3(Scalar(-1)));
  if (tail != 0) parts.push_back(primitive(tail));
  return block_sum(parts);
}

bool check_t2_condition(const RhoMap& rho, const RhoMap& rho2, const Mat& a, const Mat& b) {
  const std::size_t n = rho.dim();
  if (rho2.dim() != n || a.rows() != n || a.cols() != n || b.rows() != n || b.cols() != n) {
    throw Error(Errc::DimensionMismatch, "t2 condition shapes");
  }
  if (!is_invertible(a) || !is_invertible(b)) throw Error(Errc::Singular, "A and B must be invertible");
  const Mat bt = inverse(rho.space().gram()) * b.transpose() * rho2.space().gram();
  for (std::size_t i = 0; i < n; ++i) {
    if (rho.at(a.col(i)) != bt * rho2.mats()[i] * b) return false;
  }
  return true;
}

namespace {

std::optional<Mat> solve_for_a(const RhoMap& rho, const RhoMap& rho2, const Mat& b) {
  const std::size_t n = rho.dim();
  std::vector<Vec> cols;
  for (const auto& m : rho.mats()) cols.push_back(flatten(m));
  const Mat basis = Mat::from_cols(cols, n * n);
  const Mat bt = inverse(rho.space().gram()) * b.transpose() * rho2.space().gram();
  Mat a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    try {
      a.set_col(i, solve_linear(basis, flatten(bt * rho2.mats()[i] * b)).particular);
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  if (!is_invertible(a)) return std::nullopt;
  return a;
}

}  // namespace

std::optional<std::pair<Mat, Mat>> search_iso_small(const RhoMap& rho, const RhoMap& rho2) {
  const std::size_t n = rho.dim();
  if (rho2.dim() != n) return std::nullopt;
  if (!validate_rho(rho).injective) return std::nullopt;
  auto attempt = [&](const Mat& b) -> std::optional<std::pair<Mat, Mat>> {
    auto a = solve_for_a(rho, rho2, b);
    if (a && check_t2_condition(rho, rho2, *a, b)) return std::make_pair(*a, b);
    return std::nullopt;
  };
  if (auto found = attempt(Mat::identity(n))) return found;
  if (n <= 7) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) {
      Mat b(n, n);
      for (std::size_t i = 0; i < n; ++i) b(perm[i], i) = 1;
      if (auto found = attempt(b)) return found;
    }
  }
  if (n <= 10) {
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      Mat b = Mat::identity(n);
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) b(i, i) = -1;
      if (auto found = attempt(b)) return found;
    }
  }
  return std::nullopt;
}

}  // namespace adlie
