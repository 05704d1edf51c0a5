#include "adlie/linalg.hpp"

#include <utility>

#include "adlie/error.hpp"

namespace adlie {

Rref rref(Mat m) {
  Rref out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
    }
    const Scalar inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Scalar f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

Scalar determinant(const Mat& m) {
  if (!m.is_square()) throw Error(Errc::DimensionMismatch, "determinant of non-square matrix");
  Mat a = m;
  const std::size_t n = a.rows();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      const Scalar f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

bool is_invertible(const Mat& m) { return m.is_square() && rank(m) == m.rows(); }

Mat inverse(const Mat& m) {
  if (!m.is_square()) throw Error(Errc::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Mat(0, 0);
  Mat aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Mat::identity(n));
  Rref r = rref(std::move(aug));
  if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) throw Error(Errc::Singular, "matrix is singular");
  return r.reduced.block(0, n, n, n);
}

std::vector<Vec> kernel(const Mat& m) {
  const Rref r = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> raw;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec x(cols);
    x[f] = 1;
    for (std::size_t row = 0; row < r.pivots.size(); ++row) x[r.pivots[row]] = -r.reduced(row, f);
    raw.push_back(std::move(x));
  }
  if (raw.empty()) return raw;
  const Rref k = rref(Mat::from_rows(raw, cols));
  std::vector<Vec> out;
  out.reserve(k.pivots.size());
  for (std::size_t i = 0; i < k.pivots.size(); ++i) out.push_back(k.reduced.row(i));
  return out;
}

AffineSolution solve_linear(const Mat& m, const Vec& b) {
  if (m.rows() != b.size()) throw Error(Errc::DimensionMismatch, "right-hand side length");
  const std::size_t cols = m.cols();
  Mat aug(m.rows(), cols + 1);
  aug.set_block(0, 0, m);
  aug.set_col(cols, b);
  const Rref r = rref(std::move(aug));
  if (!r.pivots.empty() && r.pivots.back() == cols) {
    throw Error(Errc::Inconsistent, "linear system has no solution");
  }
  Vec x(cols);
  for (std::size_t row = 0; row < r.pivots.size(); ++row) x[r.pivots[row]] = r.reduced(row, cols);
  return AffineSolution{std::move(x), SubspaceBasis(cols, kernel(m))};
}

Mat solve_matrix(const Mat& m, const Mat& b) {
  if (m.rows() != b.rows()) throw Error(Errc::DimensionMismatch, "right-hand side rows");
  const std::size_t cols = m.cols();
  Mat aug(m.rows(), cols + b.cols());
  aug.set_block(0, 0, m);
  aug.set_block(0, cols, b);
  const Rref r = rref(std::move(aug));
  if (!r.pivots.empty() && r.pivots.back() >= cols) {
    throw Error(Errc::Inconsistent, "linear system has no solution");
  }
  Mat x(cols, b.cols());
  for (std::size_t row = 0; row < r.pivots.size(); ++row)
    for (std::size_t j = 0; j < b.cols(); ++j) x(r.pivots[row], j) = r.reduced(row, cols + j);
  return x;
}

}  // namespace adlie
