#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "adlie/scalar.hpp"

namespace adlie {

using Vec = std::vector<Scalar>;

/// Dense row-major matrix of exact rationals.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);
  /// Integer literal rows, e.g. Mat{{0, 1}, {-1, 0}}. Rows must have equal length.
  Mat(std::initializer_list<std::initializer_list<long>> rows);

  static Mat zeros(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Mat from_cols(const std::vector<Vec>& cols, std::size_t rows);
  static Mat diagonal(const Vec& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<Scalar>& data() const { return data_; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);
  void set_col(std::size_t j, const Vec& v);

  Mat transpose() const;
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);

  bool is_zero() const;
  bool is_symmetric() const;
  bool is_antisymmetric() const;
  Scalar trace() const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Scalar& s);

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Mat operator+(Mat a, const Mat& b);
Mat operator-(Mat a, const Mat& b);
Mat operator-(Mat a);
Mat operator*(const Mat& a, const Mat& b);
Mat operator*(Mat a, const Scalar& s);
Mat operator*(const Scalar& s, Mat a);
Vec operator*(const Mat& a, const Vec& x);

/// Block diagonal [[a, 0], [0, b]].
Mat direct_sum(const Mat& a, const Mat& b);
Mat commutator(const Mat& a, const Mat& b);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Scalar& s);
/// a += s * b
void axpy(Vec& a, const Scalar& s, const Vec& b);
Scalar dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);

/// xᵀ G y
Scalar form(const Mat& gram, const Vec& x, const Vec& y);

/// Row-major flattening, used to treat matrices as vectors in linear solves.
Vec flatten(const Mat& m);
Mat unflatten(const Vec& v, std::size_t rows, std::size_t cols);

}  // namespace adlie
