#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "adlie/bilinear.hpp"
#include "adlie/matrix.hpp"

namespace adlie {

/// Sparse bracket value: (k, c^k) pairs sorted by k, zero coefficients omitted.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

/// Structure constants [e_i, e_j] = Σ_k c^k_ij e_k, 0-based indices.
/// Every ordered pair is stored, so antisymmetry is a checked property rather
/// than an assumption.
class LieAlgebra {
 public:
  explicit LieAlgebra(std::size_t dim = 0);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Empty, or exactly dim entries.
  void set_labels(std::vector<std::string> labels);

  /// Sets [e_i, e_j] = value and [e_j, e_i] = -value. Throws BadParameter for i == j.
  void set_bracket(std::size_t i, std::size_t j, const Vec& value);
  /// Adds c e_k to [e_i, e_j] and -c e_k to [e_j, e_i].
  void add_bracket_term(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);
  /// Sets c^k_ij for the ordered pair (i, j) only. Used for raw input that
  /// still has to be validated.
  void set_constant_raw(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);

  const SparseVec& bracket_sparse(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  Scalar constant(std::size_t i, std::size_t j, std::size_t k) const;
  Vec bracket(std::size_t i, std::size_t j) const;
  Vec bracket(const Vec& x, const Vec& y) const;
  /// Matrix of ad_x, (ad_x)_{kj} = k-th coordinate of [x, e_j].
  Mat ad(const Vec& x) const;
  Mat ad_basis(std::size_t i) const;
  bool is_abelian() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.table_ == b.table_;
  }

 private:
  void check_index(std::size_t i) const;

  std::size_t dim_;
  std::vector<SparseVec> table_;
  std::vector<std::string> labels_;
};

/// A Lie algebra paired with a non-degenerate symmetric form of the same dimension.
struct MetricLieAlgebra {
  MetricLieAlgebra() = default;
  /// Throws DimensionMismatch, DegenerateMetric.
  MetricLieAlgebra(LieAlgebra algebra, BilinearSpace metric);

  LieAlgebra algebra;
  BilinearSpace metric;

  std::size_t dim() const { return algebra.dim(); }
  const Mat& gram() const { return metric.gram(); }
};

}  // namespace adlie
