#pragma once

#include <cstddef>
#include <vector>

#include "adlie/matrix.hpp"

namespace adlie {

/// A linearly independent list of coordinate vectors in an ambient space.
/// The given vectors are kept in order; canonical() gives the reduced
/// echelon basis used for comparisons and deterministic output.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim) {}
  /// Throws DimensionMismatch on wrong lengths, LinearlyDependent on dependent input.
  SubspaceBasis(std::size_t ambient_dim, std::vector<Vec> vectors);

  /// Basis of the span of arbitrary (possibly dependent) vectors, canonical form.
  static SubspaceBasis span(std::size_t ambient_dim, const std::vector<Vec>& vectors);
  static SubspaceBasis whole(std::size_t n);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }
  const std::vector<Vec>& vectors() const { return vectors_; }
  const Vec& operator[](std::size_t i) const { return vectors_[i]; }

  /// Vectors as rows (dim × ambient_dim).
  Mat as_rows() const;
  /// Vectors as columns (ambient_dim × dim).
  Mat as_cols() const;
  SubspaceBasis canonical() const;

  bool contains(const Vec& v) const;
  bool contains(const SubspaceBasis& other) const;
  /// Coordinates of v in this basis; throws Inconsistent when v is outside the span.
  Vec coordinates(const Vec& v) const;

 private:
  std::size_t ambient_dim_;
  std::vector<Vec> vectors_;
};

/// Equality as subspaces (not as ordered bases).
bool same_subspace(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b);
/// {y : y·x = 0 for all x in a}, with the plain dot product.
SubspaceBasis annihilator(const SubspaceBasis& a);
/// Vectors of `within` (taken in order) that extend `sub` to a basis of sub + within.
/// With within = whole space this is the greedy standard-basis complement.
SubspaceBasis greedy_complement(const SubspaceBasis& sub, const SubspaceBasis& within);
/// Image of a subspace under a linear map.
SubspaceBasis image(const Mat& map, const SubspaceBasis& sub);

}  // namespace adlie
