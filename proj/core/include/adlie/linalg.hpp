#pragma once

#include <cstddef>
#include <vector>

#include "adlie/matrix.hpp"
#include "adlie/subspace.hpp"

namespace adlie {

struct Rref {
  Mat reduced;
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

Rref rref(Mat m);
std::size_t rank(const Mat& m);
Scalar determinant(const Mat& m);
bool is_invertible(const Mat& m);
/// Throws Singular.
Mat inverse(const Mat& m);

/// Basis of {x : m x = 0}, normalized to reduced row echelon form.
std::vector<Vec> kernel(const Mat& m);

struct AffineSolution {
  Vec particular;  ///< free variables set to zero
  SubspaceBasis kernel;
};

/// Throws DimensionMismatch when m.rows() != b.size(), Inconsistent when no solution exists.
AffineSolution solve_linear(const Mat& m, const Vec& b);

/// Solves m X = b column by column. Throws Inconsistent.
Mat solve_matrix(const Mat& m, const Mat& b);

}  // namespace adlie
