#pragma once

#include <algorithm>
#include <cstddef>
#include <random>

#include "adlie/linalg.hpp"
#include "adlie/matrix.hpp"

namespace adlie::testing {

inline Scalar random_scalar(std::mt19937& rng, long range = 5, long max_den = 4) {
  std::uniform_int_distribution<long> num(-range, range);
  std::uniform_int_distribution<long> den(1, max_den);
  return make_scalar(num(rng), den(rng));
}

inline Scalar random_nonzero(std::mt19937& rng, long range = 5, long max_den = 4) {
  for (;;) {
    Scalar s = random_scalar(rng, range, max_den);
    if (!is_zero(s)) return s;
  }
}

inline Mat random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, long range = 3) {
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar(rng, range, 3);
  return m;
}

inline Mat random_antisymmetric(std::mt19937& rng, std::size_t n, long range = 3) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = random_scalar(rng, range, 3);
      m(j, i) = -m(i, j);
    }
  }
  return m;
}

/// L U P with unit triangular L, U and a random permutation P.
inline Mat random_invertible(std::mt19937& rng, std::size_t n, long range = 2) {
  Mat l = Mat::identity(n);
  Mat u = Mat::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = random_scalar(rng, range, 2);
      u(j, i) = random_scalar(rng, range, 2);
    }
  }
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  Mat p(n, n);
  for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = 1;
  return l * u * p;
}

inline Mat random_positive_definite(std::mt19937& rng, std::size_t n) {
  const Mat a = random_matrix(rng, n, n, 2);
  return a.transpose() * a + Mat::identity(n);
}

/// Nonzero diagonal entries with random signs.
inline Mat random_nondegenerate_diagonal(std::mt19937& rng, std::size_t n) {
  Vec d(n);
  for (auto& x : d) x = random_nonzero(rng, 3, 3);
  return Mat::diagonal(d);
}

}  // namespace adlie::testing
