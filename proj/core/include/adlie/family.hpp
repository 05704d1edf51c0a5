#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "adlie/matrix.hpp"

namespace adlie {

/// The affine family {base + Σ t_i directions[i]}.
struct ParamMatrixFamily {
  Mat base;
  std::vector<Mat> directions;

  std::size_t parameter_count() const { return directions.size(); }
  /// Throws DimensionMismatch when a direction's shape differs from base.
  void check_shapes() const;
  Mat evaluate(const Vec& params) const;
};

enum class FamilyMethod {
  constant,              ///< no parameters, plain determinant
  numeric_witness,       ///< a sampled parameter vector gave an invertible member
  common_kernel,         ///< all matrices share a kernel (or cokernel) vector
  symbolic_determinant,  ///< multivariate determinant expanded exactly
  grid,                  ///< determinant evaluated on a full grid {0..deg}^p
};

std::string_view to_string(FamilyMethod method);

struct FamilyDecision {
  bool invertible = false;
  Vec witness;  ///< parameters of an invertible member when invertible
  FamilyMethod method = FamilyMethod::constant;
  /// For common_kernel: a nonzero x with M x = 0 (or xᵀ M = 0) for every member.
  Vec kernel_certificate;
  bool certificate_is_left = false;
};

struct FamilyOptions {
  std::size_t symbolic_limit = 8;
  std::size_t grid_limit = 200000;
  std::size_t random_attempts = 24;
  std::uint32_t seed = 20240611u;
};

/// Decides whether some member of the family is invertible. A "No" is always a
/// proof (shared kernel, identically zero determinant, or exhaustive grid).
/// Throws DimensionMismatch for non-square members, TooManyParameters when
/// no exact method applies.
FamilyDecision family_contains_invertible(const ParamMatrixFamily& family,
                                          const FamilyOptions& options = {});

}  // namespace adlie
