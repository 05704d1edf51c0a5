#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "adlie/lie_algebra.hpp"
#include "adlie/liealg.hpp"

namespace adlie {

struct RBracketResult {
  LieAlgebra bracket;         ///< [x, y]_r = [r x, y] + [x, r y]
  ValidationReport jacobi;
  bool classical = false;     ///< [., .]_r satisfies Jacobi
};

/// Throws ShapeMismatch.
RBracketResult r_bracket(const LieAlgebra& g, const Mat& r);

struct LiftResult {
  MetricLieAlgebra cotangent;  ///< n(g, ad) = g* ⊕ g, basis (z, v)
  Mat lifted;                  ///< diag(K r K^{-1}, r), K the metric of g
  bool classical = false;
  bool skew = false;           ///< lifted is skew for the hyperbolic metric
  bool input_skew = false;     ///< r is skew for K
};

/// Lift of r to the modified cotangent of g built from the adjoint
/// representation. The dual factor is r transported to g* by the metric.
/// Throws ShapeMismatch, NotAdInvariant, InvalidRho (g has a center).
LiftResult lift_r(const MetricLieAlgebra& g, const Mat& r);

struct CobracketResult {
  /// delta(e_k) as antisymmetric matrices: delta(x) = ad_x R + R ad_xᵀ, R = -r G^{-1}.
  std::vector<Mat> delta;
  bool cocycle = false;            ///< delta([x,y]) = x.delta(y) - y.delta(x)
  LieAlgebra dual;                 ///< [e^a, e^b]_* = Σ_k delta(e_k)_ab e^k on g*
  bool dual_jacobi = false;
  bool r_bracket_jacobi = false;
  bool matches_r_bracket = false;  ///< x -> G x maps [., .]_r onto the dual bracket
};

/// Coboundary data for any G-skew r (no classicality requirement).
/// Throws NotSkew, NotAdInvariant, ShapeMismatch.
CobracketResult coboundary(const MetricLieAlgebra& m, const Mat& r);

/// coboundary() restricted to classical r. Throws NotSkew, NotClassical, NotAdInvariant.
CobracketResult cobracket_from_r(const MetricLieAlgebra& m, const Mat& r);

struct ComplexStructureReport {
  bool square = false;      ///< J² = -I
  bool integrable = false;  ///< Nijenhuis tensor vanishes
  bool j_bracket_jacobi = false;
  /// First basis pair (i, j) with N(e_i, e_j) != 0.
  std::optional<std::pair<std::size_t, std::size_t>> nijenhuis_violation;
};

/// Throws OddDimension, ShapeMismatch.
ComplexStructureReport complex_structure_check(const LieAlgebra& g, const Mat& j);

}  // namespace adlie
