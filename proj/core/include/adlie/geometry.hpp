#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "adlie/lie_algebra.hpp"

namespace adlie {

/// Left-invariant Levi-Civita connection: ∇_{e_i} e_j = Σ_k Γ^k_ij e_k.
struct ConnectionCoeffs {
  std::size_t n = 0;
  std::vector<Scalar> gamma;  ///< index (i*n + j)*n + k

  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const { return gamma[(i * n + j) * n + k]; }
  /// Matrix of ∇_{e_i}.
  Mat nabla(std::size_t i) const;
};

/// 2<∇_x y, z> = <[x,y],z> - <[y,z],x> + <[z,x],y>. Throws DegenerateMetric.
ConnectionCoeffs koszul(const LieAlgebra& lie, const Mat& gram);
ConnectionCoeffs koszul(const MetricLieAlgebra& m);

bool torsion_free(const LieAlgebra& lie, const ConnectionCoeffs& c);
/// <∇_x y, z> + <y, ∇_x z> = 0 on basis triples.
bool metric_compatible(const Mat& gram, const ConnectionCoeffs& c);

struct CurvatureResult {
  std::size_t n = 0;
  std::vector<Mat> r;  ///< r[i*n + j] = R(e_i, e_j) = [∇_i, ∇_j] - ∇_{[e_i, e_j]}
  bool flat = true;
  /// For ad-invariant metrics: whether R(x, y) = -1/4 ad_{[x,y]} (always asserted).
  std::optional<bool> matches_ad_formula;

  const Mat& at(std::size_t i, std::size_t j) const { return r[i * n + j]; }
};

/// Generic curvature of the Koszul connection. For ad-invariant metrics the
/// closed form -1/4 ad_{[x,y]} is checked and a mismatch throws InvariantBreach.
CurvatureResult curvature(const MetricLieAlgebra& m);

struct RicciKilling {
  Mat ricci;    ///< Ric_jk = Σ_i (R(e_i, e_j) e_k)_i
  Mat killing;
};

/// Asserts Ric = -1/4 B. Throws NotAdInvariant.
RicciKilling ricci_and_killing(const MetricLieAlgebra& m);

/// Basis of span{R(e_i, e_j)}, asserted equal to span{ad_w : w in C^1}. Throws NotAdInvariant.
std::vector<Mat> holonomy_span(const MetricLieAlgebra& m);

struct MullerReport {
  bool orthogonal = false;      ///< Aᵀ G A = G
  bool double_bracket = false;  ///< A[x,[x,y]] = [Ax,[Ax,Ay]] for all x, y

  bool ok() const { return orthogonal && double_bracket; }
};

/// The double-bracket identity is quadratic in x and is checked by
/// polarization on x in {e_i} ∪ {e_i + e_j}. Throws DimensionMismatch.
MullerReport muller_check(const MetricLieAlgebra& m, const Mat& a);
/// Same conditions for a map between two algebras: Aᵀ G' A = G, A[x,[x,y]] = [Ax,[Ax,Ay]]'.
MullerReport muller_check(const MetricLieAlgebra& from, const MetricLieAlgebra& to, const Mat& a);

struct IsometryDescriptor {
  enum class Kind { orthogonal_group, generic };
  Kind kind = Kind::generic;
  std::size_t p = 0;  ///< for orthogonal_group: O(p, q)
  std::size_t q = 0;
  std::string description;
};

/// O(k, k) with k = dim C^1 for corank-0 2-step nilpotent ad-invariant algebras,
/// the generic orthogonality + double-bracket description otherwise.
/// Throws NotEligible for metrics that are not ad-invariant.
IsometryDescriptor isometry_descriptor(const MetricLieAlgebra& m);

/// Linear isometry matching dual bases z_i -> z_i', v_i -> v_i' of two corank-0
/// 2-step nilpotent ad-invariant algebras. Not a Lie isomorphism in general.
/// Throws DimensionMismatch, NotEligible.
Mat build_cross_isometry(const MetricLieAlgebra& m, const MetricLieAlgebra& m2);

/// Cayley transform (I - X)^{-1}(I + X) with X = G^{-1} K, K antisymmetric;
/// the result preserves G. Throws NotSkew, Singular.
Mat cayley(const Mat& gram, const Mat& k);

}  // namespace adlie
