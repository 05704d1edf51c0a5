#pragma once

#include <cstddef>

#include "adlie/lie_algebra.hpp"
#include "adlie/rho.hpp"
#include "adlie/subspace.hpp"

namespace adlie {

/// n(V, rho) on the basis (z_1..z_n, v_1..v_n), gram [[0, I], [I, 0]],
/// [v_j, v_k] = Σ_i <A^i e_j, e_k>_G z_i. Throws InvalidRho.
MetricLieAlgebra modified_cotangent(const RhoMap& rho);

/// h* ⋊ h on the basis (phi_1..phi_n, x_1..x_n) with the coadjoint action
/// x.phi = -phi∘ad_x and the hyperbolic metric.
MetricLieAlgebra cotangent(const LieAlgebra& h);

/// Orthogonal direct sum of (R^m, gram_m) (first) and m. Throws DegenerateGram.
MetricLieAlgebra add_central_factor(const MetricLieAlgebra& m, std::size_t dim, const Mat& gram);

struct CenterSplit {
  SubspaceBasis ztilde;  ///< complement of C^1 in the center, non-degenerate
  SubspaceBasis perp;    ///< ztilde^⊥
  MetricLieAlgebra perp_algebra;  ///< perp in its own basis
};

/// Throws NotTwoStep (class > 2), NotAdInvariant.
CenterSplit split_center(const MetricLieAlgebra& m);

struct NormalFormResult {
  std::size_t corank = 0;
  Mat central_gram;
  RhoMap rho;
  /// Isometric isomorphism from the input onto `model`.
  Mat iso;
  /// add_central_factor(modified_cotangent(rho), corank, central_gram)
  MetricLieAlgebra model;
};

/// Throws NotTwoStep, NotAdInvariant; InvariantBreach if the rebuilt model fails verification.
NormalFormResult normal_form(const MetricLieAlgebra& m);

/// R Z ⊕ b ⊕ R T on the basis (Z, b_1..b_n, T):
/// [x, y] = [x, y]_b + phi(S x, y) Z, [T, x] = S x, <Z, T> = 1.
/// Throws NotSkewDerivation, NotAdInvariant.
MetricLieAlgebra double_extension(const MetricLieAlgebra& b, const Mat& s);

/// [[-Bᵀ, C], [0, B]] on the (z, v) basis of a modified cotangent. Throws ShapeMismatch.
Mat cotangent_block_derivation(const Mat& b, const Mat& c);

/// -rho(B w) = rho(w) B + Bᵗ rho(w) for all w, with Bᵗ the gram-transpose.
/// Together with C skew this characterizes the skew derivations of n(V, rho).
bool block_b_condition(const RhoMap& rho, const Mat& b);

}  // namespace adlie
