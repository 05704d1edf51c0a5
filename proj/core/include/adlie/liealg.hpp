#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "adlie/bilinear.hpp"
#include "adlie/family.hpp"
#include "adlie/lie_algebra.hpp"
#include "adlie/subspace.hpp"

namespace adlie {

struct ValidationReport {
  /// (i, j, k) with c^k_ij + c^k_ji != 0, i <= j.
  std::vector<std::array<std::size_t, 3>> antisymmetry;
  /// (i, j, k, l): the l-th coordinate of the Jacobiator of (e_i, e_j, e_k) is nonzero.
  std::vector<std::array<std::size_t, 4>> jacobi;

  bool ok() const { return antisymmetry.empty() && jacobi.empty(); }
};

ValidationReport validate(const LieAlgebra& lie);

struct SeriesReport {
  /// C^0 = g, C^{r+1} = [g, C^r], up to the first repeated term.
  std::vector<SubspaceBasis> descending;
  /// C_0 = 0, C_1 = center, C_{r+1} = {x : [x, g] ⊂ C_r}, up to the first repeated term.
  std::vector<SubspaceBasis> ascending;
  SubspaceBasis center;
  SubspaceBasis commutator;
  /// Least k with C^k = 0; empty when not nilpotent.
  std::optional<std::size_t> nilpotency_class;
  /// dim center - dim commutator, reported for every nilpotent algebra.
  std::optional<std::size_t> corank;

  bool is_nilpotent() const { return nilpotency_class.has_value(); }
  bool is_two_step() const { return nilpotency_class == 2u; }
  bool at_most_two_step() const { return nilpotency_class.has_value() && *nilpotency_class <= 2; }
};

SeriesReport series(const LieAlgebra& lie);
SubspaceBasis center(const LieAlgebra& lie);
SubspaceBasis commutator(const LieAlgebra& lie);
/// span{[a, b] : a in A, b in B}
SubspaceBasis bracket_span(const LieAlgebra& lie, const SubspaceBasis& a, const SubspaceBasis& b);
bool is_ideal(const LieAlgebra& lie, const SubspaceBasis& w);

/// B_ij = tr(ad_{e_i} ad_{e_j}).
BilinearSpace killing_form(const LieAlgebra& lie);

struct CompactnessReport {
  bool killing_negative_semidefinite = false;
  bool splits_center_plus_semisimple = false;
};

CompactnessReport compactness_test(const LieAlgebra& lie);

struct InvarianceReport {
  bool ok = true;
  /// First basis triple (x, y, z), lexicographic, with <[x,y],z> + <y,[x,z]> != 0.
  std::optional<std::array<std::size_t, 3>> violation;

  explicit operator bool() const { return ok; }
};

InvarianceReport is_ad_invariant(const MetricLieAlgebra& m);
/// Same check for an arbitrary symmetric form; no non-degeneracy requirement.
InvarianceReport is_ad_invariant(const LieAlgebra& lie, const Mat& form);

/// All symmetric G with <[x,y],z> + <y,[x,z]> = 0, as a linear family (base 0).
ParamMatrixFamily invariant_symmetric_forms(const LieAlgebra& lie);

struct PerpDualityReport {
  /// per_r[r]: orthogonal complement of C^r equals C_r.
  std::vector<bool> per_r;
  /// dim g = dim center + dim commutator.
  bool dimension_identity = false;

  bool ok() const;
};

/// Throws NotAdInvariant.
PerpDualityReport check_perp_duality(const MetricLieAlgebra& m);

bool is_derivation(const LieAlgebra& lie, const Mat& d);
/// G D + (G D)ᵀ = 0.
bool is_skew(const Mat& gram, const Mat& d);

/// Derivations skew for the metric, as a linear family (base 0). Throws NotAdInvariant.
ParamMatrixFamily skew_derivations(const MetricLieAlgebra& m);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);
MetricLieAlgebra direct_sum(const MetricLieAlgebra& a, const MetricLieAlgebra& b);

/// phi[x, y] = [phi x, phi y]' on basis pairs, phi invertible. Throws DimensionMismatch.
bool verify_isomorphism(const LieAlgebra& from, const LieAlgebra& to, const Mat& phi);
/// Additionally phiᵀ G' phi = G.
bool verify_isometric_isomorphism(const MetricLieAlgebra& from, const MetricLieAlgebra& to, const Mat& phi);

struct CoadjointReport {
  Mat t;  ///< T(x)(y) = <x, y>, i.e. the Gram matrix
  bool verified = false;
};

/// Checks T ad_u T^{-1} = -(ad_u)ᵀ for all basis u. Throws NotAdInvariant.
CoadjointReport coadjoint_intertwiner(const MetricLieAlgebra& m);

/// The algebra and metric carried over by an invertible S, so that S is an
/// isometric isomorphism from m onto the result. Throws Singular.
MetricLieAlgebra transport(const MetricLieAlgebra& m, const Mat& s);
LieAlgebra transport(const LieAlgebra& lie, const Mat& s);

/// Structure constants and metric of a subalgebra in the given basis.
/// Throws Inconsistent if the span is not closed, DegenerateMetric if the
/// restricted metric is degenerate.
MetricLieAlgebra restrict_to(const MetricLieAlgebra& m, const SubspaceBasis& basis);

}  // namespace adlie
