#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adlie/bilinear.hpp"
#include "adlie/family.hpp"
#include "adlie/lie_algebra.hpp"
#include "adlie/subspace.hpp"

namespace adlie {

/// J_z maps of a 2-step nilpotent algebra with an inner product, on V = center^⊥.
struct JData {
  LieAlgebra algebra;
  BilinearSpace inner;
  SubspaceBasis center;
  SubspaceBasis commutator;
  SubspaceBasis v_basis;       ///< ambient vectors spanning V
  Mat v_gram;                  ///< inner product restricted to V
  std::vector<Mat> j_maps;     ///< J_{z_i} for the commutator basis, in V coordinates

  /// J_z for any z (ambient coordinates): (J_z u, v) = (z, [u, v]) on V.
  Mat j_of(const Vec& z) const;
  /// Ambient vector of V coordinates.
  Vec from_v_coords(const Vec& coords) const;
};

/// Throws NotTwoStep, NotPositiveDefinite, DimensionMismatch.
JData compute_J(const LieAlgebra& lie, const BilinearSpace& inner);

struct AdmitsDecision {
  bool admits = false;
  /// "i", "ii" or "iii" when admits is false.
  std::string failed;
  std::optional<MetricLieAlgebra> metric;
  /// S: V -> C^1 with column a the commutator coordinates of S v_a.
  Mat s;
  std::optional<FamilyDecision> family;
};

/// The J-map criterion: (i) dim C^1 = dim V, (ii) z -> J_z injective on C^1,
/// (iii) some invertible S: V -> C^1 has J_{Su} v + J_{Sv} u = 0. On success
/// the metric of the converse construction is returned and re-verified.
/// Throws NotTwoStep, NotPositiveDefinite.
AdmitsDecision decide_admits_ad_invariant(const LieAlgebra& lie, const BilinearSpace& inner);

/// Metric with <z, u> = (z, S u) on C^1 × V, V and C^1 isotropic, and the
/// inner product on the complement of C^1 in the center.
BilinearSpace metric_from_s(const JData& j, const Mat& s);

/// J_z² = -(z, z) I for z in {z_i} ∪ {z_i + z_j}, which by polarization covers all z in C^1.
bool is_H_type(const JData& j);

/// (z, u) in ambient coordinates with z in C^1, u in V, both nonzero, J_z u = 0.
/// Tries basis directions, seeded random lines, then z = S u from the decision.
/// An empty result is not a proof of non-singularity.
std::optional<std::pair<Vec, Vec>> singular_witness(const JData& j, std::uint32_t seed = 7u);

struct EvLemmaResult {
  bool precondition = false;  ///< v_i in Ker J_{z_i} for all i
  bool holds = false;         ///< precondition and J_{z_i} v_j + J_{z_j} v_i = 0 for all pairs
  std::optional<MetricLieAlgebra> metric;  ///< built from S(v_i) = z_i when holds
  bool decision_agrees = false;
};

/// z_basis and v_basis in ambient coordinates. Throws SizeMismatch.
EvLemmaResult check_ev_lemma(const JData& j, const std::vector<Vec>& z_basis, const std::vector<Vec>& v_basis);

}  // namespace adlie
