#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "adlie/bilinear.hpp"
#include "adlie/matrix.hpp"
#include "adlie/subspace.hpp"

namespace adlie {

/// A linear map V -> so(V), stored as A^i = rho(e_i).
class RhoMap {
 public:
  RhoMap() = default;
  /// Throws ShapeMismatch unless there are dim matrices of size dim × dim.
  RhoMap(BilinearSpace space, std::vector<Mat> mats);

  std::size_t dim() const { return space_.dim(); }
  const BilinearSpace& space() const { return space_; }
  const std::vector<Mat>& mats() const { return mats_; }
  /// rho(v) = Σ v_i A^i
  Mat at(const Vec& v) const;

  friend bool operator==(const RhoMap& a, const RhoMap& b) {
    return a.space_ == b.space_ && a.mats_ == b.mats_;
  }

 private:
  BilinearSpace space_;
  std::vector<Mat> mats_;
};

struct RhoReport {
  bool skew = true;
  bool ss = true;
  bool injective = true;
  std::vector<std::size_t> skew_violations;                       ///< i with A^i not G-skew
  std::vector<std::pair<std::size_t, std::size_t>> ss_violations;  ///< i <= j with A^i e_j + A^j e_i != 0

  bool ok() const { return skew && ss && injective; }
};

RhoReport validate_rho(const RhoMap& rho);

/// Totally antisymmetric 3-tensor, stored densely and kept antisymmetric.
class AltTrilinearForm {
 public:
  explicit AltTrilinearForm(std::size_t n = 0);
  /// Checks total antisymmetry of a dense n³ array (index i*n*n + j*n + k).
  /// Throws NotAlternating.
  static AltTrilinearForm from_tensor(std::size_t n, const std::vector<Scalar>& components);

  std::size_t dim() const { return n_; }
  const Scalar& get(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }
  /// Sets w(i,j,k) and all permutations with sign. Throws NotAlternating for
  /// repeated indices with a nonzero value.
  void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& value);
  bool is_zero() const;

  friend bool operator==(const AltTrilinearForm& a, const AltTrilinearForm& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }

 private:
  std::size_t n_;
  std::vector<Scalar> c_;
};

/// w(i,j,k) = <A^i e_j, e_k>_G, contraction in the first slot.
/// Throws InvalidRho if the result is not totally antisymmetric.
AltTrilinearForm to_form(const RhoMap& rho);
/// Inverse of to_form: A^i = G^{-1} X^i with X^i_{kj} = w(i,j,k). Throws NotPositiveDefinite.
RhoMap from_form(const AltTrilinearForm& form, const BilinearSpace& space);
RhoMap from_form(const AltTrilinearForm& form);

/// {w : w(x, ., .) = 0}, the kernel of x -> rho(x).
SubspaceBasis radical(const AltTrilinearForm& form);
/// For n = 4: x = (w234, -w134, w124, -w123), or e1 when w = 0. Throws DimensionMismatch.
Vec radical_witness_dim4(const AltTrilinearForm& form);

/// n = 3: the one-parameter family (a != 0); n = 5: two 3-blocks plus the
/// sign-corrected 5×5 tail; n = 7: the octonionic (Fano plane) cross product.
/// Throws BadParameter.
RhoMap primitive(std::size_t n, const Scalar& a = Scalar(1));

RhoMap direct_sum_rho(const RhoMap& a, const RhoMap& b);

struct NonexistenceCertificate {
  std::size_t n = 0;
  std::string witness_rule;
  /// Grid points on which the witness was checked exactly.
  std::size_t checked_samples = 0;
};

/// A valid RhoMap for n = 3 and n >= 5, a certificate for n in {1, 2, 4}.
/// Throws BadParameter for n = 0.
std::variant<RhoMap, NonexistenceCertificate> generate(std::size_t n);

/// rho(A e_i) = Bᵗ rho'(e_i) B with Bᵗ = G^{-1} Bᵀ G'. Throws Singular, DimensionMismatch.
bool check_t2_condition(const RhoMap& rho, const RhoMap& rho2, const Mat& a, const Mat& b);

/// Tries B in {I, permutations (n <= 7), sign diagonals (n <= 10)} and solves
/// for A. Finds a pair whenever one exists in dimension 3; otherwise an empty
/// result proves nothing.
std::optional<std::pair<Mat, Mat>> search_iso_small(const RhoMap& rho, const RhoMap& rho2);

}  // namespace adlie
