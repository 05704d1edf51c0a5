#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "adlie/matrix.hpp"
#include "adlie/subspace.hpp"

namespace adlie {

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;  ///< dimension of the radical

  bool degenerate() const { return zero != 0; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Congruence diagonalization of a symmetric matrix. Throws NotSymmetric.
Signature signature(const Mat& gram);

/// A real vector space with a symmetric (possibly degenerate) bilinear form.
class BilinearSpace {
 public:
  BilinearSpace() = default;
  /// Throws NotSymmetric for non-symmetric or non-square input.
  explicit BilinearSpace(Mat gram);

  static BilinearSpace identity(std::size_t n) { return BilinearSpace(Mat::identity(n)); }

  std::size_t dim() const { return gram_.rows(); }
  const Mat& gram() const { return gram_; }
  Scalar form(const Vec& x, const Vec& y) const { return adlie::form(gram_, x, y); }

  Signature signature() const { return adlie::signature(gram_); }
  bool is_nondegenerate() const;
  bool is_positive_definite() const;

  /// Gram matrix of the form restricted to a subspace, in the subspace's basis.
  BilinearSpace restrict_to(const SubspaceBasis& w) const;

  friend bool operator==(const BilinearSpace& a, const BilinearSpace& b) { return a.gram_ == b.gram_; }

 private:
  Mat gram_;
};

SubspaceBasis orthogonal_complement(const BilinearSpace& space, const SubspaceBasis& w);

enum class SubspaceKind { nondegenerate, isotropic, totally_isotropic, degenerate_other };
std::string_view to_string(SubspaceKind kind);

/// Checked in this order: W = W^⊥, W ∩ W^⊥ = 0, W ⊂ W^⊥, otherwise degenerate_other.
SubspaceKind classify_subspace(const BilinearSpace& space, const SubspaceBasis& w);

enum class WittFlavor { isotropic, positive };

/// For U with ⟨U,U⟩ = 0 in a non-degenerate space: vectors w_1..w_k spanning a
/// totally isotropic subspace with ⟨u_i, w_j⟩ = δ_ij. Throws DegenerateGram,
/// NotTotallyIsotropic.
std::vector<Vec> hyperbolic_dual(const BilinearSpace& space, const SubspaceBasis& u);

/// A complement W with V = U ⊕ W; totally isotropic (needs dim V = 2 dim U) or
/// positive definite (needs the rest of the space positive definite).
/// Throws NotTotallyIsotropic, NoSuchComplement, DegenerateGram.
SubspaceBasis witt_complement(const BilinearSpace& space, const SubspaceBasis& u, WittFlavor flavor);

/// Gram [[0, I_n], [I_n, 0]].
BilinearSpace hyperbolic_space(std::size_t n);

}  // namespace adlie
