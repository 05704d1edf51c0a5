#pragma once

#include <cstddef>
#include <vector>

#include "adlie/lie_algebra.hpp"

namespace adlie {

LieAlgebra abelian(std::size_t n);
/// Abelian algebra with the given (non-degenerate) metric.
MetricLieAlgebra abelian_metric(const Mat& gram);

/// Heisenberg algebra of dimension 2k+1: basis x_1..x_k, y_1..y_k, z with [x_i, y_i] = z.
LieAlgebra heisenberg(std::size_t k = 1);

/// Cross-product algebra: [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2.
LieAlgebra so3();
/// so(3) with minus its Killing form, gram 2I.
MetricLieAlgebra so3_metric();

/// Eight-dimensional 2-step algebra z1..z4, v1..v4 with
/// [v1,v2] = z3, [v2,v3] = z4, [v3,v4] = z1, [v1,v4] = z2.
/// Every invariant symmetric form on it is degenerate.
LieAlgebra four_cycle_algebra();

/// Seven-dimensional H-type algebra: v1..v4 (quaternions 1, i, j, k) and
/// z1..z3, with J_{z_a} left multiplication by i, j, k.
LieAlgebra quaternionic_h_type();

/// heisenberg(1), heisenberg(2), quaternionic_h_type().
std::vector<LieAlgebra> h_type_fixtures();

}  // namespace adlie
