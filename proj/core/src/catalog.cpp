#include "adlie/catalog.hpp"

#include <string>

namespace adlie {

LieAlgebra abelian(std::size_t n) { return LieAlgebra(n); }

MetricLieAlgebra abelian_metric(const Mat& gram) {
  return MetricLieAlgebra(LieAlgebra(gram.rows()), BilinearSpace(gram));
}

LieAlgebra heisenberg(std::size_t k) {
  LieAlgebra h(2 * k + 1);
  std::vector<std::string> labels;
  if (k == 1) {
    labels = {"x", "y", "z"};
  } else {
    for (std::size_t i = 0; i < k; ++i) labels.push_back("x" + std::to_string(i + 1));
    for (std::size_t i = 0; i < k; ++i) labels.push_back("y" + std::to_string(i + 1));
    labels.push_back("z");
  }
  for (std::size_t i = 0; i < k; ++i) h.add_bracket_term(i, k + i, 2 * k, Scalar(1));
  h.set_labels(std::move(labels));
  return h;
}

LieAlgebra so3() {
  LieAlgebra g(3);
  g.add_bracket_term(0, 1, 2, Scalar(1));
  g.add_bracket_term(1, 2, 0, Scalar(1));
  g.add_bracket_term(2, 0, 1, Scalar(1));
  g.set_labels({"e1", "e2", "e3"});
  return g;
}

MetricLieAlgebra so3_metric() { return MetricLieAlgebra(so3(), BilinearSpace(Mat::identity(3) * Scalar(2))); }

LieAlgebra four_cycle_algebra() {
  LieAlgebra n(8);
  const std::size_t z = 0, v = 4;
  n.add_bracket_term(v + 0, v + 1, z + 2, Scalar(1));
  n.add_bracket_term(v + 1, v + 2, z + 3, Scalar(1));
  n.add_bracket_term(v + 2, v + 3, z + 0, Scalar(1));
  n.add_bracket_term(v + 0, v + 3, z + 1, Scalar(1));
  n.set_labels({"z1", "z2", "z3", "z4", "v1", "v2", "v3", "v4"});
  return n;
}

LieAlgebra quaternionic_h_type() {
  // Left multiplication by i, j, k on the basis (1, i, j, k).
  const Mat left[3] = {
      Mat{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}},
      Mat{{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}},
      Mat{{0, 0, 0, -1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}},
  };
  LieAlgebra n(7);
  // (J_a e_i, e_j) = (z_a, [e_i, e_j]) with an orthonormal inner product.
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        if (sgn(left[a](j, i)) != 0) n.add_bracket_term(i, j, 4 + a, left[a](j, i));
      }
    }
  }
  n.set_labels({"v1", "v2", "v3", "v4", "z1", "z2", "z3"});
  return n;
}

std::vector<LieAlgebra> h_type_fixtures() { return {heisenberg(1), heisenberg(2), quaternionic_h_type()}; }

}  // namespace adlie
