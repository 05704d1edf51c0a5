#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "adlie/catalog.hpp"
#include "adlie/construct.hpp"
#include "adlie/error.hpp"
#include "adlie/geometry.hpp"
#include "adlie/liealg.hpp"
#include "adlie/linalg.hpp"
#include "adlie/rho.hpp"
#include "support.hpp"

using namespace adlie;

namespace {

void expect_error(Errc code, const std::function<void()>& fn) {
  try {
    fn();
    ADD_FAILURE() << "no exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

Mat cayley_sample(std::mt19937& rng, const Mat& g) {
  for (;;) {
    try {
      return cayley(g, adlie::testing::random_antisymmetric(rng, g.rows()));
    } catch (const Error& e) {
      if (e.code() != Errc::Singular) throw;
    }
  }
}

}  // namespace

TEST(Koszul, AbelianIsZero) {
  const ConnectionCoeffs c = koszul(abelian_metric(Mat{{1, 0}, {0, -3}}));
  for (const Scalar& g : c.gamma) EXPECT_EQ(g, 0);
}

TEST(Koszul, HalfBracketOnAdInvariantMetrics) {
  for (const MetricLieAlgebra& m : {modified_cotangent(primitive(3, 1)), modified_cotangent(primitive(5)), so3_metric(),
                                    double_extension(abelian_metric(Mat::identity(2)), Mat{{0, -1}, {1, 0}})}) {
    const ConnectionCoeffs c = koszul(m);
    for (std::size_t i = 0; i < m.dim(); ++i)
      for (std::size_t j = 0; j < m.dim(); ++j)
        for (std::size_t k = 0; k < m.dim(); ++k) EXPECT_EQ(c.at(i, j, k), m.algebra.constant(i, j, k) / 2);
  }
}

TEST(Koszul, HeisenbergByHand) {
  // Gram I on x, y, z with [x,y] = z:
  // ∇_x y = z/2, ∇_y x = -z/2, ∇_x z = ∇_z x = -y/2, ∇_y z = ∇_z y = x/2.
  const ConnectionCoeffs c = koszul(heisenberg(1), Mat::identity(3));
  std::vector<Scalar> expected(27);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Scalar& v) { expected[(i * 3 + j) * 3 + k] = v; };
  set(0, 1, 2, Scalar(1, 2));
  set(1, 0, 2, Scalar(-1, 2));
  set(0, 2, 1, Scalar(-1, 2));
  set(2, 0, 1, Scalar(-1, 2));
  set(1, 2, 0, Scalar(1, 2));
  set(2, 1, 0, Scalar(1, 2));
  EXPECT_EQ(c.gamma, expected);
  EXPECT_FALSE(is_zero(add(c.nabla(0) * unit_vec(3, 2), c.nabla(2) * unit_vec(3, 0))));
  EXPECT_TRUE(torsion_free(heisenberg(1), c));
  EXPECT_TRUE(metric_compatible(Mat::identity(3), c));
}

TEST(Koszul, TorsionFreeAndCompatibleForRandomMetrics) {
  std::mt19937 rng(47);
  for (const LieAlgebra& l : {heisenberg(2), so3(), quaternionic_h_type(), four_cycle_algebra()}) {
    for (int t = 0; t < 3; ++t) {
      const Mat g = adlie::testing::random_positive_definite(rng, l.dim());
      const ConnectionCoeffs c = koszul(l, g);
      EXPECT_TRUE(torsion_free(l, c));
      EXPECT_TRUE(metric_compatible(g, c));
    }
  }
  expect_error(Errc::DegenerateMetric, [] { koszul(heisenberg(1), Mat(3, 3)); });
}

TEST(Curvature, FlatModels) {
  for (std::size_t n : {3u, 5u, 6u, 8u}) {
    const MetricLieAlgebra m = modified_cotangent(std::get<RhoMap>(generate(n)));
    const CurvatureResult r = curvature(m);
    EXPECT_TRUE(r.flat);
    ASSERT_TRUE(r.matches_ad_formula);
    EXPECT_TRUE(*r.matches_ad_formula);
    EXPECT_TRUE(holonomy_span(m).empty());
    const RicciKilling rk = ricci_and_killing(m);
    EXPECT_TRUE(rk.ricci.is_zero());
    EXPECT_TRUE(rk.killing.is_zero());
  }
  EXPECT_TRUE(curvature(abelian_metric(Mat::identity(3))).flat);
  EXPECT_TRUE(holonomy_span(abelian_metric(Mat::identity(3))).empty());
  EXPECT_TRUE(ricci_and_killing(abelian_metric(Mat::identity(3))).ricci.is_zero());
}

TEST(Curvature, So3) {
  const MetricLieAlgebra m = so3_metric();
  const CurvatureResult r = curvature(m);
  EXPECT_FALSE(r.flat);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      EXPECT_EQ(r.at(i, j), Scalar(-1, 4) * m.algebra.ad(m.algebra.bracket(i, j)));
  const RicciKilling rk = ricci_and_killing(m);
  EXPECT_EQ(rk.killing, Scalar(-2) * Mat::identity(3));
  EXPECT_EQ(rk.ricci, Scalar(1, 2) * Mat::identity(3));
  const std::vector<Mat> hol = holonomy_span(m);
  EXPECT_EQ(hol.size(), 3u);
  std::vector<Vec> flat_hol, flat_ad;
  for (const Mat& h : hol) flat_hol.push_back(flatten(h));
  for (std::size_t i = 0; i < 3; ++i) flat_ad.push_back(flatten(m.algebra.ad_basis(i)));
  EXPECT_TRUE(same_subspace(SubspaceBasis::span(9, flat_hol), SubspaceBasis::span(9, flat_ad)));
}

TEST(Curvature, GenericMetricIsComputedWithoutFormula) {
  const CurvatureResult r = curvature(MetricLieAlgebra(heisenberg(1), BilinearSpace::identity(3)));
  EXPECT_FALSE(r.flat);
  EXPECT_FALSE(r.matches_ad_formula);
  expect_error(Errc::NotAdInvariant, [] { ricci_and_killing(MetricLieAlgebra(heisenberg(1), BilinearSpace::identity(3))); });
  expect_error(Errc::NotAdInvariant, [] { holonomy_span(MetricLieAlgebra(heisenberg(1), BilinearSpace::identity(3))); });
}

TEST(Muller, Examples) {
  const MetricLieAlgebra m = modified_cotangent(primitive(3, 1));
  EXPECT_TRUE(muller_check(m, Mat::identity(6)).ok());
  const MullerReport twice = muller_check(m, Scalar(2) * Mat::identity(6));
  EXPECT_FALSE(twice.orthogonal);
  EXPECT_FALSE(twice.ok());
  // Cyclic permutation of the basis: a rotation and an automorphism of so(3).
  const Mat cyc{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
  EXPECT_TRUE(verify_isomorphism(so3(), so3(), cyc));
  EXPECT_TRUE(muller_check(so3_metric(), cyc).ok());
  const MullerReport dbl = muller_check(so3_metric(), Scalar(2) * Mat::identity(3));
  EXPECT_FALSE(dbl.orthogonal);
  EXPECT_FALSE(dbl.double_bracket);
  expect_error(Errc::DimensionMismatch, [&] { muller_check(m, Mat::identity(5)); });
}

TEST(Muller, RotationsOfSo3) {
  std::mt19937 rng(53);
  const MetricLieAlgebra m = so3_metric();
  for (int t = 0; t < 20; ++t) {
    const Mat a = cayley_sample(rng, m.gram());
    EXPECT_EQ(a.transpose() * m.gram() * a, m.gram());
    EXPECT_EQ(determinant(a), 1);
    EXPECT_TRUE(verify_isomorphism(so3(), so3(), a));
    EXPECT_TRUE(muller_check(m, a).ok());
  }
}

TEST(Muller, TwoStepOrthogonalityEquivalence) {
  std::mt19937 rng(59);
  for (const MetricLieAlgebra& m : {modified_cotangent(primitive(3, 1)), modified_cotangent(primitive(5))}) {
    for (int t = 0; t < 50; ++t) {
      const Mat a = cayley_sample(rng, m.gram());
      EXPECT_TRUE(muller_check(m, a).ok());
    }
    for (int t = 0; t < 50; ++t) {
      const Mat a = adlie::testing::random_matrix(rng, m.dim(), m.dim());
      EXPECT_EQ(muller_check(m, a).ok(), a.transpose() * m.gram() * a == m.gram());
    }
  }
}

TEST(Cayley, Errors) {
  expect_error(Errc::NotSkew, [] { cayley(Mat::identity(2), Mat::identity(2)); });
  // X = K with K = [[0,1],[-1,0]] on gram diag(1,-1) gives X² = I, so I - X is singular.
  expect_error(Errc::Singular, [] { cayley(Mat{{1, 0}, {0, -1}}, Mat{{0, 1}, {-1, 0}}); });
}

TEST(IsometryDescriptor, Examples) {
  const IsometryDescriptor d6 = isometry_descriptor(modified_cotangent(primitive(3, 1)));
  EXPECT_EQ(d6.kind, IsometryDescriptor::Kind::orthogonal_group);
  EXPECT_EQ(d6.p, 3u);
  EXPECT_EQ(d6.q, 3u);
  const IsometryDescriptor d10 = isometry_descriptor(modified_cotangent(primitive(5)));
  EXPECT_EQ(d10.kind, IsometryDescriptor::Kind::orthogonal_group);
  EXPECT_EQ(d10.p, 5u);
  EXPECT_EQ(d10.q, 5u);
  EXPECT_EQ(isometry_descriptor(so3_metric()).kind, IsometryDescriptor::Kind::generic);
  const MetricLieAlgebra central = add_central_factor(modified_cotangent(primitive(3, 1)), 1, Mat{{1}});
  EXPECT_EQ(isometry_descriptor(central).kind, IsometryDescriptor::Kind::generic);
  expect_error(Errc::NotEligible, [] { isometry_descriptor(MetricLieAlgebra(heisenberg(1), BilinearSpace::identity(3))); });
}

TEST(CrossIsometry, ScaledPrimitive) {
  const MetricLieAlgebra m = modified_cotangent(primitive(3, 1));
  const MetricLieAlgebra m2 = modified_cotangent(primitive(3, 2));
  const Mat a = build_cross_isometry(m, m2);
  EXPECT_TRUE(muller_check(m, m2, a).ok());
  EXPECT_EQ(a.transpose() * m2.gram() * a, m.gram());
  EXPECT_FALSE(verify_isomorphism(m.algebra, m2.algebra, a));
}

TEST(CrossIsometry, SelfIsIdentity) {
  const MetricLieAlgebra m = modified_cotangent(primitive(5));
  EXPECT_EQ(build_cross_isometry(m, m), Mat::identity(10));
}

TEST(CrossIsometry, BlockSumAgainstGenerated) {
  const MetricLieAlgebra m = modified_cotangent(direct_sum_rho(primitive(3, 1), primitive(3, 1)));
  const MetricLieAlgebra m2 = modified_cotangent(std::get<RhoMap>(generate(6)));
  const Mat a = build_cross_isometry(m, m2);
  EXPECT_TRUE(muller_check(m, m2, a).ok());
  expect_error(Errc::DimensionMismatch, [&] { build_cross_isometry(m, modified_cotangent(primitive(5))); });
  expect_error(Errc::NotEligible, [&] { build_cross_isometry(so3_metric(), so3_metric()); });
}
