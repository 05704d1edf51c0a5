#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "adlie/catalog.hpp"
#include "adlie/construct.hpp"
#include "adlie/error.hpp"
#include "adlie/jmaps.hpp"
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

/// Modified cotangent model as a plain algebra with the identity inner product.
LieAlgebra rebuilt(const RhoMap& rho) { return modified_cotangent(rho).algebra; }

/// Defining identity and skewness on every triple.
void expect_valid_jdata(const JData& j) {
  ASSERT_EQ(j.j_maps.size(), j.commutator.dim());
  for (std::size_t a = 0; a < j.commutator.dim(); ++a) {
    const Mat& jz = j.j_maps[a];
    EXPECT_EQ((j.v_gram * jz).transpose(), -(j.v_gram * jz));
    for (std::size_t u = 0; u < j.v_basis.dim(); ++u)
      for (std::size_t v = 0; v < j.v_basis.dim(); ++v) {
        const Scalar lhs = form(j.v_gram, jz * unit_vec(j.v_basis.dim(), u), unit_vec(j.v_basis.dim(), v));
        const Scalar rhs = j.inner.form(j.commutator[a], j.algebra.bracket(j.v_basis[u], j.v_basis[v]));
        EXPECT_EQ(lhs, rhs);
      }
  }
}

/// Six-dimensional 2-step algebra v1..v4, z1, z2 with [v1,v2] = z1, [v3,v4] = z2.
LieAlgebra split_pairs() {
  LieAlgebra l(6);
  l.add_bracket_term(0, 1, 4, Scalar(1));
  l.add_bracket_term(2, 3, 5, Scalar(1));
  return l;
}

}  // namespace

TEST(ComputeJ, HeisenbergRotation) {
  const JData j = compute_J(heisenberg(1), BilinearSpace::identity(3));
  ASSERT_EQ(j.j_maps.size(), 1u);
  EXPECT_EQ(j.v_basis.dim(), 2u);
  EXPECT_EQ(j.j_maps[0], (Mat{{0, -1}, {1, 0}}));
  expect_valid_jdata(j);
}

TEST(ComputeJ, AbelianHasNoMaps) {
  const JData j = compute_J(abelian(4), BilinearSpace::identity(4));
  EXPECT_TRUE(j.j_maps.empty());
  EXPECT_EQ(j.v_basis.dim(), 0u);
}

TEST(ComputeJ, RecoversRhoOnModifiedCotangent) {
  for (const RhoMap& rho : {primitive(3, 1), primitive(5), std::get<RhoMap>(generate(8))}) {
    const std::size_t n = rho.dim();
    const JData j = compute_J(rebuilt(rho), BilinearSpace::identity(2 * n));
    expect_valid_jdata(j);
    ASSERT_EQ(j.v_basis.dim(), n);
    for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(j.v_basis[i], unit_vec(2 * n, n + i));
    for (std::size_t w = 0; w < n; ++w) EXPECT_EQ(j.j_of(unit_vec(2 * n, w)), rho.space().gram() * rho.mats()[w]);
  }
}

TEST(ComputeJ, RandomInnerProducts) {
  std::mt19937 rng(41);
  for (const LieAlgebra& l : {heisenberg(2), quaternionic_h_type(), four_cycle_algebra(), rebuilt(primitive(5))}) {
    for (int t = 0; t < 3; ++t) expect_valid_jdata(compute_J(l, BilinearSpace(adlie::testing::random_positive_definite(rng, l.dim()))));
  }
}

TEST(ComputeJ, Errors) {
  expect_error(Errc::NotTwoStep, [] { compute_J(so3(), BilinearSpace::identity(3)); });
  expect_error(Errc::NotPositiveDefinite, [] { compute_J(heisenberg(1), BilinearSpace(Mat{{1, 0, 0}, {0, -1, 0}, {0, 0, 1}})); });
}

TEST(DecideAdmits, Examples) {
  const AdmitsDecision h = decide_admits_ad_invariant(heisenberg(1), BilinearSpace::identity(3));
  EXPECT_FALSE(h.admits);
  EXPECT_EQ(h.failed, "i");
  const AdmitsDecision cycle = decide_admits_ad_invariant(four_cycle_algebra(), BilinearSpace::identity(8));
  EXPECT_FALSE(cycle.admits);
  EXPECT_FALSE(family_contains_invertible(invariant_symmetric_forms(four_cycle_algebra())).invertible);
  for (const RhoMap& rho : {primitive(3, 1), primitive(5), std::get<RhoMap>(generate(9))}) {
    const LieAlgebra l = rebuilt(rho);
    const AdmitsDecision d = decide_admits_ad_invariant(l, BilinearSpace::identity(l.dim()));
    ASSERT_TRUE(d.admits);
    ASSERT_TRUE(d.metric);
    EXPECT_TRUE(is_ad_invariant(*d.metric));
    EXPECT_TRUE(check_perp_duality(*d.metric).ok());
  }
}

TEST(DecideAdmits, IndependentOfInnerProduct) {
  std::mt19937 rng(43);
  std::vector<LieAlgebra> algebras{heisenberg(1), heisenberg(2), quaternionic_h_type(), four_cycle_algebra(), split_pairs(),
                                   rebuilt(primitive(3, 1)), rebuilt(primitive(5))};
  algebras.push_back(direct_sum(rebuilt(primitive(3, 1)), abelian(1)));
  for (const LieAlgebra& l : algebras) {
    const AdmitsDecision base = decide_admits_ad_invariant(l, BilinearSpace::identity(l.dim()));
    for (int t = 0; t < 5; ++t) {
      const AdmitsDecision d = decide_admits_ad_invariant(l, BilinearSpace(adlie::testing::random_positive_definite(rng, l.dim())));
      EXPECT_EQ(d.admits, base.admits);
      EXPECT_EQ(d.failed, base.failed);
      if (d.admits) {
        ASSERT_TRUE(d.metric);
        EXPECT_TRUE(is_ad_invariant(*d.metric));
        EXPECT_TRUE(check_perp_duality(*d.metric).ok());
      }
    }
  }
}

TEST(DecideAdmits, CentralFactorIsAccepted) {
  const LieAlgebra l = direct_sum(rebuilt(primitive(3, 1)), abelian(2));
  const AdmitsDecision d = decide_admits_ad_invariant(l, BilinearSpace::identity(8));
  ASSERT_TRUE(d.admits);
  EXPECT_TRUE(is_ad_invariant(*d.metric));
  EXPECT_EQ(series(d.metric->algebra).corank, 2u);
}

TEST(DecideAdmits, RejectsNonTwoStep) {
  expect_error(Errc::NotTwoStep, [] { decide_admits_ad_invariant(so3(), BilinearSpace::identity(3)); });
}

TEST(HType, Examples) {
  EXPECT_TRUE(is_H_type(compute_J(heisenberg(1), BilinearSpace::identity(3))));
  EXPECT_TRUE(is_H_type(compute_J(direct_sum(heisenberg(1), abelian(1)), BilinearSpace::identity(4))));
  EXPECT_FALSE(is_H_type(compute_J(rebuilt(primitive(3, 1)), BilinearSpace::identity(6))));
  EXPECT_FALSE(is_H_type(compute_J(split_pairs(), BilinearSpace::identity(6))));
}

TEST(HType, FixturesNeverAdmit) {
  for (const LieAlgebra& l : h_type_fixtures()) {
    const BilinearSpace inner = BilinearSpace::identity(l.dim());
    EXPECT_TRUE(is_H_type(compute_J(l, inner)));
    EXPECT_FALSE(decide_admits_ad_invariant(l, inner).admits);
    EXPECT_FALSE(singular_witness(compute_J(l, inner)));
  }
}

TEST(SingularWitness, Examples) {
  auto check = [](const JData& j, const std::pair<Vec, Vec>& w) {
    EXPECT_FALSE(is_zero(w.first));
    EXPECT_FALSE(is_zero(w.second));
    EXPECT_TRUE(j.commutator.contains(w.first));
    EXPECT_TRUE(j.v_basis.contains(w.second));
    for (const Vec& v : j.v_basis.vectors()) EXPECT_EQ(j.inner.form(w.first, j.algebra.bracket(w.second, v)), 0);
  };
  for (const RhoMap& rho : {primitive(3, 1), primitive(5), std::get<RhoMap>(generate(7))}) {
    const JData j = compute_J(rebuilt(rho), BilinearSpace::identity(2 * rho.dim()));
    const auto w = singular_witness(j);
    ASSERT_TRUE(w);
    check(j, *w);
  }
  const JData pairs = compute_J(split_pairs(), BilinearSpace::identity(6));
  const auto w = singular_witness(pairs);
  ASSERT_TRUE(w);
  check(pairs, *w);
  EXPECT_FALSE(singular_witness(compute_J(heisenberg(1), BilinearSpace::identity(3))));
}

TEST(EvLemma, ModifiedCotangentData) {
  const RhoMap rho = primitive(3, 1);
  const JData j = compute_J(rebuilt(rho), BilinearSpace::identity(6));
  std::vector<Vec> zs, vs;
  for (std::size_t i = 0; i < 3; ++i) {
    zs.push_back(unit_vec(6, i));
    vs.push_back(unit_vec(6, 3 + i));
  }
  const EvLemmaResult r = check_ev_lemma(j, zs, vs);
  EXPECT_TRUE(r.precondition);
  EXPECT_TRUE(r.holds);
  ASSERT_TRUE(r.metric);
  EXPECT_TRUE(is_ad_invariant(*r.metric));
  EXPECT_TRUE(r.decision_agrees);

  vs[0] = scale(vs[0], Scalar(2));
  const EvLemmaResult bad = check_ev_lemma(j, zs, vs);
  EXPECT_TRUE(bad.precondition);
  EXPECT_FALSE(bad.holds);
  EXPECT_FALSE(bad.metric);
}

TEST(EvLemma, HeisenbergHasNoKernelVectors) {
  const JData j = compute_J(heisenberg(1), BilinearSpace::identity(3));
  for (std::size_t v : {0u, 1u}) {
    const EvLemmaResult r = check_ev_lemma(j, {unit_vec(3, 2)}, {unit_vec(3, v)});
    EXPECT_FALSE(r.precondition);
    EXPECT_FALSE(r.holds);
  }
  expect_error(Errc::SizeMismatch, [&] { check_ev_lemma(j, {unit_vec(3, 2)}, {}); });
}
