#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <variant>

#include "adlie/error.hpp"
#include "adlie/linalg.hpp"
#include "adlie/rho.hpp"
#include "support.hpp"

using namespace adlie;
using adlie::testing::random_scalar;

namespace {

void expect_error(Errc code, const std::function<void()>& fn) {
  try {
    fn();
    ADD_FAILURE() << "no exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

/// The three r-blocks of the n = 0 (mod 3) block scheme, written out literally.
const Mat kR1{{0, 0, 0}, {0, 0, -1}, {0, 1, 0}};
const Mat kR2{{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}};
const Mat kR3{{0, -1, 0}, {1, 0, 0}, {0, 0, 0}};

/// The five-dimensional tail as usually written, with +1 at (3,4) in the last matrix.
RhoMap unrepaired_tail() {
  std::vector<Mat> mats(5, Mat(5, 5));
  mats[0].set_block(0, 0, kR1);
  mats[1].set_block(0, 0, kR2);
  mats[2] = Mat{{0, -1, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, -1}, {0, 0, 0, 1, 0}};
  mats[3] = Mat{{0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 1}, {0, 0, 0, 0, 0}, {0, 0, -1, 0, 0}};
  mats[4] = Mat{{0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, -1, 0, 0}, {0, 0, 0, 0, 0}};
  return RhoMap(BilinearSpace::identity(5), mats);
}

AltTrilinearForm random_form(std::mt19937& rng, std::size_t n) {
  AltTrilinearForm w(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) w.set(i, j, k, random_scalar(rng));
  return w;
}

}  // namespace

TEST(ValidateRho, ThreeDimensionalFamily) {
  const RhoMap rho = primitive(3, 1);
  EXPECT_EQ(rho.mats()[0], (Mat{{0, 0, 0}, {0, 0, 1}, {0, -1, 0}}));
  const RhoReport r = validate_rho(rho);
  EXPECT_TRUE(r.skew);
  EXPECT_TRUE(r.ss);
  EXPECT_TRUE(r.injective);
  const RhoReport zero = validate_rho(RhoMap(BilinearSpace::identity(3), std::vector<Mat>(3, Mat(3, 3))));
  EXPECT_TRUE(zero.skew);
  EXPECT_TRUE(zero.ss);
  EXPECT_FALSE(zero.injective);
}

TEST(ValidateRho, UnrepairedTailIsKnownBad) {
  const RhoReport r = validate_rho(unrepaired_tail());
  EXPECT_TRUE(r.skew);
  EXPECT_FALSE(r.ss);
  using P = std::pair<std::size_t, std::size_t>;
  EXPECT_EQ(r.ss_violations, (std::vector<P>{{2, 4}, {3, 4}}));
  EXPECT_TRUE(validate_rho(primitive(5)).ok());
  EXPECT_EQ(primitive(5).mats()[4], unrepaired_tail().mats()[4] * Scalar(-1));
}

TEST(ValidateRho, SkewViolation) {
  std::vector<Mat> mats = primitive(3, 1).mats();
  mats[1](0, 0) = 1;
  const RhoReport r = validate_rho(RhoMap(BilinearSpace::identity(3), mats));
  EXPECT_FALSE(r.skew);
  EXPECT_EQ(r.skew_violations, (std::vector<std::size_t>{1}));
}

TEST(TrilinearForm, ThreeDimensionalFamily) {
  const AltTrilinearForm w = to_form(primitive(3, 1));
  EXPECT_EQ(w.get(0, 1, 2), -1);
  EXPECT_EQ(w.get(2, 0, 1), -1);
  EXPECT_EQ(w.get(1, 0, 2), 1);
}

TEST(TrilinearForm, RoundTripAndAntisymmetry) {
  for (std::size_t n = 3; n <= 14; ++n) {
    if (n == 4) continue;
    const RhoMap rho = std::get<RhoMap>(generate(n));
    const AltTrilinearForm w = to_form(rho);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          EXPECT_EQ(w.get(i, j, k), -w.get(j, i, k));
          EXPECT_EQ(w.get(i, j, k), -w.get(i, k, j));
        }
    EXPECT_EQ(from_form(w), rho);
  }
}

TEST(TrilinearForm, ZeroFormGivesZeroRho) {
  const RhoMap rho = from_form(AltTrilinearForm(4));
  for (const Mat& m : rho.mats()) EXPECT_TRUE(m.is_zero());
  EXPECT_FALSE(validate_rho(rho).injective);
}

TEST(TrilinearForm, DirectSumHasDisjointSupport) {
  const AltTrilinearForm w = to_form(direct_sum_rho(primitive(3, 1), primitive(3, 2)));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      for (std::size_t k = 0; k < 6; ++k) {
        const bool first = i < 3 && j < 3 && k < 3;
        const bool second = i >= 3 && j >= 3 && k >= 3;
        if (!first && !second) EXPECT_EQ(w.get(i, j, k), 0);
      }
  EXPECT_EQ(w.get(0, 1, 2), -1);
  EXPECT_EQ(w.get(3, 4, 5), -2);
}

TEST(TrilinearForm, RejectsNonAlternatingTensor) {
  std::vector<Scalar> c(27);
  c[0 * 9 + 1 * 3 + 2] = 1;
  expect_error(Errc::NotAlternating, [&] { AltTrilinearForm::from_tensor(3, c); });
  AltTrilinearForm w(3);
  expect_error(Errc::NotAlternating, [&] { w.set(0, 0, 1, Scalar(1)); });
}

TEST(TrilinearForm, NonOrthonormalGram) {
  const BilinearSpace space(Mat::diagonal({1, 2, 3}));
  AltTrilinearForm w(3);
  w.set(0, 1, 2, Scalar(1));
  const RhoMap rho = from_form(w, space);
  EXPECT_TRUE(validate_rho(rho).ok());
  EXPECT_EQ(to_form(rho), w);
}

TEST(Radical, Examples) {
  AltTrilinearForm w3(3);
  w3.set(0, 1, 2, Scalar(1));
  EXPECT_EQ(radical(w3).dim(), 0u);
  AltTrilinearForm w5(5);
  w5.set(0, 1, 2, Scalar(1));
  EXPECT_TRUE(same_subspace(radical(w5), SubspaceBasis(5, {unit_vec(5, 3), unit_vec(5, 4)})));
}

TEST(Radical, DimensionFourWitness) {
  std::mt19937 rng(17);
  for (int t = 0; t < 100; ++t) {
    const AltTrilinearForm w = random_form(rng, 4);
    const Vec x = radical_witness_dim4(w);
    EXPECT_FALSE(is_zero(x));
    EXPECT_TRUE(from_form(w).at(x).is_zero());
    EXPECT_TRUE(radical(w).contains(x));
  }
  EXPECT_EQ(radical_witness_dim4(AltTrilinearForm(4)), unit_vec(4, 0));
  expect_error(Errc::DimensionMismatch, [] { radical_witness_dim4(AltTrilinearForm(5)); });
}

TEST(Primitive, AllValid) {
  for (const Scalar& a : {Scalar(1), Scalar(-3), Scalar(2, 7)}) EXPECT_TRUE(validate_rho(primitive(3, a)).ok());
  EXPECT_TRUE(validate_rho(primitive(5)).ok());
  EXPECT_TRUE(validate_rho(primitive(7)).ok());
  expect_error(Errc::BadParameter, [] { primitive(3, 0); });
  expect_error(Errc::BadParameter, [] { primitive(4); });
}

TEST(Primitive, SevenIsACrossProduct) {
  // rho(u)v behaves like a cross product: |u x v|^2 = |u|^2 |v|^2 - (u.v)^2 on basis pairs.
  const RhoMap rho = primitive(7);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) {
      const Vec uv = rho.at(unit_vec(7, i)) * unit_vec(7, j);
      EXPECT_EQ(dot(uv, uv), Scalar(i == j ? 0 : 1));
    }
}

TEST(DirectSumRho, Examples) {
  EXPECT_TRUE(validate_rho(direct_sum_rho(primitive(3, 1), primitive(3, 1))).ok());
  const RhoMap r35 = direct_sum_rho(primitive(3, 1), primitive(5));
  EXPECT_EQ(r35.dim(), 8u);
  EXPECT_TRUE(validate_rho(r35).ok());
  const RhoMap empty(BilinearSpace(Mat(0, 0)), {});
  EXPECT_EQ(direct_sum_rho(primitive(5), empty), primitive(5));
}

TEST(Generate, ValidForAllAdmissibleDimensions) {
  for (std::size_t n = 3; n <= 24; ++n) {
    const auto g = generate(n);
    if (n == 4) {
      ASSERT_TRUE(std::holds_alternative<NonexistenceCertificate>(g));
      continue;
    }
    ASSERT_TRUE(std::holds_alternative<RhoMap>(g)) << n;
    EXPECT_EQ(std::get<RhoMap>(g).dim(), n);
    EXPECT_TRUE(validate_rho(std::get<RhoMap>(g)).ok()) << n;
  }
}

TEST(Generate, Certificates) {
  for (std::size_t n : {1u, 2u, 4u}) {
    const auto g = generate(n);
    ASSERT_TRUE(std::holds_alternative<NonexistenceCertificate>(g));
    const auto& c = std::get<NonexistenceCertificate>(g);
    EXPECT_EQ(c.n, n);
    EXPECT_FALSE(c.witness_rule.empty());
  }
  EXPECT_EQ(std::get<NonexistenceCertificate>(generate(4)).checked_samples, 81u);
  expect_error(Errc::BadParameter, [] { generate(0); });
}

TEST(Generate, MultiplesOfThreeFollowTheBlockScheme) {
  for (std::size_t n : {3u, 6u, 9u, 12u}) {
    const RhoMap rho = std::get<RhoMap>(generate(n));
    for (std::size_t i = 0; i < n; ++i) {
      Mat expected(n, n);
      const Mat* blocks[3] = {&kR1, &kR2, &kR3};
      expected.set_block(3 * (i / 3), 3 * (i / 3), *blocks[i % 3]);
      EXPECT_EQ(rho.mats()[i], expected);
    }
  }
  EXPECT_EQ(std::get<RhoMap>(generate(6)), direct_sum_rho(primitive(3, -1), primitive(3, -1)));
}

TEST(Generate, AdmissibleSetIsALinearSpace) {
  // skew + (ss) are linear in (A^1..A^n); the solution space matches the alternating 3-forms.
  for (std::size_t n = 3; n <= 5; ++n) {
    const std::size_t unknowns = n * n * n;
    std::vector<Vec> rows;
    auto var = [n](std::size_t i, std::size_t r, std::size_t c) { return (i * n + r) * n + c; };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r; c < n; ++c) {
          Vec row(unknowns);
          row[var(i, r, c)] += 1;
          row[var(i, c, r)] += 1;
          rows.push_back(row);
        }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        for (std::size_t r = 0; r < n; ++r) {
          Vec row(unknowns);
          row[var(i, r, j)] += 1;
          row[var(j, r, i)] += 1;
          rows.push_back(row);
        }
    const std::vector<Vec> sol = kernel(Mat::from_rows(rows, unknowns));
    EXPECT_EQ(sol.size(), n * (n - 1) * (n - 2) / 6);
    std::vector<Vec> forms;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          AltTrilinearForm w(n);
          w.set(i, j, k, Scalar(1));
          Vec flat;
          const RhoMap rho = from_form(w);
          for (const Mat& m : rho.mats())
            for (const auto& x : flatten(m)) flat.push_back(x);
          forms.push_back(flat);
        }
    EXPECT_TRUE(same_subspace(SubspaceBasis::span(unknowns, sol), SubspaceBasis::span(unknowns, forms)));
  }
}

TEST(T2Condition, Examples) {
  const RhoMap r1 = primitive(3, 1);
  EXPECT_TRUE(check_t2_condition(r1, r1, Mat::identity(3), Mat::identity(3)));
  for (const Scalar& a : {Scalar(2), Scalar(-1, 3), Scalar(5)}) {
    EXPECT_TRUE(check_t2_condition(primitive(3, a), r1, Mat::identity(3) * Scalar(1 / a), Mat::identity(3)));
  }
  EXPECT_FALSE(check_t2_condition(r1, r1, Mat::identity(3), Mat::identity(3) * Scalar(2)));
  expect_error(Errc::Singular, [&] { check_t2_condition(r1, r1, Mat(3, 3), Mat::identity(3)); });
}

TEST(SearchIso, Examples) {
  const auto same = search_iso_small(primitive(3, 1), primitive(3, 1));
  ASSERT_TRUE(same);
  EXPECT_EQ(same->first, Mat::identity(3));
  EXPECT_EQ(same->second, Mat::identity(3));
  const auto two_five = search_iso_small(primitive(3, 2), primitive(3, 5));
  ASSERT_TRUE(two_five);
  EXPECT_TRUE(check_t2_condition(primitive(3, 2), primitive(3, 5), two_five->first, two_five->second));
  const RhoMap a = direct_sum_rho(primitive(3, 1), primitive(3, 2));
  const RhoMap b = direct_sum_rho(primitive(3, 2), primitive(3, 1));
  const auto swap = search_iso_small(a, b);
  ASSERT_TRUE(swap);
  EXPECT_TRUE(check_t2_condition(a, b, swap->first, swap->second));
  // Relabel the coordinates of V by a permutation P: rho'(v) = Pᵀ rho(P v) P.
  const std::vector<std::size_t> perm{4, 0, 5, 2, 1, 3};
  Mat p(6, 6);
  for (std::size_t i = 0; i < 6; ++i) p(perm[i], i) = 1;
  std::vector<Mat> mats;
  for (std::size_t i = 0; i < 6; ++i) mats.push_back(p.transpose() * a.at(p * unit_vec(6, i)) * p);
  const RhoMap relabeled(BilinearSpace::identity(6), mats);
  ASSERT_TRUE(validate_rho(relabeled).ok());
  const auto witness = search_iso_small(a, relabeled);
  ASSERT_TRUE(witness);
  EXPECT_TRUE(check_t2_condition(a, relabeled, witness->first, witness->second));
}

TEST(SearchIso, TransformedFamilyStaysAdmissible) {
  std::mt19937 rng(23);
  for (int t = 0; t < 20; ++t) {
    const RhoMap ra = primitive(3, adlie::testing::random_nonzero(rng));
    const RhoMap rb = primitive(3, adlie::testing::random_nonzero(rng));
    const auto found = search_iso_small(ra, rb);
    ASSERT_TRUE(found);
    const auto& [am, bm] = *found;
    // rho''(v) = B^t rho'(v) B with the gram-transpose, which equals rho(Av).
    const Mat gi = inverse(ra.space().gram());
    std::vector<Mat> mats;
    for (std::size_t i = 0; i < 3; ++i)
      mats.push_back(gi * bm.transpose() * rb.space().gram() * rb.mats()[i] * bm);
    const RhoMap transformed(ra.space(), mats);
    const RhoReport r = validate_rho(transformed);
    EXPECT_TRUE(r.skew);
    EXPECT_TRUE(r.ss);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(ra.at(am * unit_vec(3, i)), transformed.mats()[i]);
  }
}
