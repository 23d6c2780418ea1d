#include <gtest/gtest.h>

#include "qharm/harmonics.hpp"
#include "qharm/linalg.hpp"

using namespace qharm;

namespace {

ScalarQ q(int k) { return ScalarQ::q_power(k); }
const ScalarQ one(1);
NCPoly Z(int n, int i) { return NCPoly::z(n, i); }
NCPoly W(int n, int i) { return NCPoly::w(n, i); }

void expect_same(const NCPoly& a, const NCPoly& b) {
  EXPECT_TRUE((a - b).to_order(Order::ZFirst).is_zero()) << a.to_string() << "  vs  " << b.to_string();
}

// (z_2 w_2 - q^2 z_1 w_1)/(1+q^2) in rank 2
NCPoly rank_two_zonal() { return (one + q(2)).inverse() * (Z(2, 2) * W(2, 2) - q(2) * (Z(2, 1) * W(2, 1))); }

std::size_t kernel_dim(int n, int m, int mp) {
  const BidegreeBasis from(n, m, mp);
  if (m == 0 || mp == 0) return from.size();
  return kernel(operator_matrix(ops::laplace(n), from, BidegreeBasis(n, m - 1, mp - 1))).size();
}

}  // namespace

TEST(AlphaCoeff, Values) {
  EXPECT_EQ(alpha_coeff(3, 2, 1, 0), one);
  EXPECT_EQ(alpha_coeff(2, 1, 1, 1), -(one + q(2)).inverse());
}

TEST(AlphaCoeff, Recurrence) {
  for (int n = 1; n <= 3; ++n)
    for (int m = 0; m <= 4; ++m)
      for (int mp = 0; m + mp <= 4; ++mp)
        for (int k = 1; k <= std::min(m, mp); ++k)
          EXPECT_TRUE((q(n - 1) * q_number(k) * q_number(m + mp + n - k - 1) * alpha_coeff(n, m, mp, k) +
                       alpha_coeff(n, m, mp, k - 1))
                          .is_zero())
              << n << " " << m << " " << mp << " " << k;
}

TEST(AlphaCoeff, RejectsOutOfRangeIndex) {
  EXPECT_THROW(alpha_coeff(2, 1, 1, 2), std::invalid_argument);
  EXPECT_THROW(alpha_coeff(2, 1, 1, -1), std::invalid_argument);
}

TEST(Project, RankTwoRadialMonomial) {
  const NCPoly h = project(Z(2, 2) * W(2, 2), 1, 1);
  expect_same(h, rank_two_zonal());
  EXPECT_TRUE(ops::laplace(2).apply(h).is_zero());
}

TEST(Project, HarmonicInputUnchanged) { expect_same(project(Z(3, 1), 1, 0), Z(3, 1)); }

TEST(Project, KillsRadius) {
  for (int n = 1; n <= 3; ++n) EXPECT_TRUE(project(q_radius(n), 1, 1).is_zero()) << n;
}

TEST(Project, RejectsWrongBidegree) {
  EXPECT_THROW(project(Z(2, 1) * W(2, 1), 1, 0), std::invalid_argument);
  EXPECT_THROW(project(Z(2, 1) + Z(2, 1) * W(2, 1)), std::invalid_argument);
}

TEST(Project, Laws) {
  for (int n : {2, 3})
    for (int m = 0; m <= 2; ++m)
      for (int mp = 0; mp <= 2; ++mp)
        for (const auto& mono : monomial_basis(n, m, mp)) {
          const NCPoly p = NCPoly::monomial(n, mono);
          const NCPoly h = project(p, m, mp);
          EXPECT_TRUE(ops::laplace(n).apply(h).is_zero()) << p.to_string();
          expect_same(project(h, m, mp), h);
          for (int i = 1; i < n; ++i)
            for (const auto& g : {GlGenerator::e(i), GlGenerator::f(i), GlGenerator::k(i)})
              expect_same(project(act_gl(g, p), m, mp), act_gl(g, h));
          if (m >= 1 && mp >= 1) {
            // the radial part of A_{m,m'} is killed
            for (const auto& low : monomial_basis(n, m - 1, mp - 1))
              EXPECT_TRUE(project(q_radius(n) * NCPoly::monomial(n, low), m, mp).is_zero());
          }
        }
}

TEST(HarmonicDecompose, Radius) {
  const auto parts = harmonic_decompose(q_radius(2));
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0].first, 1);
  expect_same(parts[0].second, NCPoly::constant(2, one));
}

TEST(HarmonicDecompose, RankTwoDiagonalMonomial) {
  const NCPoly p = Z(2, 1) * W(2, 1);
  const auto parts = harmonic_decompose(p);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].first, 0);
  expect_same(parts[0].second, -rank_two_zonal());
  EXPECT_EQ(parts[1].first, 1);
  expect_same(parts[1].second, NCPoly::constant(2, (one + q(2)).inverse()));
  expect_same(recombine(2, parts), p);
}

TEST(HarmonicDecompose, HarmonicInputIsSinglePart) {
  const auto parts = harmonic_decompose(Z(2, 1));
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0].first, 0);
}

TEST(HarmonicDecompose, RecombinesAndPartsAreHarmonic) {
  for (int n : {2, 3})
    for (int m = 0; m <= 2; ++m)
      for (int mp = 0; mp <= 2; ++mp)
        for (const auto& mono : monomial_basis(n, m, mp)) {
          const NCPoly p = NCPoly::monomial(n, mono);
          const auto parts = harmonic_decompose(p);
          for (const auto& [j, h] : parts) EXPECT_TRUE(ops::laplace(n).apply(h).is_zero());
          expect_same(recombine(n, parts), p);
        }
}

TEST(HarmonicDecompose, HarmonicsAreNotDivisibleByRadius) {
  for (int n : {2, 3})
    for (int m = 0; m <= 2; ++m)
      for (int mp = 0; mp <= 2; ++mp)
        for (const auto& h : harmonic_basis(n, m, mp)) {
          const auto parts = harmonic_decompose(h);
          ASSERT_EQ(parts.size(), 1u);
          EXPECT_EQ(parts[0].first, 0);
        }
}

TEST(HarmonicDecompose, RejectsInhomogeneousInput) {
  EXPECT_THROW(harmonic_decompose(Z(2, 1) + Z(2, 1) * W(2, 1)), std::invalid_argument);
}

TEST(DimHarmonic, SmallValues) {
  EXPECT_EQ(dim_harmonic(3, 0, 0), 1);
  EXPECT_EQ(dim_harmonic(2, 1, 1), 3);
  EXPECT_EQ(dim_harmonic(3, 2, 1), 15);
  EXPECT_EQ(kernel_dim(2, 1, 1), 3u);
  EXPECT_EQ(kernel_dim(3, 2, 1), 15u);
}

TEST(DimHarmonic, RankOne) {
  EXPECT_EQ(dim_harmonic(1, 0, 0), 1);
  EXPECT_EQ(dim_harmonic(1, 3, 0), 1);
  EXPECT_EQ(dim_harmonic(1, 0, 2), 1);
  EXPECT_EQ(dim_harmonic(1, 1, 1), 0);
}

TEST(DimHarmonic, KernelAndProjectorRank) {
  for (int n : {2, 3})
    for (int m = 0; m <= 3; ++m)
      for (int mp = 0; m + mp <= 3; ++mp) {
        const BidegreeBasis A(n, m, mp);
        Matrix P(A.size(), A.size());
        for (std::size_t i = 0; i < A.size(); ++i) P.set_column(i, A.coordinates(project(A.element(i), m, mp)));
        const long long lower = (m > 0 && mp > 0) ? static_cast<long long>(monomial_basis(n, m - 1, mp - 1).size()) : 0;
        EXPECT_EQ(dim_harmonic(n, m, mp), static_cast<long long>(kernel_dim(n, m, mp)));
        EXPECT_EQ(dim_harmonic(n, m, mp), rank(P));
        EXPECT_EQ(dim_harmonic(n, m, mp), static_cast<long long>(A.size()) - lower);
      }
}

TEST(Zonal, RankTwoExample) { expect_same(zonal(2, 1, 1), rank_two_zonal()); }

TEST(Zonal, DegenerateBidegrees) {
  expect_same(zonal(3, 2, 0), Z(3, 3) * Z(3, 3));
  expect_same(zonal(3, 0, 2), W(3, 3) * W(3, 3));
}

TEST(Zonal, EqualsProjectionAndIsInvariant) {
  for (int n : {2, 3})
    for (int m = 0; m <= 2; ++m)
      for (int mp = 0; mp <= 2; ++mp) {
        const NCPoly zn = zonal(n, m, mp);
        expect_same(zn, project(pow(Z(n, n), m) * pow(W(n, n), mp), m, mp));
        for (int i = 1; i <= n - 2; ++i) {
          EXPECT_TRUE(act_gl(GlGenerator::e(i), zn).is_zero());
          EXPECT_TRUE(act_gl(GlGenerator::f(i), zn).is_zero());
        }
        for (int i = 1; i <= n - 1; ++i) expect_same(act_gl(GlGenerator::k(i), zn), zn);
      }
}

TEST(Zonal, RejectsRankOne) { EXPECT_THROW(zonal(1, 1, 1), std::invalid_argument); }

TEST(AssocFactor, TopIndicesGiveOne) {
  for (int m = 0; m <= 2; ++m)
    for (int mp = 0; mp <= 2; ++mp) expect_same(assoc_factor(3, m, mp, m, mp, 3), NCPoly::constant(3, one));
}

TEST(AssocFactor, RankTwoEqualsZonal) { expect_same(assoc_factor(2, 1, 1, 0, 0, 2), rank_two_zonal()); }

TEST(AssocFactor, ReproducesProjection) {
  const int n = 3;
  for (int m = 0; m <= 2; ++m)
    for (int mp = 0; m + mp <= 3; ++mp)
      for (int s = 0; s <= m; ++s)
        for (int sp = 0; sp <= mp; ++sp)
          for (const auto& h : harmonic_basis(n - 1, s, sp)) {
            const NCPoly hh = embed(h, n);
            const NCPoly lhs = project(pow(Z(n, n), m - s) * pow(W(n, n), mp - sp) * hh, m, mp);
            expect_same(lhs, assoc_factor(n, m, mp, s, sp, n) * hh);
          }
}

TEST(AssocFactor, BranchesAgreeOnTheDiagonal) {
  for (int n : {2, 3})
    for (int m = 0; m <= 3; ++m)
      for (int s = 0; s <= m; ++s)
        for (int sp = 0; sp <= 2; ++sp) {
          const int mp = m - s + sp;
          expect_same(assoc_factor(n, m, mp, s, sp, FactorBranch::ZPower, n),
                      assoc_factor(n, m, mp, s, sp, FactorBranch::WPower, n));
        }
}

TEST(AssocFactor, RejectsBadIndices) {
  EXPECT_THROW(assoc_factor(3, 1, 1, 2, 0, 3), std::invalid_argument);
  EXPECT_THROW(assoc_factor(3, 2, 0, 0, 0, FactorBranch::WPower, 3), std::invalid_argument);
}

TEST(XiBasis, RankTwoDegreeOneLabels) {
  const auto b = xi_basis(2, 1, 0);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0].first.m1, 1);
  EXPECT_EQ(b[1].first.m1, 0);
  EXPECT_EQ(b[0].first.to_string(), "(;;1)");
}

TEST(XiBasis, RankTwoMixedLabels) {
  const auto b = xi_basis(2, 1, 1);
  ASSERT_EQ(b.size(), 3u);
  EXPECT_EQ(b[0].first.m1, 1);
  EXPECT_EQ(b[1].first.m1, 0);
  EXPECT_EQ(b[2].first.m1, -1);
}

TEST(XiBasis, CountHarmonicityIndependence) {
  for (int n : {2, 3})
    for (int m = 0; m <= 3; ++m)
      for (int mp = 0; m + mp <= 3; ++mp) {
        const auto b = xi_basis(n, m, mp);
        EXPECT_EQ(static_cast<long long>(b.size()), dim_harmonic(n, m, mp));
        const BidegreeBasis A(n, m, mp);
        Matrix M(A.size(), b.size());
        for (std::size_t i = 0; i < b.size(); ++i) {
          EXPECT_TRUE(ops::laplace(n).apply(b[i].second).is_zero()) << b[i].first.to_string();
          M.set_column(i, A.coordinates(b[i].second));
        }
        EXPECT_EQ(rank(M), static_cast<int>(b.size()));
      }
}

TEST(XiNormFactors, TrivialChain) { EXPECT_EQ(xi_norm_factors(xi_basis(3, 0, 0).at(0).first), one); }

TEST(HighestWeight, VectorIsHarmonicAndKilledByRaising) {
  for (int n : {2, 3})
    for (int m = 0; m <= 2; ++m)
      for (int mp = 0; mp <= 2; ++mp) {
        const NCPoly v = pow(Z(n, 1), m) * pow(W(n, n), mp);
        EXPECT_TRUE(ops::laplace(n).apply(v).is_zero());
        for (int i = 1; i < n; ++i) EXPECT_TRUE(act_gl(GlGenerator::e(i), v).is_zero());
        for (int i = 1; i <= n; ++i) {
          const int weight = (i == 1 ? m : 0) - (i == n ? mp : 0);
          expect_same(act_gl(GlGenerator::k(i), v), q(weight) * v);
        }
      }
}

TEST(SplitProject, RankTwoExample) {
  const SplitSpec x{2, 1, 1, 1, 0, 0, 0, 0};
  const NCPoly one2 = NCPoly::constant(2, one);
  const NCPoly got = split_project(x, one2, one2);
  expect_same(got, -rank_two_zonal());
  expect_same(got, project(Z(2, 1) * W(2, 1), 1, 1));
}

TEST(SplitProject, ZeroRadialPowerLeavesProductUnchanged) {
  const SplitSpec x{3, 1, 1, 1, 1, 0, 0, 1};
  ASSERT_EQ(x.u(), 0);
  for (const auto& ht : split_t_basis(3, 1, 0, 1))
    for (const auto& hy : split_y_basis(3, 1, 1, 0)) expect_same(split_project(x, ht, hy), ht * hy);
}

TEST(SplitProject, MatchesDirectProjection) {
  const int n = 3;
  for (int p = 1; p <= 2; ++p)
    for (int u = 0; u <= 2; ++u)
      for (int r = 0; r <= 1; ++r)
        for (int sp = 0; sp <= 1; ++sp) {
          const SplitSpec x{n, p, u + r, u + sp, r, 0, 0, sp};
          for (const auto& ht : split_t_basis(n, p, 0, sp))
            for (const auto& hy : split_y_basis(n, p, r, 0))
              expect_same(split_project(x, ht, hy), project(pow(q_radius(n, p), u) * ht * hy, x.m, x.mp));
        }
}

TEST(SplitProject, TSpaceKilledByYDerivatives) {
  for (int p = 1; p <= 2; ++p)
    for (int s = 0; s <= 2; ++s)
      for (int sp = 0; s + sp <= 2; ++sp)
        for (const auto& P : split_t_basis(3, p, s, sp))
          for (int i = 1; i <= p; ++i) {
            EXPECT_TRUE(ops::partial(3, i).apply(P).is_zero());
            EXPECT_TRUE(ops::bar_partial(3, i).apply(P).is_zero());
          }
}

TEST(SplitProject, RejectsInvalidSpecs) {
  EXPECT_THROW((SplitSpec{3, 3, 1, 1, 0, 0, 0, 0}.validate()), std::invalid_argument);
  EXPECT_THROW((SplitSpec{3, 1, 2, 1, 0, 0, 0, 0}.validate()), std::invalid_argument);
  const NCPoly one3 = NCPoly::constant(3, one);
  EXPECT_THROW(split_project(SplitSpec{3, 1, 2, 2, 1, 1, 0, 0}, one3, Z(3, 1) * W(3, 1)), std::invalid_argument);
}
