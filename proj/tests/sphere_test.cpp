#include <gtest/gtest.h>

#include "qharm/numeric.hpp"
#include "qharm/sphere.hpp"

using namespace qharm;

namespace {

ScalarQ q(int k) { return ScalarQ::q_power(k); }
const ScalarQ one(1);
NCPoly Z(int n, int i) { return NCPoly::z(n, i); }
NCPoly W(int n, int i) { return NCPoly::w(n, i); }

void expect_same(const NCPoly& a, const NCPoly& b) {
  EXPECT_TRUE((a - b).to_order(Order::ZFirst).is_zero()) << a.to_string() << "  vs  " << b.to_string();
}

}  // namespace

TEST(HFunctional, Values) {
  EXPECT_EQ(h_functional(NCPoly::constant(2, one)), one);
  EXPECT_TRUE(h_functional(Z(2, 1)).is_zero());
  EXPECT_TRUE(h_functional(Z(3, 1) * W(3, 2)).is_zero());
  EXPECT_EQ(h_functional(W(2, 1) * Z(2, 1)), (one + q(2)).inverse());
}

TEST(HFunctional, RadiusPowersAreOne) {
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= 3; ++k) EXPECT_EQ(h_functional(pow(q_radius(n), k)), one) << n << " " << k;
}

TEST(HFunctional, ProfileFormula) {
  // mu = (1, 0): (q^2;q^2)_1 (q^2;q^2)_0 (q^2;q^2)_1 / (q^2;q^2)_2
  EXPECT_EQ(h_profile({1, 0}), (one - q(2)) * (one - q(2)) / ((one - q(2)) * (one - q(4))));
}

TEST(HJackson, Values) {
  EXPECT_EQ(h_jackson(2, QPoly{{{0}, one}}), one);
  EXPECT_EQ(h_jackson(2, QPoly{{{1}, one}}), (one - q(2)) / (one - q(4)));
  EXPECT_EQ(h_jackson(2, QPoly{{{2}, one}}), (one - q(2)) / (one - q(6)));
  EXPECT_EQ(h_jackson(3, QPoly{{{0, 0}, one}}), one);
}

TEST(HJackson, RejectsWrongArity) { EXPECT_THROW(h_jackson(3, QPoly{{{1}, one}}), std::invalid_argument); }

TEST(ZeroWeightToQ, Examples) {
  EXPECT_EQ(zero_weight_to_Q(Z(2, 1) * W(2, 1)), (QPoly{{{1, 0}, one}}));
  EXPECT_EQ(zero_weight_to_Q(Z(2, 2) * W(2, 2)), (QPoly{{{0, 1}, one}, {{1, 0}, -one}}));
  EXPECT_EQ(zero_weight_to_Q(W(2, 2) * Z(2, 2)), (QPoly{{{0, 1}, one}, {{1, 0}, -q(2)}}));
}

TEST(ZeroWeightToQ, RejectsWeightedInput) { EXPECT_THROW(zero_weight_to_Q(Z(2, 1) * W(2, 2)), std::invalid_argument); }

// the monomial formula against the Jackson integral
TEST(HFunctional, AgreesWithJacksonIntegral) {
  for (int n : {2, 3})
    for (int d = 0; d <= 3; ++d)
      for (int m = 0; m <= d; ++m)
        for (const auto& mono : monomial_basis(n, m, d - m)) {
          if (!mono.zero_weight()) continue;
          const NCPoly p = NCPoly::monomial(n, mono);
          EXPECT_EQ(h_functional(p), h_jackson(n, restrict_top_radius(zero_weight_to_Q(p)))) << p.to_string();
        }
}

TEST(InnerProduct, Examples) {
  EXPECT_TRUE(inner_product(Z(2, 1), Z(2, 2)).is_zero());
  EXPECT_EQ(inner_product(Z(2, 1), Z(2, 1)), (one + q(2)).inverse());
  EXPECT_TRUE(inner_product(zonal(2, 1, 1), NCPoly::constant(2, one)).is_zero());
}

TEST(InnerProduct, RejectsRankMismatch) { EXPECT_THROW(inner_product(Z(2, 1), Z(3, 1)), std::invalid_argument); }

TEST(InnerProduct, GramOfXiBasisIsDiagonalPositiveAndMatchesNorms) {
  const mpq_class q0(7, 10);
  for (int n : {2, 3})
    for (int m = 0; m <= 2; ++m)
      for (int mp = 0; m + mp <= 2; ++mp) {
        const auto basis = xi_basis(n, m, mp);
        std::vector<NCPoly> els;
        for (const auto& [l, x] : basis) els.push_back(x);
        const Matrix g = gram_matrix(els);
        EXPECT_TRUE(g.is_diagonal());
        for (std::size_t i = 0; i < basis.size(); ++i) {
          EXPECT_EQ(g.at(i, i), xi_norm_factors(basis[i].first)) << basis[i].first.to_string();
          EXPECT_GT(sign_at(g.at(i, i), q0), 0);
        }
      }
}

TEST(InnerProduct, DifferentBidegreesAreOrthogonal) {
  const int n = 2;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (int d = 0; d <= 2; ++d) {
          if (a == c && b == d) continue;
          for (const auto& h1 : harmonic_basis(n, a, b))
            for (const auto& h2 : harmonic_basis(n, c, d)) EXPECT_TRUE(inner_product(h1, h2).is_zero());
        }
}

TEST(Restrict, Examples) {
  expect_same(restrict_to_sphere(q_radius(2)), NCPoly::constant(2, one));
  const NCPoly want = (one + q(2)).inverse() * (q(2) * (Z(2, 1) * W(2, 1)) - Z(2, 2) * W(2, 2) + NCPoly::constant(2, one));
  expect_same(restrict_to_sphere(Z(2, 1) * W(2, 1)), want);
  const NCPoly h = zonal(3, 1, 1);
  expect_same(restrict_to_sphere(h), h);
}

TEST(Restrict, RadiusFactorsDropAndIdempotent) {
  for (int n : {2, 3})
    for (int m = 0; m <= 1; ++m)
      for (int mp = 0; mp <= 1; ++mp)
        for (const auto& mono : monomial_basis(n, m, mp)) {
          const NCPoly p = NCPoly::monomial(n, mono);
          const NCPoly r = restrict_to_sphere(p);
          expect_same(restrict_to_sphere(q_radius(n) * p), r);
          expect_same(restrict_to_sphere(r), r);
        }
}
