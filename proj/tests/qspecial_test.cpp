#include <gtest/gtest.h>

#include "qharm/qspecial.hpp"

using namespace qharm;

namespace {

ScalarQ q(int k) { return ScalarQ::q_power(k); }
const ScalarQ one(1);

// (a; q^{base_exp})_k by repeated multiplication
ScalarQ poch(const ScalarQ& a, int base_exp, int k) {
  ScalarQ r(1);
  for (int j = 0; j < k; ++j) r *= one - a * q(base_exp * j);
  return r;
}

// term-by-term sum of 2phi1 with base q^2, truncated at N
ScalarQ phi21_direct(const ScalarQ& a, const ScalarQ& b, const ScalarQ& c, const ScalarQ& x, int N) {
  ScalarQ s;
  for (int k = 0; k <= N; ++k)
    s += poch(a, 2, k) * poch(b, 2, k) / (poch(c, 2, k) * poch(q(2), 2, k)) * x.pow(k);
  return s;
}

}  // namespace

TEST(Phi21, ZeroTerminationIsOne) {
  const auto s = Phi21Spec::make(one, q(7), q(3), q(2));
  EXPECT_EQ(s.termination, 0);
  EXPECT_EQ(phi21_eval(s, q(5) + one), one);
  EXPECT_EQ(phi21_symbolic(s), UPoly(1));
}

TEST(Phi21, TwoTermExpansionInScaledVariable) {
  // x = q^2 t: coefficient of t is q^2 times the k = 1 coefficient
  const UPoly p = phi21_symbolic(Phi21Spec::from_q_exponents(-2, 4, 2, 2));
  ASSERT_EQ(p.degree(), 1);
  EXPECT_EQ(p.coeff(0), one);
  EXPECT_EQ(q(2) * p.coeff(1), -(one + q(2)));
}

TEST(Phi21, EvaluatesToQGaussValue) {
  EXPECT_EQ(phi21_eval(Phi21Spec::from_q_exponents(-2, -2, -4, 2), q(2)), (one + q(2)).inverse());
}

TEST(Phi21, DegreeEqualsTerminationIndex) {
  for (int N = 0; N <= 4; ++N) {
    const auto s = Phi21Spec::from_q_exponents(-2 * N, 3, 5, 2);
    EXPECT_EQ(s.termination, N);
    EXPECT_EQ(phi21_symbolic(s).degree(), N);
  }
}

TEST(Phi21, MatchesDirectSum) {
  const ScalarQ x = q(1) + q(-3);
  for (int N = 0; N <= 3; ++N)
    for (int b = -3; b <= 3; b += 2) {
      const auto s = Phi21Spec::from_q_exponents(-2 * N, b, 2 * N + 1, 2);
      EXPECT_EQ(phi21_eval(s, x), phi21_direct(q(-2 * N), q(b), q(2 * N + 1), x, N)) << "N=" << N << " b=" << b;
    }
}

TEST(Phi21, TerminationFromSecondParameter) {
  const auto s = Phi21Spec::from_q_exponents(5, -4, 1, 2);
  EXPECT_EQ(s.termination, 2);
  EXPECT_EQ(phi21_eval(s, q(2)), phi21_direct(q(-4), q(5), q(1), q(2), 2));
}

TEST(Phi21, RejectsNonTerminatingParameters) {
  EXPECT_THROW(Phi21Spec::from_q_exponents(3, 5, 1, 2), std::invalid_argument);
  EXPECT_THROW(Phi21Spec::make(q(1) + one, q(4), q(2), q(2)), std::invalid_argument);
}

TEST(Phi21, RejectsVanishingDenominator) {
  // c q^2 = 1 inside the summation range
  EXPECT_THROW(Phi21Spec::from_q_exponents(-4, 1, -2, 2), std::invalid_argument);
}

// sum over s for the zonal series: closed q-Gauss value
TEST(Phi21, QGaussClosedForm) {
  for (int n : {2, 3})
    for (int m = 0; m <= 3; ++m)
      for (int mp = 0; mp <= 3; ++mp)
        for (int nu = 0; nu <= mp; ++nu) {
          const int c_exp = -2 * (m + mp + n - 2);
          const ScalarQ lhs = phi21_eval(Phi21Spec::from_q_exponents(-2 * m, -2 * mp + 2 * nu, c_exp, 2), q(2));
          const ScalarQ rhs =
              q(-2 * m * mp + 2 * m * nu) * poch(q(-2 * mp - 2 * n + 4), 2, mp - nu) / poch(q(c_exp), 2, mp - nu);
          EXPECT_EQ(lhs, rhs) << "n=" << n << " m=" << m << " m'=" << mp << " nu=" << nu;
        }
}

// 2phi1(q^-2N, b; c; q^2, z) = q^{-(N+1)N} (-z)^N (b;q^2)_N/(c;q^2)_N
//   2phi1(q^-2N, q^{2-2N}/c; q^{2-2N}/b; q^2, c q^{2N+2}/(b z)),
// compared coefficient by coefficient in z for the split projection family
TEST(Phi21, TerminatingTransformationOnSplitFamily) {
  for (int n : {2, 3})
    for (int p = 1; p <= n - 1; ++p)
      for (int rr = 0; rr <= 2; ++rr)
        for (int N = 0; N <= 3; ++N)
          for (int total = 2 * N + rr; total <= 2 * N + rr + 2; ++total) {
            const int b_exp = -2 * (rr + p + N - 1), c_exp = -2 * (total + n - 2);
            const UPoly lhs = phi21_symbolic(Phi21Spec::from_q_exponents(-2 * N, b_exp, c_exp, 2));
            const UPoly inner = phi21_symbolic(Phi21Spec::from_q_exponents(-2 * N, 2 - 2 * N - c_exp, 2 - 2 * N - b_exp, 2));
            const ScalarQ pref = q(-(N + 1) * N) * ScalarQ(N % 2 == 0 ? 1 : -1) * poch(q(b_exp), 2, N) / poch(q(c_exp), 2, N);
            const ScalarQ ratio = q(c_exp + 2 * N + 2 - b_exp);
            for (int k = 0; k <= N; ++k)
              EXPECT_EQ(lhs.coeff(N - k), pref * inner.coeff(k) * ratio.pow(k))
                  << "n=" << n << " p=" << p << " r+r'=" << rr << " N=" << N << " m+m'=" << total << " k=" << k;
          }
}

TEST(LittleQJacobi, DegreeZeroIsOne) {
  EXPECT_EQ(little_q_jacobi({0, 3, 1}), UPoly(1));
}

TEST(LittleQJacobi, DegreeOneWithZeroParameters) {
  const UPoly p = little_q_jacobi({1, 0, 0});
  ASSERT_EQ(p.degree(), 1);
  EXPECT_EQ(p.coeff(0), one);
  EXPECT_EQ(p.coeff(1), -(one + q(2)));
}

TEST(LittleQJacobi, ValueAtZeroIsOne) {
  for (int k = 0; k <= 4; ++k)
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b) EXPECT_EQ(little_q_jacobi({k, a, b}).evaluate(ScalarQ(0)), one);
}

TEST(LittleQJacobi, MatchesDefiningSeries) {
  const ScalarQ x = q(-1) + ScalarQ(2);
  for (int k = 0; k <= 3; ++k)
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b)
        EXPECT_EQ(little_q_jacobi({k, a, b}).evaluate(x),
                  phi21_direct(q(-2 * k), q(2 * (a + b + k + 1)), q(2 * (a + 1)), q(2) * x, k));
}

TEST(LittleQJacobi, RejectsNegativeDegree) { EXPECT_THROW(little_q_jacobi({-1, 0, 0}), std::invalid_argument); }

TEST(QJacobiNorm, TopIndicesSimplify) {
  for (int n : {2, 3})
    for (int m = 0; m <= 2; ++m)
      for (int mp = 0; mp <= 2; ++mp)
        EXPECT_EQ(q_jacobi_norm({n, m, mp, m, mp}),
                  (one - q(2 * (n + m + mp - 1))) / (one - q(2 * (2 * m + n - 1))));
}

TEST(QJacobiNorm, RejectsOutOfRangeIndices) {
  EXPECT_THROW(q_jacobi_norm({2, 1, 0, 2, 0}), std::invalid_argument);
  EXPECT_THROW(q_jacobi_norm({2, 1, 1, 0, -1}), std::invalid_argument);
  EXPECT_THROW(q_jacobi_norm({1, 1, 1, 0, 0}), std::invalid_argument);
}
