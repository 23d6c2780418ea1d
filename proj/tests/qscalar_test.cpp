#include <gtest/gtest.h>

#include <random>

#include "qharm/qscalar.hpp"

using namespace qharm;

namespace {

ScalarQ q(int k) { return ScalarQ::q_power(k); }

}  // namespace

TEST(QNumber, SmallValues) {
  EXPECT_EQ(q_number(0), ScalarQ(0));
  EXPECT_EQ(q_number(1), ScalarQ(1));
  EXPECT_EQ(q_number(2), q(1) + q(-1));
  EXPECT_EQ(q_number(-3), -q_number(3));
  EXPECT_EQ(q_number(3) * (q(1) - q(-1)), q(3) - q(-3));
}

TEST(QNumber, AdditionLaw) {
  const ScalarQ d = q(1) - q(-1);
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b)
      EXPECT_EQ(q_number(a + b) * d, q(a) * q_number(b) * d + q(-b) * q_number(a) * d) << a << "," << b;
}

TEST(QFactorial, Values) {
  EXPECT_EQ(q_factorial(0), ScalarQ(1));
  EXPECT_EQ(q_factorial(2), q(1) + q(-1));
  EXPECT_EQ(q_factorial(3), (q(2) + 1 + q(-2)) * (q(1) + q(-1)));
  EXPECT_THROW(q_factorial(-1), std::invalid_argument);
}

TEST(QPochhammer, Values) {
  EXPECT_EQ(q_pochhammer(parse_scalar("v^3 + 7"), 2, 0), ScalarQ(1));
  EXPECT_EQ(q_pochhammer(q(2), 2, 1), 1 - q(2));
  EXPECT_EQ(q_pochhammer(q(-2), 2, 2), ScalarQ(0));
  EXPECT_EQ(q_pochhammer(q(2), 2, 3), (1 - q(2)) * (1 - q(4)) * (1 - q(6)));
  EXPECT_EQ(q_pochhammer(q(1), -2, 2), (1 - q(1)) * (1 - q(-1)));
}

TEST(ScalarQ, CanonicalFormIsUnique) {
  const ScalarQ a = parse_scalar("(v^4 - 1)/(v^2 + 1)");
  EXPECT_EQ(a, parse_scalar("v^2 - 1"));
  EXPECT_EQ(a.to_string(), "v^2 - 1");
  const ScalarQ b = parse_scalar("(2*v^2 + 2)/(4*v^3 - 4*v)");
  EXPECT_EQ(b.to_string(), "(v^2 + 1)/(2*v^3 - 2*v)");
  EXPECT_EQ(parse_scalar(b.to_string()), b);
  EXPECT_EQ(parse_scalar("1/(-v)"), -ScalarQ::v_power(-1));
  EXPECT_EQ(parse_scalar("q^{-2}"), ScalarQ::v_power(-4));
  EXPECT_EQ(parse_scalar("q^(-2) * q^2"), ScalarQ(1));
  EXPECT_EQ(ScalarQ(ZPoly({2, 4}), ZPoly({6, 12})), parse_scalar("1/3"));
}

TEST(ScalarQ, ParseErrors) {
  EXPECT_THROW(parse_scalar("v +"), std::invalid_argument);
  EXPECT_THROW(parse_scalar("x"), std::invalid_argument);
  EXPECT_THROW(parse_scalar("(v"), std::invalid_argument);
  EXPECT_THROW(parse_scalar("1/(v-v)"), std::domain_error);
}

TEST(ScalarQ, FieldAxiomsOnRandomValues) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> coef(-5, 5), deg(0, 4);
  auto rand_poly = [&] {
    std::vector<mpz_class> c;
    for (int i = 0, d = deg(rng); i <= d; ++i) c.emplace_back(coef(rng));
    return ZPoly(c);
  };
  auto rand_scalar = [&] {
    ZPoly d;
    do d = rand_poly();
    while (d.is_zero());
    return ScalarQ(rand_poly(), d);
  };
  for (int t = 0; t < 100; ++t) {
    const ScalarQ a = rand_scalar(), b = rand_scalar(), c = rand_scalar();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, ScalarQ(0));
    if (!a.is_zero()) {
      EXPECT_EQ(a / a, ScalarQ(1));
    }
    // normalization is idempotent
    EXPECT_EQ(ScalarQ(a.num(), a.den()), a);
    EXPECT_EQ(parse_scalar(a.to_string()), a);
  }
}

TEST(ScalarQ, NumericEvaluationMatchesDirectSubstitution) {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> coef(-6, 6), deg(0, 5);
  const mpq_class q0(7, 10);
  int checked = 0;
  while (checked < 100) {
    std::vector<mpz_class> n, d;
    for (int i = 0, k = deg(rng); i <= k; ++i) {
      n.emplace_back(coef(rng));
      n.emplace_back(0);
    }
    for (int i = 0, k = deg(rng); i <= k; ++i) {
      d.emplace_back(coef(rng));
      d.emplace_back(0);
    }
    ZPoly np(n), dp(d);
    if (dp.is_zero()) continue;
    // direct substitution of q0 for v^2 in the unreduced fraction
    auto direct = [&](const ZPoly& p) {
      mpq_class r = 0, x = 1;
      for (std::size_t i = 0; i < p.coeffs().size(); i += 2, x *= q0) r += x * p.coeffs()[i];
      return r;
    };
    if (direct(dp) == 0) continue;
    mpq_class expect = direct(np) / direct(dp);
    expect.canonicalize();
    EXPECT_EQ(ScalarQ(np, dp).eval_q(q0), expect);
    ++checked;
  }
  EXPECT_EQ(ScalarQ::v_power(1).eval_q(mpq_class(4, 9)), mpq_class(2, 3));
  EXPECT_THROW(ScalarQ::v_power(1).eval_q(mpq_class(7, 10)), std::domain_error);
}

TEST(ScalarQ, Gcd) {
  // (v^2 - 1)(v^3 + 2) and (v^2 - 1)(v + 5)
  const ZPoly a = ZPoly({-1, 0, 1}) * ZPoly({2, 0, 0, 1});
  const ZPoly b = ZPoly({-1, 0, 1}) * ZPoly({5, 1});
  EXPECT_EQ(poly_gcd(a, b), ZPoly({-1, 0, 1}));
  EXPECT_EQ(poly_gcd(a.shifted_up(3), b.shifted_up(1)), ZPoly({-1, 0, 1}).shifted_up(1));
}
