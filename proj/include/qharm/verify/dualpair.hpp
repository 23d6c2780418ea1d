// The U_q(sl_2) action omega built from gamma bar_gamma, Q_hat and Delta_q,
// its commutation with U_q(gl_n), and the ladder on C[Q] (x) H_{m,m'}.
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "qharm/harmonics.hpp"
#include "qharm/verify/laplace.hpp"

namespace qharm::verify {

inline VerifyReport dualpair_suite(int n, int max_degree, const OperatorSet& fx = {}) {
  SuiteBuilder b("dualpair", suite_params(n, max_degree));
  const auto dom = monomials_up_to(n, max_degree);
  auto q = [](int k) { return ScalarQ::q_power(k); };
  const LinearOp gg = ops::gamma_total(n) * ops::bar_gamma_total(n);
  const LinearOp gg_inv = ops::gamma_total(n, -2) * ops::bar_gamma_total(n, -2);
  const LinearOp K = q(n) * gg, Ki = q(-n) * gg_inv;
  const LinearOp E = q(1 - n) * ops::q_hat(n);
  const LinearOp F = ScalarQ(-1) * fx.laplace(n);
  const LinearOp one = LinearOp::identity(n);
  const ScalarQ inv_dq = (q(1) - q(-1)).inverse();

  b.identities("dualpair.omega_generators", "sl2_operator agrees with q^n gamma bar_gamma, q^{1-n} Q_hat, -Delta_q",
               {{json{{"generator", "k"}}, sl2_operator(n, Sl2Generator::K), K},
                {json{{"generator", "k^-1"}}, sl2_operator(n, Sl2Generator::KInverse), Ki},
                {json{{"generator", "e"}}, sl2_operator(n, Sl2Generator::E), E},
                {json{{"generator", "f"}}, sl2_operator(n, Sl2Generator::F), F}},
               dom);

  auto sl2_relations = [&](const LinearOp& e, const LinearOp& f) {
    return std::vector<Instance>{
        {json{{"relation", "k k^-1 = 1"}}, K * Ki, one},
        {json{{"relation", "k e = q^2 e k"}}, K * e, q(2) * (e * K)},
        {json{{"relation", "k f = q^-2 f k"}}, K * f, q(-2) * (f * K)},
        {json{{"relation", "e f - f e = (k - k^-1)/(q - q^-1)"}}, e * f - f * e, inv_dq * (K - Ki)},
    };
  };
  b.identities("dualpair.sl2_relations", "omega(k), omega(e), omega(f) satisfy the U_q(sl_2) relations", sl2_relations(E, F),
               dom);

  {
    std::vector<Instance> inst;
    const auto labels = detail::gl_generator_labels(n);
    const auto gens = detail::gl_generators(n);
    const std::pair<const char*, LinearOp> omegas[] = {{"k", K}, {"e", E}, {"f", F}};
    for (const auto& [name, w] : omegas)
      for (std::size_t g = 0; g < gens.size(); ++g)
        inst.push_back({json{{"omega", name}, {"generator", labels[g].name()}}, w * gens[g], gens[g] * w});
    b.identities("dualpair.omega_commutes_with_gl", "omega(k), omega(e), omega(f) commute with every L(X)", inst, dom);
  }

  // Q_hat, Delta_q, gamma bar_gamma on Q^r h and the normalized ladder |r>
  {
    std::optional<json> radial, ladder;
    const NCPoly Q = q_radius(n);
    const int top = std::min(max_degree, 2);
    const LinearOp lap = fx.laplace(n);
    for (int m = 0; m <= top; ++m)
      for (int mp = 0; m + mp <= top; ++mp) {
        const auto basis = harmonic_basis(n, m, mp);
        if (basis.empty()) continue;
        const NCPoly& h = basis.front();
        const int N = m + mp + n;
        auto ket = [&](int r) {
          return (q(-r * (n - 1)) * q_factorial(r + N - 1).inverse()) * (pow(Q, r) * h);
        };
        for (int r = 0; r <= 3; ++r) {
          const json at{{"m", m}, {"mprime", mp}, {"r", r}, {"h", h.to_string()}};
          const NCPoly x = pow(Q, r) * h;
          if (!radial) {
            if (auto c = compare_polys(ops::q_hat(n).apply(x), pow(Q, r + 1) * h, at)) {
              radial = c;
              (*radial)["rule"] = "Q_hat";
            } else if (auto c2 = compare_polys(lap.apply(x), r == 0 ? NCPoly(n) : (q(n - 1) * q_number(r) * q_number(r + m + mp + n - 1)) * (pow(Q, r - 1) * h), at)) {
              radial = c2;
              (*radial)["rule"] = "Delta_q";
            } else if (auto c3 = compare_polys(gg.apply(x), q(2 * r + m + mp) * x, at)) {
              radial = c3;
              (*radial)["rule"] = "gamma bar_gamma";
            }
          }
          if (!ladder) {
            if (auto c = compare_polys(K.apply(ket(r)), q(2 * r + N) * ket(r), at)) {
              ladder = c;
              (*ladder)["rule"] = "omega(k)";
            } else if (auto c2 = compare_polys(F.apply(ket(r)), r == 0 ? NCPoly(n) : -q_number(r) * ket(r - 1), at)) {
              ladder = c2;
              (*ladder)["rule"] = "omega(f)";
            } else if (auto c3 = compare_polys(E.apply(ket(r)), q_number(r + N) * ket(r + 1), at)) {
              ladder = c3;
              (*ladder)["rule"] = "omega(e)";
            }
          }
        }
      }
    b.check("dualpair.radial_actions",
            "Q_hat, Delta_q and gamma bar_gamma on Q^r h for harmonic h, r <= 3", json{{"n", n}, {"max_bidegree", top}}, radial);
    b.check("dualpair.ladder_actions",
            "|r> = q^{-r(n-1)} [r+m+m'+n-1]!^-1 Q^r h: omega(k) = q^{2r+m+m'+n}, omega(f)|r> = -[r]|r-1>, omega(e)|r> = [r+m+m'+n]|r+1>",
            json{{"n", n}, {"max_bidegree", top}}, ladder);
  }

  // negative control: omega(e) = q^{-n} Q_hat
  {
    const LinearOp bad_e = q(-n) * ops::q_hat(n);
    std::optional<json> det;
    for (const auto& inst : sl2_relations(bad_e, F))
      if (auto c = compare_ops(inst.lhs, inst.rhs, dom)) {
        (*c)["instance"] = inst.params;
        det = c;
        break;
      }
    b.control("control.omega_e_wrong_power", "omega(e) = q^{-n} Q_hat must break the U_q(sl_2) relations", json{{"n", n}},
              det);
  }
  return b.finish();
}

}  // namespace qharm::verify
