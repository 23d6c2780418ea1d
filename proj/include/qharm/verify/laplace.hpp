// The squared radius Q, its partial sums Q_j, and the q-Laplace operator:
// radial powers, the commutator with Q_hat, invariance under U_q(gl_n).
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "qharm/verify/report.hpp"

namespace qharm::verify {

namespace detail {

/// (a;q^{2 base_sign})_k applied to the commuting pair Q_{i-1}, Q_i:
/// prod_{j<k} (Q_i - c q^{2 base_sign j} Q_{i-1}).
inline NCPoly radius_product(int n, int i, int k, int shift, int base_sign) {
  const NCPoly Qi = q_radius(n, i);
  const NCPoly Qp = q_radius(n, i - 1);
  NCPoly r = NCPoly::constant(n, ScalarQ(1));
  for (int j = 0; j < k; ++j) {
    NCPoly f = Qi;
    f -= ScalarQ::q_power(shift + 2 * base_sign * j) * Qp;
    r = r * f;
  }
  return r;
}

inline std::vector<LinearOp> gl_generators(int n) {
  std::vector<LinearOp> out;
  for (int i = 1; i <= n; ++i) {
    out.push_back(gl_operator(n, GlGenerator::k(i)));
    out.push_back(gl_operator(n, GlGenerator::k(i, -2)));
  }
  for (int i = 1; i < n; ++i) {
    out.push_back(gl_operator(n, GlGenerator::e(i)));
    out.push_back(gl_operator(n, GlGenerator::f(i)));
  }
  return out;
}

inline std::vector<GlGenerator> gl_generator_labels(int n) {
  std::vector<GlGenerator> out;
  for (int i = 1; i <= n; ++i) {
    out.push_back(GlGenerator::k(i));
    out.push_back(GlGenerator::k(i, -2));
  }
  for (int i = 1; i < n; ++i) {
    out.push_back(GlGenerator::e(i));
    out.push_back(GlGenerator::f(i));
  }
  return out;
}

}  // namespace detail

inline VerifyReport laplace_suite(int n, int max_degree, const OperatorSet& fx = {}) {
  SuiteBuilder b("laplace", suite_params(n, max_degree));
  const auto dom = monomials_up_to(n, max_degree);
  const LinearOp lap = fx.laplace(n);
  const LinearOp Qh = ops::q_hat(n);
  const NCPoly Q = q_radius(n);
  auto q = [](int k) { return ScalarQ::q_power(k); };
  const int kmax = std::max(1, max_degree);

  // Delta(Q^k) = q^{n-1} [k][k+n-1] Q^{k-1}
  {
    std::optional<json> cex;
    for (int k = 1; k <= kmax && !cex; ++k)
      cex = compare_polys(lap.apply(pow(Q, k)), (q(n - 1) * q_number(k) * q_number(k + n - 1)) * pow(Q, k - 1),
                          json{{"k", k}});
    b.check("laplace.radius_powers", "Delta_q(Q^k) = q^{n-1} Q^{k-1} [k][k+n-1]", json{{"n", n}, {"k_max", kmax}}, cex);
  }

  // [Delta, Q_hat^k] = q^{n-1} Q_hat^{k-1} [k] {q^{k+n-1} gamma bar_gamma}
  {
    const int kc = std::max(1, std::min(2, max_degree));
    std::vector<Instance> inst, eig;
    const LinearOp gg = ops::gamma_total(n) * ops::bar_gamma_total(n);
    const LinearOp gg_inv = ops::gamma_total(n, -2) * ops::bar_gamma_total(n, -2);
    for (int k = 1; k <= kc; ++k) {
      const LinearOp qk = Qh.pow(k);
      const LinearOp bracket = ((q(1) - q(-1)).inverse()) * (q(k + n - 1) * gg - q(-(k + n - 1)) * gg_inv);
      inst.push_back({json{{"k", k}}, lap * qk - qk * lap, (q(n - 1) * q_number(k)) * (Qh.pow(k - 1) * bracket)});
      const LinearOp diag = LinearOp::diagonal(
          n, Order::ZFirst, [k, n](const Monomial& m) { return q_number(k + n - 1 + m.m() + m.mp()); }, "[k+n-1+m+m']");
      eig.push_back({json{{"k", k}}, lap * qk - qk * lap, (q(n - 1) * q_number(k)) * (Qh.pow(k - 1) * diag)});
    }
    b.identities("laplace.commutator_with_radius", "Delta_q Q_hat^k - Q_hat^k Delta_q = q^{n-1} Q_hat^{k-1} [k] {q^{k+n-1} gamma bar_gamma}",
                 inst, dom, json{{"k_max", kc}});
    b.identities("laplace.commutator_on_bidegree",
                 "on A_{m,m'} the commutator is q^{n-1} [k][k+n-1+m+m'] Q_hat^{k-1}", eig, dom, json{{"k_max", kc}});
  }

  // Delta and Q_hat commute with the U_q(gl_n) action
  {
    std::vector<Instance> inst;
    const auto labels = detail::gl_generator_labels(n);
    const auto gens = detail::gl_generators(n);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      inst.push_back({json{{"operator", "Delta"}, {"generator", labels[g].name()}}, lap * gens[g], gens[g] * lap});
      inst.push_back({json{{"operator", "Q_hat"}, {"generator", labels[g].name()}}, Qh * gens[g], gens[g] * Qh});
    }
    b.identities("laplace.gl_invariance", "Delta_q and Q_hat commute with L(k_i^{+-1}), L(e_i), L(f_i)", inst, dom);
  }

  // Q is invariant: L(k)Q = Q, L(e)Q = L(f)Q = 0, and so is Q^k
  {
    std::optional<json> cex;
    const auto labels = detail::gl_generator_labels(n);
    for (int k = 1; k <= std::min(kmax, 2) && !cex; ++k) {
      const NCPoly Qk = pow(Q, k);
      for (const auto& g : labels) {
        const NCPoly want = g.kind == GlGenerator::Kind::K ? Qk : NCPoly(n);
        if ((cex = compare_polys(act_gl(g, Qk), want, json{{"k", k}, {"generator", g.name()}}))) break;
      }
    }
    b.check("laplace.radius_invariant", "Q^k is invariant under L(k_i^{+-1}) and killed by L(e_i), L(f_i)", json{{"n", n}},
            cex);
  }

  // Q central and both expansions of Q and Q_j
  {
    std::optional<json> cex;
    for (int i = 1; i <= n && !cex; ++i) {
      if ((cex = compare_polys(Q * NCPoly::z(n, i), NCPoly::z(n, i) * Q, json{{"i", i}, {"rule", "Q z = z Q"}}))) break;
      cex = compare_polys(Q * NCPoly::w(n, i), NCPoly::w(n, i) * Q, json{{"i", i}, {"rule", "Q w = w Q"}});
    }
    b.check("laplace.radius_central", "Q z_i = z_i Q and Q w_i = w_i Q", json{{"n", n}}, cex);

    std::optional<json> forms;
    for (int j = 1; j <= n && !forms; ++j) {
      NCPoly zw(n), wz(n);
      for (int i = 1; i <= j; ++i) {
        zw += NCPoly::z(n, i) * NCPoly::w(n, i);
        wz += q(2 * (j - i)) * (NCPoly::w(n, i) * NCPoly::z(n, i));
      }
      forms = compare_polys(zw, wz, json{{"j", j}});
    }
    b.check("laplace.radius_two_forms", "Q_j = sum_{i<=j} z_i w_i = sum_{i<=j} q^{2(j-i)} w_i z_i", json{{"n", n}}, forms);
  }

  // relations among the Q_j
  {
    std::optional<json> cex;
    for (int i = 1; i <= n && !cex; ++i) {
      const NCPoly zi = NCPoly::z(n, i), wi = NCPoly::w(n, i);
      const NCPoly Qi = q_radius(n, i), Qprev = q_radius(n, i - 1);
      if ((cex = compare_polys(zi * wi, Qi - Qprev, json{{"i", i}, {"rule", "z_i w_i = Q_i - Q_{i-1}"}}))) break;
      if ((cex = compare_polys(wi * zi, Qi - q(2) * Qprev, json{{"i", i}, {"rule", "w_i z_i = Q_i - q^2 Q_{i-1}"}})))
        break;
      for (int j = 1; j <= n && !cex; ++j) {
        const NCPoly Qj = q_radius(n, j);
        json at{{"i", i}, {"j", j}};
        if ((cex = compare_polys(Qj * Qi, Qi * Qj, at))) break;
        const ScalarQ cz = i > j ? q(-2) : ScalarQ(1), cw = i > j ? q(2) : ScalarQ(1);
        at["rule"] = "z_i Q_j";
        if ((cex = compare_polys(zi * Qj, cz * (Qj * zi), at))) break;
        at["rule"] = "w_i Q_j";
        cex = compare_polys(wi * Qj, cw * (Qj * wi), at);
      }
    }
    b.check("laplace.partial_radius_relations",
            "Q_j commute; z_i w_i, w_i z_i in terms of Q_i, Q_{i-1}; z_i, w_i against Q_j for i > j and i <= j",
            json{{"n", n}}, cex);
  }

  // z_i^k w_i^k = Q_i^k (Q_{i-1}/Q_i; q^-2)_k and w_i^k z_i^k = Q_i^k (q^2 Q_{i-1}/Q_i; q^2)_k
  {
    std::optional<json> cex;
    const int kp = std::min(3, kmax);
    for (int i = 1; i <= n && !cex; ++i)
      for (int k = 1; k <= kp && !cex; ++k) {
        const NCPoly zk = pow(NCPoly::z(n, i), k), wk = pow(NCPoly::w(n, i), k);
        if ((cex = compare_polys(zk * wk, detail::radius_product(n, i, k, 0, -1), json{{"i", i}, {"k", k}, {"form", "z^k w^k"}})))
          break;
        cex = compare_polys(wk * zk, detail::radius_product(n, i, k, 2, 1), json{{"i", i}, {"k", k}, {"form", "w^k z^k"}});
      }
    b.check("laplace.radius_product_identities", "z_i^k w_i^k and w_i^k z_i^k as q-shifted products in Q_{i-1}, Q_i",
            json{{"n", n}, {"k_max", kp}}, cex);
  }

  // Delta lowers the bidegree by (1, 1)
  {
    std::optional<json> cex;
    for (const auto& mono : dom) {
      const NCPoly img = lap.apply(NCPoly::monomial(n, mono));
      for (const auto& [m, mp] : img.bidegrees())
        if (m != mono.m() - 1 || mp != mono.mp() - 1) {
          cex = json{{"monomial", monomial_to_json(mono, n)}, {"image", img.to_string()}};
          break;
        }
      if (cex) break;
    }
    b.check("laplace.bidegree_shift", "Delta_q maps A_{m,m'} into A_{m-1,m'-1}", json{{"n", n}}, cex);
  }

  // negative control: the weight q^{2(i-1)} replaced by q^{2i}
  {
    const LinearOp bad = LinearOp(
        n, Order::ZFirst, Order::ZFirst,
        [n, q](const Monomial& m) { return q(2) * ops::laplace(n).apply_monomial(m); }, "q^2 Delta");
    std::optional<json> det;
    for (int k = 1; k <= kmax && !det; ++k)
      det = compare_polys(bad.apply(pow(Q, k)), (q(n - 1) * q_number(k) * q_number(k + n - 1)) * pow(Q, k - 1),
                          json{{"k", k}});
    b.control("control.laplace_wrong_weight", "a Laplacian with weights q^{2i} must break the radial power formula",
              json{{"n", n}}, det);
  }
  return b.finish();
}

}  // namespace qharm::verify
