// Component relations among z_hat, w_hat, d, bar_d and the gradation
// operators, their R-matrix forms, the q-Weyl relations and the tensor
// operator property.
#pragma once

#include <string>
#include <vector>

#include "qharm/verify/report.hpp"

namespace qharm::verify {

namespace rmatrix {

inline ScalarQ q(int k) { return ScalarQ::q_power(k); }
inline ScalarQ q_minus_qinv() { return q(1) - q(-1); }

/// R^{ij}_{kl} = q^{d_ij} d_il d_jk + (q - q^{-1}) d_ik d_jl [j > i].
inline ScalarQ R(int i, int j, int k, int l) {
  ScalarQ r;
  if (i == l && j == k) r += q(i == j ? 1 : 0);
  if (i == k && j == l && j > i) r += q_minus_qinv();
  return r;
}

/// (R^{-1})^{ij}_{kl} = q^{-d_ij} d_il d_jk - (q - q^{-1}) d_ik d_jl [i > j].
inline ScalarQ R_inv(int i, int j, int k, int l) {
  ScalarQ r;
  if (i == l && j == k) r += q(i == j ? -1 : 0);
  if (i == k && j == l && i > j) r -= q_minus_qinv();
  return r;
}

/// Phi^{ij}_{kl} = R^{ji}_{lk} q^{2(i-l)}.
inline ScalarQ Phi(int i, int j, int k, int l) { return R(j, i, l, k) * q(2 * (i - l)); }

inline ScalarQ delta(int a, int b) { return ScalarQ(a == b ? 1 : 0); }

}  // namespace rmatrix

inline VerifyReport relations_suite(int n, int max_degree, const OperatorSet& fx = {}) {
  using namespace rmatrix;
  SuiteBuilder b("relations", suite_params(n, max_degree));
  const auto dom = monomials_up_to(n, max_degree);
  auto Z = [&](int i) { return ops::z_hat(n, i); };
  auto W = [&](int i) { return ops::w_hat(n, i); };
  auto D = [&](int i) { return fx.partial(n, i); };
  auto B = [&](int i) { return fx.bar_partial(n, i); };
  const LinearOp G = ops::gamma_total(n), Gi = ops::gamma_total(n, -2);
  const LinearOp Gb = ops::bar_gamma_total(n), Gbi = ops::bar_gamma_total(n, -2);
  const LinearOp one = LinearOp::identity(n);
  const ScalarQ dq = q_minus_qinv();
  auto ij = [](int i, int j) { return json{{"i", i}, {"j", j}}; };
  auto ii = [](int i) { return json{{"i", i}}; };

  // --- component relations --------------------------------------------
  {
    std::vector<Instance> dd, bb, bd_off, bd_diag, db_diag;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i < j) {
          dd.push_back({ij(i, j), D(i) * D(j), q(-1) * (D(j) * D(i))});
          bb.push_back({ij(i, j), B(i) * B(j), q(1) * (B(j) * B(i))});
        }
        if (i != j) bd_off.push_back({ij(i, j), B(i) * D(j), q(1) * (D(j) * B(i))});
      }
    for (int i = 1; i <= n; ++i) {
      std::vector<std::pair<ScalarQ, LinearOp>> s1{{ScalarQ(1), D(i) * B(i)}}, s2{{ScalarQ(1), B(i) * D(i)}};
      for (int k = i + 1; k <= n; ++k) {
        s1.push_back({ScalarQ(1) - q(2), D(k) * B(k)});
        s2.push_back({(ScalarQ(1) - q(-2)) * q(2 * (k - i)), B(k) * D(k)});
      }
      bd_diag.push_back({ii(i), B(i) * D(i), op_sum(n, s1)});
      db_diag.push_back({ii(i), D(i) * B(i), op_sum(n, s2)});
    }
    b.identities("relations.partial_partial", "d_i d_j = q^-1 d_j d_i for i < j", dd, dom);
    b.identities("relations.bar_partial_bar_partial", "bar_d_i bar_d_j = q bar_d_j bar_d_i for i < j", bb, dom);
    b.identities("relations.bar_partial_partial_offdiag", "bar_d_i d_j = q d_j bar_d_i for i != j", bd_off, dom);
    b.identities("relations.bar_partial_partial_diag",
                 "bar_d_i d_i = d_i bar_d_i + (1 - q^2) sum_{k>i} d_k bar_d_k", bd_diag, dom);
    b.identities("relations.partial_bar_partial_diag",
                 "d_i bar_d_i = bar_d_i d_i + (1 - q^-2) sum_{k>i} q^{2(k-i)} bar_d_k d_k", db_diag, dom);
  }
  {
    std::vector<Instance> dw_diag, dw_mixed, dw_upper, bz_diag, bz_mixed, bz_upper, dz_off, bw_off;
    for (int i = 1; i <= n; ++i) {
      dw_diag.push_back({ii(i), D(i) * W(i), W(i) * D(i)});
      bz_diag.push_back({ii(i), B(i) * Z(i), Z(i) * B(i)});
      for (int j = 1; j <= n; ++j) {
        if (i < j) {
          dw_mixed.push_back({ij(i, j), D(i) * W(j) - q(1) * (W(j) * D(i)), (ScalarQ(1) - q(2)) * (W(i) * D(j))});
          dw_upper.push_back({ij(i, j), D(j) * W(i), q(1) * (W(i) * D(j))});
          bz_mixed.push_back({ij(i, j), B(i) * Z(j) - q(-1) * (Z(j) * B(i)),
                              ((ScalarQ(1) - q(-2)) * q(2 * (j - i))) * (Z(i) * B(j))});
          bz_upper.push_back({ij(i, j), B(j) * Z(i), q(-1) * (Z(i) * B(j))});
        }
        if (i != j) {
          dz_off.push_back({ij(i, j), D(i) * Z(j), Z(j) * D(i)});
          bw_off.push_back({ij(i, j), B(i) * W(j), W(j) * B(i)});
        }
      }
    }
    b.identities("relations.partial_w_diag", "d_i w_i = w_i d_i", dw_diag, dom);
    b.identities("relations.partial_w_mixed", "d_i w_j - q w_j d_i = (1 - q^2) w_i d_j for i < j", dw_mixed, dom);
    b.identities("relations.partial_w_upper", "d_j w_i = q w_i d_j for i < j", dw_upper, dom);
    b.identities("relations.bar_partial_z_diag", "bar_d_i z_i = z_i bar_d_i", bz_diag, dom);
    b.identities("relations.bar_partial_z_mixed",
                 "bar_d_i z_j - q^-1 z_j bar_d_i = (1 - q^-2) q^{2(j-i)} z_i bar_d_j for i < j", bz_mixed, dom);
    b.identities("relations.bar_partial_z_upper", "bar_d_j z_i = q^-1 z_i bar_d_j for i < j", bz_upper, dom);
    b.identities("relations.partial_z_offdiag", "d_i z_j = z_j d_i for i != j", dz_off, dom);
    b.identities("relations.bar_partial_w_offdiag", "bar_d_i w_j = w_j bar_d_i for i != j", bw_off, dom);
  }
  {
    std::vector<Instance> dz_up, dz_low, bw_low, bw_up;
    for (int i = 1; i <= n; ++i) {
      std::vector<std::pair<ScalarQ, LinearOp>> a{{q(1), Z(i) * D(i)}, {ScalarQ(1), Gi}};
      std::vector<std::pair<ScalarQ, LinearOp>> c{{q(-1), Z(i) * D(i)}, {ScalarQ(1), G}};
      std::vector<std::pair<ScalarQ, LinearOp>> e{{q(1), W(i) * B(i)}, {ScalarQ(1), Gbi}};
      std::vector<std::pair<ScalarQ, LinearOp>> f{{q(-1), W(i) * B(i)}, {ScalarQ(1), Gb}};
      for (int k = 1; k <= n; ++k) {
        if (k > i) a.push_back({dq, Z(k) * D(k)});
        if (k < i) c.push_back({-dq, Z(k) * D(k)});
        if (k < i) e.push_back({dq, W(k) * B(k)});
        if (k > i) f.push_back({-dq, W(k) * B(k)});
      }
      dz_up.push_back({ii(i), D(i) * Z(i), op_sum(n, a)});
      dz_low.push_back({ii(i), D(i) * Z(i), op_sum(n, c)});
      bw_low.push_back({ii(i), B(i) * W(i), op_sum(n, e)});
      bw_up.push_back({ii(i), B(i) * W(i), op_sum(n, f)});
    }
    b.identities("relations.partial_z_diag_upper_sum",
                 "d_i z_i = q z_i d_i + (q - q^-1) sum_{k>i} z_k d_k + gamma^-1", dz_up, dom);
    b.identities("relations.partial_z_diag_lower_sum",
                 "d_i z_i = q^-1 z_i d_i - (q - q^-1) sum_{k<i} z_k d_k + gamma", dz_low, dom);
    b.identities("relations.bar_partial_w_diag_lower_sum",
                 "bar_d_i w_i = q w_i bar_d_i + (q - q^-1) sum_{k<i} w_k bar_d_k + bar_gamma^-1", bw_low, dom);
    b.identities("relations.bar_partial_w_diag_upper_sum",
                 "bar_d_i w_i = q^-1 w_i bar_d_i - (q - q^-1) sum_{k>i} w_k bar_d_k + bar_gamma", bw_up, dom);
  }

  // --- Euler operators and gradations ------------------------------------
  {
    std::vector<std::pair<ScalarQ, LinearOp>> e, eb;
    for (int k = 1; k <= n; ++k) {
      e.push_back({ScalarQ(1), Z(k) * D(k)});
      eb.push_back({ScalarQ(1), W(k) * B(k)});
    }
    b.identities("relations.euler", "sum_k z_k d_k = {gamma}", {{json::object(), op_sum(n, e), ops::gamma_bracket(n)}}, dom);
    b.identities("relations.bar_euler", "sum_k w_k bar_d_k = {bar_gamma}",
                 {{json::object(), op_sum(n, eb), ops::bar_gamma_bracket(n)}}, dom);
  }
  {
    std::vector<Instance> g;
    for (int i = 1; i <= n; ++i) {
      g.push_back({json{{"i", i}, {"rule", "gamma z"}}, G * Z(i), q(1) * (Z(i) * G)});
      g.push_back({json{{"i", i}, {"rule", "gamma w"}}, G * W(i), W(i) * G});
      g.push_back({json{{"i", i}, {"rule", "bar_gamma z"}}, Gb * Z(i), Z(i) * Gb});
      g.push_back({json{{"i", i}, {"rule", "bar_gamma w"}}, Gb * W(i), q(1) * (W(i) * Gb)});
      g.push_back({json{{"i", i}, {"rule", "gamma d"}}, G * D(i), q(-1) * (D(i) * G)});
      g.push_back({json{{"i", i}, {"rule", "gamma bar_d"}}, G * B(i), B(i) * G});
      g.push_back({json{{"i", i}, {"rule", "bar_gamma d"}}, Gb * D(i), D(i) * Gb});
      g.push_back({json{{"i", i}, {"rule", "bar_gamma bar_d"}}, Gb * B(i), q(-1) * (B(i) * Gb)});
    }
    b.identities("relations.gradation_commutation", "gamma and bar_gamma against z, w, d, bar_d", g, dom);
    const LinearOp gm = LinearOp::diagonal(n, Order::ZFirst, [](const Monomial& m) { return q(m.m()); }, "q^m");
    const LinearOp gmp = LinearOp::diagonal(n, Order::ZFirst, [](const Monomial& m) { return q(m.mp()); }, "q^m'");
    b.identities("relations.gradation_eigenvalues", "gamma = q^m and bar_gamma = q^m' on A_{m,m'}",
                 {{json{{"operator", "gamma"}}, G, gm}, {json{{"operator", "bar_gamma"}}, Gb, gmp}}, dom);
  }

  // --- q-Weyl and q^-1-Weyl algebras ---------------------------------------
  {
    auto Dp = [&](int i) { return G * D(i); };
    auto Bp = [&](int i) { return Gbi * B(i); };
    std::vector<Instance> zz, dd, dz, dzd, ww, bb, bw, bwd;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i < j) {
          zz.push_back({ij(i, j), Z(i) * Z(j), q(1) * (Z(j) * Z(i))});
          dd.push_back({ij(i, j), Dp(i) * Dp(j), q(-1) * (Dp(j) * Dp(i))});
          ww.push_back({ij(i, j), W(i) * W(j), q(-1) * (W(j) * W(i))});
          bb.push_back({ij(i, j), Bp(i) * Bp(j), q(1) * (Bp(j) * Bp(i))});
        }
        if (i != j) {
          dz.push_back({ij(i, j), Dp(i) * Z(j), q(1) * (Z(j) * Dp(i))});
          bw.push_back({ij(i, j), Bp(i) * W(j), q(-1) * (W(j) * Bp(i))});
        }
      }
    for (int i = 1; i <= n; ++i) {
      std::vector<std::pair<ScalarQ, LinearOp>> r{{ScalarQ(1), one}}, rb{{ScalarQ(1), one}};
      for (int j = i + 1; j <= n; ++j) {
        r.push_back({q(2) - ScalarQ(1), Z(j) * Dp(j)});
        rb.push_back({q(-2) - ScalarQ(1), W(j) * Bp(j)});
      }
      dzd.push_back({ii(i), Dp(i) * Z(i) - q(2) * (Z(i) * Dp(i)), op_sum(n, r)});
      bwd.push_back({ii(i), Bp(i) * W(i) - q(-2) * (W(i) * Bp(i)), op_sum(n, rb)});
    }
    b.identities("relations.weyl_z_z", "z_i z_j = q z_j z_i for i < j", zz, dom);
    b.identities("relations.weyl_dprime_dprime", "d'_i d'_j = q^-1 d'_j d'_i for i < j, d' = gamma d", dd, dom);
    b.identities("relations.weyl_dprime_z_offdiag", "d'_i z_j = q z_j d'_i for i != j", dz, dom);
    b.identities("relations.weyl_dprime_z_diag", "d'_i z_i - q^2 z_i d'_i = 1 + (q^2 - 1) sum_{j>i} z_j d'_j", dzd, dom);
    b.identities("relations.inverse_weyl_w_w", "w_i w_j = q^-1 w_j w_i for i < j", ww, dom);
    b.identities("relations.inverse_weyl_bprime_bprime",
                 "bar_d'_i bar_d'_j = q bar_d'_j bar_d'_i for i < j, bar_d' = bar_gamma^-1 bar_d", bb, dom);
    b.identities("relations.inverse_weyl_bprime_w_offdiag", "bar_d'_i w_j = q^-1 w_j bar_d'_i for i != j", bw, dom);
    b.identities("relations.inverse_weyl_bprime_w_diag",
                 "bar_d'_i w_i - q^-2 w_i bar_d'_i = 1 + (q^-2 - 1) sum_{j>i} w_j bar_d'_j", bwd, dom);
  }

  // --- R-matrix forms ---------------------------------------------------------
  {
    std::vector<Instance> zz, ww, wz, dd, bb, db, dw, bz, dzp, dzm, bwp, bwm;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        std::vector<std::pair<ScalarQ, LinearOp>> s_zz, s_ww, s_wz, s_dd, s_bb, s_db, s_dw, s_bz, s_dzp, s_dzm,
            s_bwp, s_bwm;
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) {
            s_zz.push_back({q(-1) * R(k, l, i, j), Z(k) * Z(l)});
            s_ww.push_back({q(-1) * R(j, i, l, k), W(k) * W(l)});
            s_wz.push_back({q(1) * R_inv(i, k, j, l), Z(k) * W(l)});
            s_dd.push_back({q(-1) * R(j, i, l, k), D(k) * D(l)});
            s_bb.push_back({q(-1) * R(k, l, i, j), B(k) * B(l)});
            s_db.push_back({q(-1) * Phi(k, i, l, j), B(k) * D(l)});
            s_dw.push_back({q(1) * R_inv(j, i, l, k), W(k) * D(l)});
            s_bz.push_back({q(1) * Phi(l, k, j, i), Z(k) * B(l)});
            s_dzp.push_back({R(i, k, j, l), Z(k) * D(l)});
            s_dzm.push_back({R_inv(i, k, j, l), Z(k) * D(l)});
            s_bwp.push_back({R(l, j, k, i), W(k) * B(l)});
            s_bwm.push_back({R_inv(l, j, k, i), W(k) * B(l)});
          }
        if (i == j) {
          s_dzp.push_back({ScalarQ(1), Gi});
          s_dzm.push_back({ScalarQ(1), G});
          s_bwp.push_back({ScalarQ(1), Gbi});
          s_bwm.push_back({ScalarQ(1), Gb});
        }
        zz.push_back({ij(i, j), Z(i) * Z(j), op_sum(n, s_zz)});
        ww.push_back({ij(i, j), W(i) * W(j), op_sum(n, s_ww)});
        wz.push_back({ij(i, j), W(i) * Z(j), op_sum(n, s_wz)});
        dd.push_back({ij(i, j), D(i) * D(j), op_sum(n, s_dd)});
        bb.push_back({ij(i, j), B(i) * B(j), op_sum(n, s_bb)});
        db.push_back({ij(i, j), D(i) * B(j), op_sum(n, s_db)});
        dw.push_back({ij(i, j), D(i) * W(j), op_sum(n, s_dw)});
        bz.push_back({ij(i, j), B(i) * Z(j), op_sum(n, s_bz)});
        dzp.push_back({ij(i, j), D(i) * Z(j), op_sum(n, s_dzp)});
        dzm.push_back({ij(i, j), D(i) * Z(j), op_sum(n, s_dzm)});
        bwp.push_back({ij(i, j), B(i) * W(j), op_sum(n, s_bwp)});
        bwm.push_back({ij(i, j), B(i) * W(j), op_sum(n, s_bwm)});
      }
    b.identities("relations.rmatrix_z_z", "z_i z_j = q^-1 R^{kl}_{ij} z_k z_l", zz, dom);
    b.identities("relations.rmatrix_w_w", "w_i w_j = q^-1 R^{ji}_{lk} w_k w_l", ww, dom);
    b.identities("relations.rmatrix_w_z", "w_i z_j = q (R^-1)^{ik}_{jl} z_k w_l", wz, dom);
    b.identities("relations.rmatrix_partial_partial", "d_i d_j = q^-1 R^{ji}_{lk} d_k d_l", dd, dom);
    b.identities("relations.rmatrix_bar_partial_bar_partial", "bar_d_i bar_d_j = q^-1 R^{kl}_{ij} bar_d_k bar_d_l", bb,
                 dom);
    b.identities("relations.rmatrix_partial_bar_partial", "d_i bar_d_j = q^-1 Phi^{ki}_{lj} bar_d_k d_l", db, dom);
    b.identities("relations.rmatrix_partial_w", "d_i w_j = q (R^-1)^{ji}_{lk} w_k d_l", dw, dom);
    b.identities("relations.rmatrix_bar_partial_z", "bar_d_i z_j = q Phi^{lk}_{ji} z_k bar_d_l", bz, dom);
    std::vector<Instance> bz_fixed;
    for (const auto& inst : bz) bz_fixed.push_back({inst.params, inst.lhs, q(-2) * inst.rhs});
    b.identities("relations.rmatrix_bar_partial_z_with_inverse_prefactor",
                 "bar_d_i z_j = q^-1 Phi^{lk}_{ji} z_k bar_d_l (prefactor q^-1 in place of q)", bz_fixed, dom);
    b.identities("relations.rmatrix_partial_z_plus", "d_i z_j = gamma^-1 delta_ij + R^{ik}_{jl} z_k d_l", dzp, dom);
    b.identities("relations.rmatrix_partial_z_minus", "d_i z_j = gamma delta_ij + (R^-1)^{ik}_{jl} z_k d_l", dzm, dom);
    b.identities("relations.rmatrix_bar_partial_w_plus",
                 "bar_d_i w_j = bar_gamma^-1 delta_ij + R^{lj}_{ki} w_k bar_d_l", bwp, dom);
    b.identities("relations.rmatrix_bar_partial_w_minus",
                 "bar_d_i w_j = bar_gamma delta_ij + (R^-1)^{lj}_{ki} w_k bar_d_l", bwm, dom);
  }

  // --- scalar identities of R and Phi -----------------------------------------
  {
    std::optional<json> inv_cex, tr_cex, wtr_cex;
    for (int u = 1; u <= n && !inv_cex; ++u)
      for (int p = 1; p <= n && !inv_cex; ++p)
        for (int i = 1; i <= n && !inv_cex; ++i)
          for (int k = 1; k <= n && !inv_cex; ++k) {
            ScalarQ a, c;
            for (int j = 1; j <= n; ++j)
              for (int l = 1; l <= n; ++l) {
                a += Phi(u, l, p, j) * R_inv(j, i, l, k);
                c += R_inv(u, l, p, j) * Phi(j, i, l, k);
              }
            const ScalarQ want = delta(u, p) * delta(i, k);
            if (!(a == want) || !(c == want))
              inv_cex = json{{"u", u}, {"p", p}, {"i", i}, {"k", k}, {"phi_rinv", a.to_string()},
                             {"rinv_phi", c.to_string()}, {"expected", want.to_string()}};
          }
    b.check("relations.phi_inverts_rmatrix", "sum_{j,l} Phi^{ul}_{pj} (R^-1)^{ji}_{lk} = delta_up delta_ik and the mirrored product",
            json{{"n", n}}, inv_cex);
    std::optional<json> cross_cex;
    for (int u = 1; u <= n && !cross_cex; ++u)
      for (int p = 1; p <= n && !cross_cex; ++p)
        for (int i = 1; i <= n && !cross_cex; ++i)
          for (int k = 1; k <= n && !cross_cex; ++k) {
            ScalarQ a, c;
            for (int j = 1; j <= n; ++j)
              for (int l = 1; l <= n; ++l) {
                a += Phi(u, l, p, j) * R_inv(j, i, l, k);
                c += R_inv(u, l, p, j) * Phi(j, i, l, k);
              }
            const ScalarQ want = delta(u, k) * delta(p, i);
            if (!(a == want) || !(c == want))
              cross_cex = json{{"u", u}, {"p", p}, {"i", i}, {"k", k}, {"phi_rinv", a.to_string()},
                               {"rinv_phi", c.to_string()}, {"expected", want.to_string()}};
          }
    b.check("relations.phi_inverts_rmatrix_crossed_pairing",
            "both contractions of Phi with R^-1 equal delta_uk delta_pi", json{{"n", n}}, cross_cex);
    for (int i = 1; i <= n && !tr_cex; ++i)
      for (int k = 1; k <= n && !tr_cex; ++k) {
        ScalarQ a, c;
        for (int l = 1; l <= n; ++l) a += Phi(l, i, l, k);
        for (int kk = 1; kk <= n; ++kk) c += Phi(i, kk, k, kk);
        if (auto x = compare_scalars(a, delta(i, k) * q(2 * (n - i) + 1), json{{"trace", "first"}, {"i", i}, {"k", k}}))
          tr_cex = x;
        else if (auto y = compare_scalars(c, delta(i, k) * q(2 * k - 1), json{{"trace", "second"}, {"j", i}, {"l", k}}))
          tr_cex = y;
      }
    b.check("relations.phi_partial_traces",
            "sum_l Phi^{li}_{lk} = delta_ik q^{2(n-i)+1} and sum_k Phi^{jk}_{lk} = delta_jl q^{2l-1}", json{{"n", n}},
            tr_cex);
    for (int r = 1; r <= n && !wtr_cex; ++r)
      for (int s = 1; s <= n && !wtr_cex; ++s) {
        ScalarQ a, c;
        for (int i = 1; i <= n; ++i) a += q(2 * (n - i)) * R(i, r, i, s);
        for (int l = 1; l <= n; ++l) c += q(2 * l - 2) * R_inv(r, l, s, l);
        if (auto x = compare_scalars(a, q(2 * n - 1) * delta(r, s), json{{"trace", "R"}, {"r", r}, {"s", s}}))
          wtr_cex = x;
        else if (auto y = compare_scalars(c, q(-1) * delta(r, s), json{{"trace", "R^-1"}, {"u", r}, {"p", s}}))
          wtr_cex = y;
      }
    b.check("relations.rmatrix_weighted_traces",
            "sum_i q^{2(n-i)} R^{ir}_{is} = q^{2n-1} delta_rs and sum_l q^{2l-2} (R^-1)^{ul}_{pl} = q^-1 delta_up",
            json{{"n", n}}, wtr_cex);
  }

  // --- Laplace operator forms ----------------------------------------------------
  {
    std::vector<std::pair<ScalarQ, LinearOp>> a, c;
    for (int i = 1; i <= n; ++i) {
      a.push_back({ScalarQ(1), D(i) * B(i)});
      c.push_back({q(2 * (i - 1)), B(i) * D(i)});
    }
    const LinearOp lap = fx.laplace(n);
    b.identities("relations.laplace_two_forms", "sum_i d_i bar_d_i = sum_i q^{2(i-1)} bar_d_i d_i = Delta_q",
                 {{json{{"form", "d bar_d"}}, op_sum(n, a), lap}, {json{{"form", "bar_d d"}}, op_sum(n, c), lap}}, dom);
    b.identities("relations.laplace_gradation", "gamma Delta = q^-1 Delta gamma and bar_gamma Delta = q^-1 Delta bar_gamma",
                 {{json{{"gradation", "gamma"}}, G * lap, q(-1) * (lap * G)},
                  {json{{"gradation", "bar_gamma"}}, Gb * lap, q(-1) * (lap * Gb)}},
                 dom);
  }

  // --- U_q(gl_n) action: tensor form and covariance ------------------------------
  if (n >= 2) {
    auto tensor = [n](const LinearOp& x, const LinearOp& y, std::string name) {
      return LinearOp(
          n, Order::ZFirst, Order::ZFirst,
          [n, x, y](const Monomial& m) {
            const NCPoly zp = NCPoly::monomial(n, Monomial{m.z, Exps{}});
            const NCPoly wp = NCPoly::monomial(n, Monomial{Exps{}, m.w});
            return x.apply(zp).to_order(Order::ZFirst) * y.apply(wp).to_order(Order::ZFirst);
          },
          std::move(name));
    };
    auto g = [n](int i, int h) { return ops::gamma(n, i, h); };
    auto gb = [n](int i, int h) { return ops::bar_gamma(n, i, h); };
    std::vector<Instance> inst;
    for (int i = 1; i <= n; ++i)
      inst.push_back({json{{"generator", "k"}, {"i", i}}, gl_operator(n, GlGenerator::k(i)),
                      tensor(g(i, 2), gb(i, -2), "L(k)")});
    for (int i = 1; i < n; ++i) {
      const LinearOp le = ScalarQ::v_power(-1) * tensor(g(i, 1) * g(i + 1, 1) * ops::z_breve(n, i) * D(i + 1),
                                                       gb(i, 1) * gb(i + 1, -1), "L(e) first") -
                          ScalarQ::v_power(-3) * tensor(g(i, 1) * g(i + 1, -1),
                                                       gb(i, 1) * gb(i + 1, 1) * ops::w_breve(n, i + 1) * B(i),
                                                       "L(e) second");
      const LinearOp lf = ScalarQ::v_power(1) * tensor(g(i, -1) * g(i + 1, -1) * ops::z_breve(n, i + 1) * D(i),
                                                      gb(i, 1) * gb(i + 1, -1), "L(f) first") -
                          ScalarQ::v_power(3) * tensor(g(i, 1) * g(i + 1, -1),
                                                      gb(i, -1) * gb(i + 1, -1) * ops::w_breve(n, i) * B(i + 1),
                                                      "L(f) second");
      inst.push_back({json{{"generator", "e"}, {"i", i}}, gl_operator(n, GlGenerator::e(i)), le});
      inst.push_back({json{{"generator", "f"}, {"i", i}}, gl_operator(n, GlGenerator::f(i)), lf});
    }
    b.identities("relations.gl_action_tensor_form",
                 "L(k_i), L(e_i), L(f_i) written on A_z (x) A_w agree with the coproduct action", inst, dom);

    // X |> T = X_(1) T S(X_(2)) for T in {z_hat, w_hat, d, bar_d}
    const auto adj_dom = monomials_up_to(n, std::min(max_degree, 2));
    const LinearOp zero = LinearOp::zero(n);
    auto pick = [&](int kind, int j) -> LinearOp {
      if (j < 1 || j > n) return zero;
      switch (kind) {
        case 0: return Z(j);
        case 1: return W(j);
        case 2: return D(j);
        default: return B(j);
      }
    };
    const char* names[] = {"z", "w", "d", "bar_d"};
    // k-eigenvalue exponent sign, e and f targets with their coefficients
    struct Rule {
      int k_sign;
      int e_shift, e_when;  // e_i T_j = c T_{j+e_shift} when j == i + e_when
      ScalarQ e_coeff;
      int f_shift, f_when;
      ScalarQ f_coeff;
    };
    const Rule rules[] = {
        {+1, -1, 1, ScalarQ(1), +1, 0, ScalarQ(1)},
        {-1, +1, 0, -q(-1), -1, 1, -q(1)},
        {-1, +1, 0, -q(-1), -1, 1, -q(1)},
        {+1, -1, 1, q(-2), +1, 0, q(2)},
    };
    for (int kind = 0; kind < 4; ++kind) {
      std::vector<Instance> cov;
      const Rule& r = rules[kind];
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          const LinearOp K = gl_operator(n, GlGenerator::k(i)), Ki = gl_operator(n, GlGenerator::k(i, -2));
          cov.push_back({json{{"generator", "k"}, {"i", i}, {"j", j}}, K * pick(kind, j) * Ki,
                         q(r.k_sign * (i == j ? 1 : 0)) * pick(kind, j)});
        }
      for (int i = 1; i < n; ++i) {
        const LinearOp Kp = gl_operator(n, GlGenerator::k(i, 1)) * gl_operator(n, GlGenerator::k(i + 1, -1));
        const LinearOp Km = gl_operator(n, GlGenerator::k(i, -1)) * gl_operator(n, GlGenerator::k(i + 1, 1));
        const LinearOp E = gl_operator(n, GlGenerator::e(i)), F = gl_operator(n, GlGenerator::f(i));
        auto ad = [&](const LinearOp& X, const LinearOp& T) { return X * T * Kp - Kp * T * Km * X * Kp; };
        for (int j = 1; j <= n; ++j) {
          const LinearOp T = pick(kind, j);
          cov.push_back({json{{"generator", "e"}, {"i", i}, {"j", j}}, ad(E, T),
                         j == i + r.e_when ? r.e_coeff * pick(kind, j + r.e_shift) : zero});
          cov.push_back({json{{"generator", "f"}, {"i", i}, {"j", j}}, ad(F, T),
                         j == i + r.f_when ? r.f_coeff * pick(kind, j + r.f_shift) : zero});
        }
      }
      b.identities(std::string("relations.tensor_operator_") + names[kind],
                   std::string("adjoint action of k_i, e_i, f_i on ") + names[kind] +
                       "_j reproduces the action on the generators",
                   cov, adj_dom);
    }
  }

  // --- negative control ----------------------------------------------------------
  {
    const LinearOp bad = q(1) * D(1);
    std::vector<std::pair<ScalarQ, LinearOp>> a{{q(1), Z(1) * bad}, {ScalarQ(1), Gi}};
    for (int k = 2; k <= n; ++k) a.push_back({dq, Z(k) * D(k)});
    b.control("control.rescaled_partial", "d_1 replaced by q d_1 must break d_1 z_1 = q z_1 d_1 + ... + gamma^-1",
              json{{"n", n}}, compare_ops(bad * Z(1), op_sum(n, a), dom));
  }
  return b.finish();
}

}  // namespace qharm::verify
