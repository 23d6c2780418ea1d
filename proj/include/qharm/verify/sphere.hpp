// The functional h, its Jackson-integral form, the scalar product and
// restriction to the sphere.
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "qharm/numeric.hpp"
#include "qharm/sphere.hpp"
#include "qharm/verify/laplace.hpp"

namespace qharm::verify {

namespace detail {

/// Zero-weight monomials z^mu w^mu (z-first) and w^mu z^mu (w-first) with |mu| <= d.
inline std::vector<NCPoly> zero_weight_monomials(int n, int d) {
  std::vector<NCPoly> out;
  for (int m = 0; m <= d; ++m)
    for (const auto& e : compositions(n, m)) {
      out.push_back(NCPoly::monomial(n, Monomial{e, e}));
      if (m > 0) out.push_back(NCPoly::monomial(n, Monomial{e, e}, ScalarQ(1), Order::WFirst));
    }
  return out;
}

inline ScalarQ h_by_jackson(const NCPoly& p) {
  return h_jackson(p.n(), restrict_top_radius(zero_weight_to_Q(p.zero_weight_part())));
}

}  // namespace detail

inline VerifyReport sphere_suite(int n, int max_degree) {
  SuiteBuilder b("sphere", suite_params(n, max_degree));
  auto q = [](int k) { return ScalarQ::q_power(k); };
  const mpq_class q0(7, 10);

  // printed values
  {
    std::optional<json> cex = compare_scalars(h_functional(NCPoly::constant(n, ScalarQ(1))), ScalarQ(1), json{{"case", "h(1)"}});
    if (!cex) cex = compare_scalars(h_functional(NCPoly::z(n, 1)), ScalarQ(0), json{{"case", "h(z_1)"}});
    if (!cex && n == 2)
      cex = compare_scalars(h_functional(NCPoly::w(2, 1) * NCPoly::z(2, 1)), (ScalarQ(1) + q(2)).inverse(),
                            json{{"case", "h(w_1 z_1), n = 2"}});
    if (!cex) {
      const NCPoly Q = q_radius(n);
      for (int k = 1; k <= std::max(1, max_degree) && !cex; ++k)
        cex = compare_scalars(h_functional(pow(Q, k)), ScalarQ(1), json{{"case", "h(Q^k)"}, {"k", k}});
    }
    b.check("sphere.h_values", "h(1) = 1, h(z_1) = 0, h(w_1 z_1) = 1/(1+q^2) at n = 2, h(Q^k) = 1", json{{"n", n}}, cex);
  }
  {
    std::optional<json> cex;
    if (n == 2) {
      const ScalarQ one(1);
      cex = compare_scalars(h_jackson(2, QPoly{{{0}, one}}), one, json{{"f", "1"}});
      if (!cex) cex = compare_scalars(h_jackson(2, QPoly{{{1}, one}}), (one + q(2)).inverse(), json{{"f", "Q_1"}});
      if (!cex)
        cex = compare_scalars(h_jackson(2, QPoly{{{2}, one}}), (one - q(2)) / (one - q(6)), json{{"f", "Q_1^2"}});
      const NCPoly z1w1 = NCPoly::z(2, 1) * NCPoly::w(2, 1), z2w2 = NCPoly::z(2, 2) * NCPoly::w(2, 2);
      auto same = [](const QPoly& a, const QPoly& c) { return a == c; };
      if (!cex && !same(zero_weight_to_Q(z1w1), QPoly{{{1, 0}, one}})) cex = json{{"case", "z_1 w_1 -> Q_1"}};
      if (!cex && !same(zero_weight_to_Q(z2w2), QPoly{{{0, 1}, one}, {{1, 0}, -one}}))
        cex = json{{"case", "z_2 w_2 -> Q_2 - Q_1"}};
      if (!cex && !same(zero_weight_to_Q(NCPoly::w(2, 2) * NCPoly::z(2, 2)), QPoly{{{0, 1}, one}, {{1, 0}, -q(2)}}))
        cex = json{{"case", "w_2 z_2 -> Q_2 - q^2 Q_1"}};
    }
    b.check("sphere.jackson_values", "Jackson integrals of 1, Q_1, Q_1^2 and the Q_j expansions of z_i w_i, w_i z_i (n = 2)",
            json{{"n", n}}, cex);
  }

  // dual oracle on zero-weight monomials of both orders
  {
    std::optional<json> cex;
    for (const auto& p : detail::zero_weight_monomials(n, max_degree))
      if ((cex = compare_scalars(h_functional(p), detail::h_by_jackson(p),
                                 json{{"monomial", p.to_string()}, {"order", order_name(p.order())}})))
        break;
    b.check("sphere.h_dual_oracle", "the monomial formula for h equals the Jackson integral on zero-weight monomials",
            json{{"n", n}, {"max_degree", max_degree}}, cex);
  }

  // h is U_q(gl_n) invariant: h(k a) = h(a), h(e a) = h(f a) = 0
  {
    std::optional<json> cex;
    const auto labels = detail::gl_generator_labels(n);
    for (const auto& mono : monomials_up_to(n, max_degree)) {
      const NCPoly a = NCPoly::monomial(n, mono);
      const ScalarQ ha = h_functional(a);
      for (const auto& g : labels) {
        const ScalarQ want = g.kind == GlGenerator::Kind::K ? ha : ScalarQ(0);
        if ((cex = compare_scalars(h_functional(act_gl(g, a)), want, json{{"monomial", monomial_to_json(mono, n)}, {"generator", g.name()}})))
          break;
      }
      if (cex) break;
    }
    b.check("sphere.h_invariance", "h(X a) = epsilon(X) h(a) for X = k_i^{+-1}, e_i, f_i", json{{"n", n}}, cex);
  }

  if (n >= 2) {
    const int top = max_degree;
    std::vector<std::pair<std::pair<int, int>, std::vector<std::pair<HarmonicLabel, NCPoly>>>> blocks;
    for (int d = 0; d <= top; ++d)
      for (int m = d; m >= 0; --m) blocks.push_back({{m, d - m}, xi_basis(n, m, d - m)});

    // Gram matrices: diagonal, equal to the norm products, positive at q0
    std::optional<json> diag, norms, pos;
    for (const auto& [bd, basis] : blocks) {
      std::vector<NCPoly> el;
      for (const auto& [l, x] : basis) el.push_back(x);
      const Matrix g = gram_matrix(el);
      const json at{{"m", bd.first}, {"mprime", bd.second}};
      if (!diag && !g.is_diagonal()) {
        for (std::size_t i = 0; i < g.rows() && !diag; ++i)
          for (std::size_t j = 0; j < g.cols(); ++j)
            if (i != j && !g.at(i, j).is_zero()) {
              diag = json{{"m", bd.first}, {"mprime", bd.second}, {"row", basis[i].first.to_string()},
                          {"col", basis[j].first.to_string()}, {"entry", g.at(i, j).to_string()}};
              break;
            }
      }
      for (std::size_t i = 0; i < el.size(); ++i) {
        json ctx = at;
        ctx["label"] = basis[i].first.to_string();
        if (!norms) norms = compare_scalars(g.at(i, i), xi_norm_factors(basis[i].first), ctx);
        if (!pos && sign_at(g.at(i, i), q0) <= 0) {
          pos = ctx;
          (*pos)["value"] = g.at(i, i).to_string();
        }
      }
    }
    b.check("sphere.xi_gram_diagonal", "the Gram matrix of the Xi basis is diagonal", json{{"n", n}}, diag);
    b.check("sphere.xi_gram_norms", "diagonal Gram entries equal the products of the level norm ratios", json{{"n", n}},
            norms);
    b.check("sphere.xi_gram_positive", "diagonal Gram entries are positive at q0 = 7/10", json{{"n", n}, {"q0", "7/10"}},
            pos);

    // harmonics of different bidegrees are orthogonal
    std::optional<json> orth;
    for (std::size_t a = 0; a < blocks.size() && !orth; ++a)
      for (std::size_t c = 0; c < blocks.size() && !orth; ++c) {
        if (a == c) continue;
        for (const auto& [la, xa] : blocks[a].second) {
          for (const auto& [lc, xc] : blocks[c].second) {
            const ScalarQ v = inner_product(xa, xc);
            if (!v.is_zero()) {
              orth = json{{"left", {{"m", blocks[a].first.first}, {"mprime", blocks[a].first.second}, {"label", la.to_string()}}},
                          {"right", {{"m", blocks[c].first.first}, {"mprime", blocks[c].first.second}, {"label", lc.to_string()}}},
                          {"value", v.to_string()}};
              break;
            }
          }
          if (orth) break;
        }
      }
    b.check("sphere.bidegree_orthogonality", "<H_{m,m'}, H_{r,r'}> = 0 for (m,m') != (r,r')", json{{"n", n}}, orth);

    // <k p1, k p2> = <p1, p2> as stated; k_i is diagonal on Xi, so the ratio
    // is q^{2 lambda_i} and only weight-zero pairs survive
    std::optional<json> klit;
    for (const auto& [bd, basis] : blocks) {
      if (bd.first + bd.second > 2 || klit) continue;
      for (int i = 1; i <= n && !klit; ++i)
        for (const auto& [l1, p1] : basis) {
          for (const auto& [l2, p2] : basis) {
            const ScalarQ lhs = inner_product(act_gl(GlGenerator::k(i), p1), act_gl(GlGenerator::k(i), p2));
            if ((klit = compare_scalars(lhs, inner_product(p1, p2),
                                        json{{"i", i}, {"left", l1.to_string()}, {"right", l2.to_string()}})))
              break;
          }
          if (klit) break;
        }
    }
    b.check("sphere.k_action_invariant_as_stated", "<k_i p1, k_i p2> = <p1, p2> on Xi bases with m+m' <= 2",
            json{{"n", n}}, klit);

    // <k p1, k^-1 p2> = <p1, p2> on the Xi bases with m+m' <= 2
    std::optional<json> kinv;
    for (const auto& [bd, basis] : blocks) {
      if (bd.first + bd.second > 2) continue;
      for (int i = 1; i <= n && !kinv; ++i)
        for (const auto& [l1, p1] : basis) {
          for (const auto& [l2, p2] : basis) {
            const ScalarQ lhs = inner_product(act_gl(GlGenerator::k(i), p1), act_gl(GlGenerator::k(i, -2), p2));
            if ((kinv = compare_scalars(lhs, inner_product(p1, p2),
                                        json{{"i", i}, {"left", l1.to_string()}, {"right", l2.to_string()}})))
              break;
          }
          if (kinv) break;
        }
    }
    b.check("sphere.k_action_unitary", "<k_i p1, k_i^-1 p2> = <p1, p2> on Xi bases with m+m' <= 2", json{{"n", n}}, kinv);
  }

  // restriction to the sphere
  {
    std::optional<json> cex;
    const NCPoly Q = q_radius(n);
    cex = compare_polys(restrict_to_sphere(Q), NCPoly::constant(n, ScalarQ(1)), json{{"case", "restrict(Q)"}});
    if (!cex && n == 2) {
      const NCPoly z1w1 = NCPoly::z(2, 1) * NCPoly::w(2, 1);
      const NCPoly want = (ScalarQ(1) + q(2)).inverse() *
                          (q(2) * z1w1 - NCPoly::z(2, 2) * NCPoly::w(2, 2) + NCPoly::constant(2, ScalarQ(1)));
      cex = compare_polys(restrict_to_sphere(z1w1), want, json{{"case", "restrict(z_1 w_1)"}});
    }
    for (const auto& mono : monomials_up_to(n, std::max(0, max_degree - 2))) {
      if (cex) break;
      const NCPoly p = NCPoly::monomial(n, mono);
      cex = compare_polys(restrict_to_sphere(Q * p), restrict_to_sphere(p), json{{"case", "restrict(Q p)"}, {"monomial", monomial_to_json(mono, n)}});
      if (!cex) {
        const NCPoly r = restrict_to_sphere(p);
        cex = compare_polys(restrict_to_sphere(r), r, json{{"case", "idempotent"}, {"monomial", monomial_to_json(mono, n)}});
      }
    }
    b.check("sphere.restriction", "restrict(Q) = 1, restrict(Q p) = restrict(p), restrict is idempotent", json{{"n", n}},
            cex);
  }

  // negative controls: reordering factor q^{-sum mu_i mu_j} in place of
  // q^{+sum} (n >= 2 only, rank one has no reordering), and the profile
  // denominator (q^2;q^2)_{|mu|+n} in place of (q^2;q^2)_{|mu|+n-1}
  auto perturbed_h = [n](const NCPoly& p, int cross_sign, int denom_shift) {
    ScalarQ r;
    const NCPoly conv = p.to_order(Order::WFirst);
    for (const auto& [mono, c] : conv.terms()) {
      if (!mono.zero_weight()) continue;
      std::vector<int> mu(mono.w.begin(), mono.w.begin() + n);
      int cross = 0, total = 0;
      for (int i = 0; i < n; ++i) {
        total += mu[i];
        for (int j = i + 1; j < n; ++j) cross += mu[i] * mu[j];
      }
      const ScalarQ q2 = ScalarQ::q_power(2);
      const ScalarQ shift = q_pochhammer(q2, 2, total + n - 1) / q_pochhammer(q2, 2, total + n - 1 + denom_shift);
      r += c * ScalarQ::q_power(cross_sign * cross) * h_profile(mu) * shift;
    }
    return r;
  };
  auto detect = [&](int cross_sign, int denom_shift) {
    std::optional<json> det;
    for (const auto& p : detail::zero_weight_monomials(n, std::max(2, max_degree)))
      if ((det = compare_scalars(perturbed_h(p, cross_sign, denom_shift), detail::h_by_jackson(p),
                                 json{{"monomial", p.to_string()}})))
        break;
    return det;
  };
  if (n >= 2)
    b.control("control.h_reordering_sign", "h with the reordering factor q^{-sum mu_i mu_j} must disagree with the Jackson integral",
              json{{"n", n}}, detect(-1, 0));
  b.control("control.h_profile_shift", "h with denominator (q^2;q^2)_{|mu|+n} must disagree with the Jackson integral",
            json{{"n", n}}, detect(1, 1));
  return b.finish();
}

}  // namespace qharm::verify
