// Harmonics adapted to U_q(gl_p) x U_q(gl_{n-p}): the split Laplacians, the
// t-space tilde-H^(t), and the projection of Q_y^u h_t h_y in sum, 2phi1 and
// little q-Jacobi form.
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "qharm/sphere.hpp"
#include "qharm/verify/laplace.hpp"

namespace qharm::verify {

namespace detail {

/// Q_y^u sum_k (q^-2u;q^2)_k (q^{-2(r+r'+p+u-1)};q^2)_k / ((q^{-2(m+m'+n-2)};q^2)_k (q^2;q^2)_k) q^{k sigma} Q^k Q_y^-k.
inline NCPoly split_factor_hypergeometric(const SplitSpec& x, int sigma) {
  const int u = x.u();
  const ScalarQ q2 = ScalarQ::q_power(2);
  const NCPoly Q = q_radius(x.n), Qy = q_radius(x.n, x.p);
  NCPoly r(x.n);
  for (int k = 0; k <= u; ++k) {
    const ScalarQ c = q_pochhammer(ScalarQ::q_power(-2 * u), 2, k) *
                      q_pochhammer(ScalarQ::q_power(-2 * (x.r + x.rp + x.p + u - 1)), 2, k) /
                      (q_pochhammer(ScalarQ::q_power(-2 * (x.m + x.mp + x.n - 2)), 2, k) * q_pochhammer(q2, 2, k)) *
                      ScalarQ::q_power(k * sigma);
    r += c * (pow(Q, k) * pow(Qy, u - k));
  }
  return r;
}

/// c P_u^{(r+r'+p-1, s+s'+n-p-1)}(q^{-2s} Q_y; q^2): the little q-Jacobi form with Q = 1.
inline NCPoly split_factor_on_sphere(const SplitSpec& x) {
  const int u = x.u();
  const ScalarQ lead = (u % 2 ? ScalarQ(-1) : ScalarQ(1)) * ScalarQ::q_power(x.sigma() * u - (u + 1) * u) *
                       q_pochhammer(ScalarQ::q_power(-2 * (x.r + x.rp + x.p + u - 1)), 2, u) /
                       q_pochhammer(ScalarQ::q_power(-2 * (x.m + x.mp + x.n - 2)), 2, u);
  const UPoly P = little_q_jacobi(QJacobiSpec{u, x.r + x.rp + x.p - 1, x.s + x.sp + x.n - x.p - 1});
  const NCPoly Qy = q_radius(x.n, x.p);
  NCPoly r(x.n);
  for (int k = 0; k <= u; ++k) r += (lead * P.coeff(k) * ScalarQ::q_power(-2 * x.s * k)) * pow(Qy, k);
  return r;
}

struct SplitCase {
  SplitSpec spec;
  NCPoly h_t, h_y;
  json params;
};

/// All (p, r, r', s, s', u) with u <= max_u, m, m' <= max_deg, one element of
/// every basis of tilde-H^(t)_{s,s'} and H^(y)_{r,r'}.
inline std::vector<SplitCase> split_cases(int n, int max_deg, int max_u) {
  std::vector<SplitCase> out;
  for (int p = 1; p < n; ++p)
    for (int u = 0; u <= max_u; ++u)
      for (int r = 0; r + u <= max_deg; ++r)
        for (int s = 0; r + s + u <= max_deg; ++s)
          for (int rp = 0; rp + u <= max_deg; ++rp)
            for (int sp = 0; rp + sp + u <= max_deg; ++sp) {
              const auto ts = split_t_basis(n, p, s, sp);
              const auto ys = split_y_basis(n, p, r, rp);
              for (std::size_t a = 0; a < ts.size(); ++a)
                for (std::size_t c = 0; c < ys.size(); ++c) {
                  SplitSpec x{n, p, r + s + u, rp + sp + u, r, rp, s, sp};
                  out.push_back({x, ts[a], ys[c],
                                 json{{"n", n}, {"p", p}, {"m", x.m}, {"mprime", x.mp}, {"r", r}, {"rprime", rp}, {"s", s},
                                      {"sprime", sp}, {"u", u}, {"t_element", a}, {"y_element", c}}});
                }
            }
  return out;
}

}  // namespace detail

inline VerifyReport splitx_suite(int n, int max_degree) {
  if (n < 2) throw std::invalid_argument("splitx: the split needs n >= 2");
  SuiteBuilder b("splitx", suite_params(n, max_degree));
  auto q = [](int k) { return ScalarQ::q_power(k); };
  const auto dom = monomials_up_to(n, max_degree);
  const LinearOp lap = ops::laplace(n);

  // the split Laplacians as operator identities, every p
  {
    std::vector<Instance> sum, tforms, hat, diff, diff_implied;
    for (int p = 1; p < n; ++p) {
      const json at{{"p", p}};
      const LinearOp y = ops::laplace_y(n, p), t = ops::laplace_t(n, p), yh = ops::laplace_y_hat(n, p);
      sum.push_back({at, lap, y + t});
      tforms.push_back({at, t, ops::laplace_t_dual_form(n, p)});
      hat.push_back({at, lap, yh + q(2 * p) * t});
      diff.push_back({at, y - yh, (ScalarQ(1) - q(2 * p)) * t});
      diff_implied.push_back({at, y - yh, (q(2 * p) - ScalarQ(1)) * t});
    }
    b.identities("splitx.laplace_y_plus_t", "Delta_q = Delta_(y) + Delta_(t)", sum, dom);
    b.identities("splitx.laplace_t_two_forms", "sum_{i>p} d_i bar_d_i = sum_{i<=n-p} q^{2(i-1)} bar_d_{p+i} d_{p+i}", tforms,
                 dom);
    b.identities("splitx.laplace_hat_y_plus_t", "Delta_q = hat Delta_(y) + q^{2p} Delta_(t)", hat, dom);
    b.identities("splitx.laplace_y_difference", "Delta_(y) - hat Delta_(y) = (1 - q^{2p}) Delta_(t) as printed", diff, dom);
    b.identities("splitx.laplace_y_difference_implied_sign",
                 "Delta_(y) - hat Delta_(y) = (q^{2p} - 1) Delta_(t), the difference of the two splittings of Delta_q",
                 diff_implied, dom);
  }

  // the t-space: killed by d_i, bar_d_i (i <= p), by Delta_(t), and harmonic
  {
    std::optional<json> killed, lap_t, harm;
    for (int p = 1; p < n; ++p)
      for (int s = 0; s <= max_degree; ++s)
        for (int sp = 0; s + sp <= max_degree; ++sp) {
          const auto basis = split_t_basis(n, p, s, sp);
          for (std::size_t a = 0; a < basis.size(); ++a) {
            const json at{{"p", p}, {"s", s}, {"sprime", sp}, {"element", a}};
            for (int i = 1; i <= p && !killed; ++i) {
              if (!ops::partial(n, i).apply(basis[a]).is_zero()) killed = json{{"at", at}, {"operator", "d_" + std::to_string(i)}};
              else if (!ops::bar_partial(n, i).apply(basis[a]).is_zero())
                killed = json{{"at", at}, {"operator", "bar_d_" + std::to_string(i)}};
            }
            if (!lap_t && !ops::laplace_t(n, p).apply(basis[a]).is_zero()) lap_t = at;
            if (!harm && !lap.apply(basis[a]).is_zero()) harm = at;
          }
        }
    const json p{{"n", n}, {"max_degree", max_degree}};
    b.check("splitx.t_space_killed_by_y_derivatives", "d_i P = bar_d_i P = 0 for P in tilde-H^(t)_{s,s'}, i <= p", p, killed);
    b.check("splitx.t_space_laplace_t", "Delta_(t) P = 0 for P in tilde-H^(t)_{s,s'}", p, lap_t);
    b.check("splitx.t_space_harmonic", "Delta_q P = 0 for P in tilde-H^(t)_{s,s'}", p, harm);
  }

  // hat Delta_(y) (h_t f) = q^{s-s'} h_t hat Delta_(y) f, as printed and with the exponent s'-s
  {
    std::optional<json> printed, reversed;
    const int top = std::min(max_degree, 2);
    for (int p = 1; p < n; ++p) {
      const LinearOp yh = ops::laplace_y_hat(n, p);
      for (int s = 0; s <= top; ++s)
        for (int sp = 0; s + sp <= top; ++sp)
          for (const auto& ht : split_t_basis(n, p, s, sp))
            for (int a = 0; a <= top; ++a)
              for (int c = 0; a + c <= top; ++c)
                for (const auto& mono : monomial_basis(p, a, c)) {
                  const NCPoly f = embed(NCPoly::monomial(p, mono), n, 0);
                  const NCPoly lhs = yh.apply(ht * f), rhs = ht * yh.apply(f);
                  const json at{{"p", p}, {"s", s}, {"sprime", sp}, {"h_t", ht.to_string()}, {"f", f.to_string()}};
                  if (!printed) printed = compare_polys(lhs, q(s - sp) * rhs, at);
                  if (!reversed) reversed = compare_polys(lhs, q(sp - s) * rhs, at);
                }
    }
    const json p{{"n", n}, {"max_degree", top}};
    b.check("splitx.hat_laplace_y_past_t_factor", "hat Delta_(y)(h_t f(y)) = q^{s-s'} h_t hat Delta_(y) f(y) as printed", p,
            printed);
    b.check("splitx.hat_laplace_y_past_t_factor_reversed_exponent",
            "hat Delta_(y)(h_t f(y)) = q^{s'-s} h_t hat Delta_(y) f(y)", p, reversed);
  }

  const int max_u = std::min(2, max_degree);
  const int max_deg = std::min(max_degree, 3);
  const auto cases = detail::split_cases(n, max_deg, max_u);

  // Delta_q(Q_y^u h_t h_y) = q^a h_t Delta_(y)(Q_y^u h_y), a = 2(s-s')u + s'-s,
  // and the resulting one-step lowering q^{s-s'+p-1} [u][p+u+r+r'-1] Q_y^{u-1} h_t h_y
  {
    std::optional<json> inter, step;
    for (const auto& c : cases) {
      const auto& x = c.spec;
      const int u = x.u();
      const NCPoly Qy = q_radius(n, x.p);
      const NCPoly input = pow(Qy, u) * c.h_t * c.h_y;
      const NCPoly lhs = lap.apply(input);
      const int a = 2 * (x.s - x.sp) * u + x.sp - x.s;
      if (!inter) inter = compare_polys(lhs, q(a) * (c.h_t * ops::laplace_y(n, x.p).apply(pow(Qy, u) * c.h_y)), c.params);
      if (!step) {
        const NCPoly want = u == 0 ? NCPoly(n)
                                   : (q(x.s - x.sp + x.p - 1) * q_number(u) * q_number(x.p + u + x.r + x.rp - 1)) *
                                         (pow(Qy, u - 1) * c.h_t * c.h_y);
        step = compare_polys(lhs, want, c.params);
      }
    }
    const json p{{"n", n}, {"max_degree", max_deg}, {"max_u", max_u}};
    b.check("splitx.laplace_on_split_input", "Delta_q(Q_y^u h_t h_y) = q^{2(s-s')u+s'-s} h_t Delta_(y)(Q_y^u h_y)", p, inter);
    b.check("splitx.laplace_on_split_input_lowering",
            "Delta_q(Q_y^u h_t h_y) = q^{s-s'+p-1} [u][p+u+r+r'-1] Q_y^{u-1} h_t h_y", p, step);
  }

  // the projection: direct, sum form, 2phi1 form, little q-Jacobi form, on the sphere
  {
    std::optional<json> sum, hyp, jac, sphere_cex, u0;
    for (const auto& c : cases) {
      const auto& x = c.spec;
      const NCPoly input = pow(q_radius(n, x.p), x.u()) * c.h_t * c.h_y;
      const NCPoly direct = project(input);
      if (!sum) sum = compare_polys(split_factor_sum_form(x) * c.h_t * c.h_y, direct, c.params);
      if (!hyp) hyp = compare_polys(detail::split_factor_hypergeometric(x, x.sigma()) * c.h_t * c.h_y, direct, c.params);
      if (!jac) jac = compare_polys(split_project(x, c.h_t, c.h_y), direct, c.params);
      if (!sphere_cex)
        sphere_cex = compare_polys(restrict_to_sphere(direct),
                                   restrict_to_sphere(detail::split_factor_on_sphere(x) * c.h_t * c.h_y), c.params);
      if (!u0 && x.u() == 0) u0 = compare_polys(split_project(x, c.h_t, c.h_y), c.h_t * c.h_y, c.params);
    }
    const json p{{"n", n}, {"max_degree", max_deg}, {"max_u", max_u}, {"cases", cases.size()}};
    b.check("splitx.projection_sum_form", "H(Q_y^u h_t h_y) = (sum_k alpha_k Q^k q^{(s-s'+p-1)k} ...) h_t h_y", p, sum);
    b.check("splitx.projection_hypergeometric_form", "the 2phi1 series in Q Q_y^-1 q^sigma equals the projection", p, hyp);
    b.check("splitx.projection_little_q_jacobi_form",
            "t = (-q^sigma)^u q^{-(u+1)u} (..)_u/(..)_u Q^u P_u^{(r+r'+p-1, s+s'+n-p-1)}(q^{-2s} Q_y/Q) gives the projection",
            p, jac);
    b.check("splitx.projection_on_sphere", "on the sphere the projection is c P_u(q^{-2s} Q_y) h_t h_y", p, sphere_cex);
    b.check("splitx.projection_u_zero", "u = 0: the projection of h_t h_y is h_t h_y", p, u0);
  }

  // n = 2, p = 1, m = m' = 1, input z_1 w_1
  if (n == 2) {
    const SplitSpec x{2, 1, 1, 1, 0, 0, 0, 0};
    const NCPoly one = NCPoly::constant(2, ScalarQ(1));
    const NCPoly want = (ScalarQ(1) + q(2)).inverse() * (q(2) * (NCPoly::z(2, 1) * NCPoly::w(2, 1)) - NCPoly::z(2, 2) * NCPoly::w(2, 2));
    auto cex = compare_polys(split_project(x, one, one), want, json{{"form", "little q-Jacobi"}});
    if (!cex) cex = compare_polys(project(NCPoly::z(2, 1) * NCPoly::w(2, 1)), want, json{{"form", "direct"}});
    b.check("splitx.rank_two_example", "n = 2, p = 1: the projection of z_1 w_1 is (q^2 z_1 w_1 - z_2 w_2)/(1+q^2)",
            json{{"n", 2}}, cex);
  }

  // negative control: sigma + 2 in the 2phi1 argument
  {
    std::optional<json> det;
    for (const auto& c : cases) {
      if (c.spec.u() == 0) continue;
      const NCPoly input = pow(q_radius(n, c.spec.p), c.spec.u()) * c.h_t * c.h_y;
      if ((det = compare_polys(detail::split_factor_hypergeometric(c.spec, c.spec.sigma() + 2) * c.h_t * c.h_y, project(input),
                               c.params)))
        break;
    }
    b.control("control.split_sigma_shift", "the 2phi1 form with sigma + 2 must disagree with the projection", json{{"n", n}},
              det);
  }
  return b.finish();
}

}  // namespace qharm::verify
