// Harmonic projector, dimensions, decompositions, zonal polynomials, the
// separated-variables factors and the Xi basis.
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "qharm/harmonics.hpp"
#include "qharm/verify/laplace.hpp"

namespace qharm::verify {

namespace detail {

inline LinearOp projector_op(int n) {
  return LinearOp(
      n, Order::ZFirst, Order::ZFirst,
      [n](const Monomial& m) { return project(NCPoly::monomial(n, m), m.m(), m.mp()); }, "H", LinearOp::Shift{0, 0});
}

inline ScalarQ poch(int base_q_exp, int s) { return q_pochhammer(ScalarQ::q_power(base_q_exp), 2, s); }

/// The zonal polynomial summed over s with the powers z_n^{m'-s} w_n^{m'-s}
/// kept explicit; for m < m' the roles of m and m' are exchanged.
inline NCPoly zonal_radial_sum(int n, int m, int mp) {
  const int small = std::min(m, mp), big = std::max(m, mp);
  const NCPoly Q = q_radius(n), zn = NCPoly::z(n, n), wn = NCPoly::w(n, n);
  NCPoly r(n);
  for (int s = 0; s <= small; ++s) {
    const ScalarQ c = ScalarQ::q_power(2 * s) * poch(-2 * m, s) * poch(-2 * mp, s) /
                      (poch(2, s) * poch(-2 * (m + mp + n - 2), s));
    r += c * (pow(Q, s) * pow(zn, small - s) * pow(wn, small - s));
  }
  return m >= mp ? pow(zn, big - small) * r : r * pow(wn, big - small);
}

/// The unnormalized zonal polynomial as a 2phi1 series in Q_{n-1}/Q,
/// written directly from q-Pochhammer symbols.
inline NCPoly zonal_series_unnormalized(int n, int m, int mp) {
  const int small = std::min(m, mp), big = std::max(m, mp);
  const NCPoly Q = q_radius(n), Qs = q_radius(n, n - 1);
  NCPoly r(n);
  for (int s = 0; s <= small; ++s) {
    const ScalarQ c = poch(-2 * small, s) * poch(2 * (big + n - 1), s) / (poch(2 * (n - 1), s) * poch(2, s)) *
                      ScalarQ::q_power(2 * s);
    r += c * (pow(Qs, s) * pow(Q, small - s));
  }
  if (m >= mp) return pow(NCPoly::z(n, n), m - mp) * r;
  return r * pow(NCPoly::w(n, n), mp - m);
}

/// The zonal polynomial from the double sum over nu and s.
inline NCPoly zonal_double_sum(int n, int m, int mp) {
  const int small = std::min(m, mp), big = std::max(m, mp);
  const NCPoly Q = q_radius(n), Qs = q_radius(n, n - 1);
  NCPoly r(n);
  for (int nu = 0; nu <= small; ++nu) {
    ScalarQ inner;
    for (int s = 0; s <= small - nu; ++s)
      inner += poch(-2 * (small - s), nu) / poch(2, nu) * ScalarQ::q_power(2 * s) * poch(-2 * big, s) *
               poch(-2 * small, s) / (poch(2, s) * poch(-2 * (m + mp + n - 2), s));
    r += (ScalarQ::q_power(2 * nu) * inner) * (pow(Qs, nu) * pow(Q, small - nu));
  }
  if (m >= mp) return pow(NCPoly::z(n, n), m - mp) * r;
  return r * pow(NCPoly::w(n, n), mp - m);
}

/// Projection of z_n^{m-s} w_n^{m'-s'} h written with the printed
/// coefficient d: q^{-2ab} (q^{-2(top)-2n+4};q^2)_L / (q^{-2m-2m'-2n+4};q^2)_L 2phi1(...).
inline NCPoly assoc_printed(int n, int m, int mp, int s, int sp) {
  const int a = m - s, bb = mp - sp;
  const bool zb = a >= bb;
  const int L = zb ? bb : a;
  const ScalarQ pre = ScalarQ::q_power(-2 * a * bb) *
                      (zb ? poch(-2 * mp - 2 * s - 2 * n + 4, L) : poch(-2 * m - 2 * sp - 2 * n + 4, L)) /
                      poch(-2 * m - 2 * mp - 2 * n + 4, L);
  const int upper = zb ? 2 * (m + sp + n - 1) : 2 * (mp + s + n - 1);
  const NCPoly Q = q_radius(n), Qs = q_radius(n, n - 1);
  NCPoly series(n);
  for (int nu = 0; nu <= L; ++nu) {
    const ScalarQ c = poch(-2 * L, nu) * poch(upper, nu) / (poch(2 * (s + sp + n - 1), nu) * poch(2, nu)) *
                      ScalarQ::q_power(2 * nu);
    series += c * (pow(Qs, nu) * pow(Q, L - nu));
  }
  if (zb) return pre * (pow(NCPoly::z(n, n), a - bb) * series);
  return pre * (series * pow(NCPoly::w(n, n), bb - a));
}

/// The same coefficient from the double sum over nu and k.
inline NCPoly assoc_double_sum(int n, int m, int mp, int s, int sp) {
  const int a = m - s, bb = mp - sp;
  const bool zb = a >= bb;
  const int L = zb ? bb : a, big = zb ? a : bb;
  const NCPoly Q = q_radius(n), Qs = q_radius(n, n - 1);
  NCPoly r(n);
  for (int nu = 0; nu <= L; ++nu) {
    ScalarQ inner;
    for (int k = 0; k <= L - nu; ++k)
      inner += ScalarQ::q_power(2 * k) * poch(-2 * big, k) * poch(-2 * (L - k), nu) * poch(-2 * L, k) /
               (poch(2, k) * poch(-2 * (m + mp + n - 2), k));
    r += (ScalarQ::q_power(2 * nu) / poch(2, nu) * inner) * (pow(Qs, nu) * pow(Q, L - nu));
  }
  if (zb) return pow(NCPoly::z(n, n), a - bb) * r;
  return r * pow(NCPoly::w(n, n), bb - a);
}

}  // namespace detail

inline VerifyReport harmonics_suite(int n, int max_degree) {
  SuiteBuilder b("harmonics", suite_params(n, max_degree));
  const LinearOp lap = ops::laplace(n);
  const LinearOp H = detail::projector_op(n);
  const NCPoly Q = q_radius(n);
  auto q = [](int k) { return ScalarQ::q_power(k); };
  std::vector<std::pair<int, int>> bidegrees;
  for (int d = 0; d <= max_degree; ++d)
    for (int m = d; m >= 0; --m) bidegrees.emplace_back(m, d - m);

  // alpha recurrence
  {
    std::optional<json> cex;
    for (auto [m, mp] : bidegrees) {
      if (!alpha_coeff(n, m, mp, 0).is_one()) cex = json{{"m", m}, {"mprime", mp}, {"k", 0}};
      for (int k = 1; k <= std::min(m, mp) && !cex; ++k)
        cex = compare_scalars(q(n - 1) * q_number(k) * q_number(m + mp + n - k - 1) * alpha_coeff(n, m, mp, k) +
                                  alpha_coeff(n, m, mp, k - 1),
                              ScalarQ(0), json{{"m", m}, {"mprime", mp}, {"k", k}});
      if (cex) break;
    }
    b.check("harmonics.alpha_recurrence", "q^{n-1}[k][m+m'+n-k-1] alpha_k + alpha_{k-1} = 0 with alpha_0 = 1",
            json{{"n", n}}, cex);
  }

  // projector laws
  {
    const auto dom = monomials_up_to(n, max_degree);
    b.identities("harmonics.projector_idempotent", "H_{m,m'}^2 = H_{m,m'}", {{json::object(), H * H, H}}, dom);
    b.identities("harmonics.projector_harmonic", "Delta_q H_{m,m'} = 0", {{json::object(), lap * H, LinearOp::zero(n)}},
                 dom);
    std::vector<Monomial> lower;
    for (const auto& mono : monomials_up_to(n, std::max(0, max_degree - 2))) lower.push_back(mono);
    b.identities("harmonics.projector_kills_radius", "H_{m,m'} Q_hat = 0 on A_{m-1,m'-1}",
                 {{json::object(), H * ops::q_hat(n), LinearOp::zero(n)}}, lower);
    std::vector<Instance> inst;
    const auto labels = detail::gl_generator_labels(n);
    const auto gens = detail::gl_generators(n);
    for (std::size_t g = 0; g < gens.size(); ++g)
      inst.push_back({json{{"generator", labels[g].name()}}, H * gens[g], gens[g] * H});
    b.identities("harmonics.projector_gl_equivariant", "H_{m,m'} commutes with L(k_i^{+-1}), L(e_i), L(f_i)", inst, dom);
  }

  // dimensions and the direct sum A = H + Q A
  {
    std::optional<json> dim_cex, sum_cex;
    for (auto [m, mp] : bidegrees) {
      const BidegreeBasis A(n, m, mp);
      const long long dimA = static_cast<long long>(A.size());
      const long long dimLower = (m > 0 && mp > 0) ? static_cast<long long>(bidegree_dimension(n, m - 1, mp - 1)) : 0;
      long long ker = dimA;
      if (m > 0 && mp > 0) ker = static_cast<long long>(kernel(operator_matrix(lap, A, BidegreeBasis(n, m - 1, mp - 1))).size());
      const long long proj_rank = rank(operator_matrix(H, A));
      const long long formula = dim_harmonic(n, m, mp);
      if (!dim_cex && !(ker == formula && proj_rank == formula && dimA - dimLower == formula))
        dim_cex = json{{"m", m}, {"mprime", mp}, {"kernel", ker}, {"formula", formula}, {"projector_rank", proj_rank},
                       {"dimA_minus_lower", dimA - dimLower}};
      if (!sum_cex && n >= 2) {
        std::vector<NCPoly> hs = harmonic_basis(n, m, mp), qs;
        if (m > 0 && mp > 0)
          for (const auto& mono : monomial_basis(n, m - 1, mp - 1)) qs.push_back(Q * NCPoly::monomial(n, mono));
        auto rank_of = [&](const std::vector<NCPoly>& v) {
          if (v.empty()) return 0;
          Matrix x(A.size(), v.size());
          for (std::size_t j = 0; j < v.size(); ++j) x.set_column(j, A.coordinates(v[j]));
          return rank(x);
        };
        std::vector<NCPoly> all = hs;
        all.insert(all.end(), qs.begin(), qs.end());
        const int rh = rank_of(hs), rq = rank_of(qs), ra = rank_of(all);
        if (!(rh == static_cast<int>(hs.size()) && rq == static_cast<int>(qs.size()) && ra == rh + rq && ra == dimA))
          sum_cex = json{{"m", m}, {"mprime", mp}, {"rank_harmonic", rh}, {"rank_radial", rq}, {"rank_total", ra},
                         {"dimA", dimA}};
      }
    }
    b.check("harmonics.dimension", "kernel of Delta on A_{m,m'} = dimension formula = rank of H = dim A_{m,m'} - dim A_{m-1,m'-1}",
            json{{"n", n}}, dim_cex);
    b.check("harmonics.direct_sum", "A_{m,m'} = H_{m,m'} + Q A_{m-1,m'-1} with trivial intersection", json{{"n", n}},
            sum_cex);
  }

  // A_{m,m'} = sum_j Q^j H_{m-j,m'-j} on every monomial, and the matching dimension count
  {
    std::optional<json> cex, count;
    for (const auto& mono : monomials_up_to(n, max_degree)) {
      const NCPoly p = NCPoly::monomial(n, mono);
      const auto parts = harmonic_decompose(p);
      for (const auto& [j, h] : parts) {
        const auto bd = h.bidegrees();
        if (!lap.apply(h).is_zero() || bd.size() != 1 || *bd.begin() != std::pair{mono.m() - j, mono.mp() - j}) {
          cex = json{{"monomial", monomial_to_json(mono, n)}, {"j", j}, {"component", h.to_string()}};
          break;
        }
      }
      if (cex) break;
      if ((cex = compare_polys(recombine(n, parts), p, json{{"monomial", monomial_to_json(mono, n)}}))) break;
    }
    b.check("harmonics.radial_decomposition", "every p in A_{m,m'} is sum_j Q^j h_j with h_j in H_{m-j,m'-j}",
            json{{"n", n}}, cex);
    for (auto [m, mp] : bidegrees) {
      long long s = 0;
      for (int j = 0; j <= std::min(m, mp); ++j) s += dim_harmonic(n, m - j, mp - j);
      if (s != static_cast<long long>(bidegree_dimension(n, m, mp))) {
        count = json{{"m", m}, {"mprime", mp}, {"sum", s}, {"dimA", bidegree_dimension(n, m, mp)}};
        break;
      }
    }
    b.check("harmonics.radial_dimension_count", "dim A_{m,m'} = sum_j dim H_{m-j,m'-j}", json{{"n", n}}, count);
  }

  // rank one: harmonics are 1, z^k, w^k
  {
    std::optional<json> cex;
    const LinearOp lap1 = ops::laplace(1);
    for (auto [m, mp] : bidegrees) {
      const BidegreeBasis A(1, m, mp);
      const long long ker = (m > 0 && mp > 0)
                                ? static_cast<long long>(kernel(operator_matrix(lap1, A, BidegreeBasis(1, m - 1, mp - 1))).size())
                                : 1;
      const long long want = (m == 0 || mp == 0) ? 1 : 0;
      if (ker != want) {
        cex = json{{"m", m}, {"mprime", mp}, {"kernel", ker}, {"expected", want}};
        break;
      }
    }
    b.check("harmonics.rank_one_harmonics", "for n = 1 the harmonics are spanned by 1, z_1^k, w_1^k",
            json{{"max_degree", max_degree}}, cex);
  }

  if (n >= 2) {
    // zonal polynomials
    std::optional<json> closed, radial, series, dsum, inv;
    for (auto [m, mp] : bidegrees) {
      const NCPoly direct = project(pow(NCPoly::z(n, n), m) * pow(NCPoly::w(n, n), mp), m, mp);
      const json at{{"m", m}, {"mprime", mp}};
      if (!closed) closed = compare_polys(zonal(n, m, mp), direct, at);
      if (!radial) radial = compare_polys(detail::zonal_radial_sum(n, m, mp), direct, at);
      const int small = std::min(m, mp), big = std::max(m, mp);
      const ScalarQ pinned = detail::poch(2 * (n - 1), small) / detail::poch(2 * (big + n - 1), small);
      if (!series) series = compare_polys(pinned * detail::zonal_series_unnormalized(n, m, mp), direct, at);
      if (!dsum) dsum = compare_polys(detail::zonal_double_sum(n, m, mp), direct, at);
      if (!inv) {
        for (int i = 1; i <= n - 1 && !inv; ++i) {
          if ((inv = compare_polys(act_gl(GlGenerator::k(i), direct), direct, json{{"m", m}, {"mprime", mp}, {"generator", GlGenerator::k(i).name()}})))
            break;
          if (i <= n - 2) {
            if ((inv = compare_polys(act_gl(GlGenerator::e(i), direct), NCPoly(n), json{{"m", m}, {"mprime", mp}, {"generator", GlGenerator::e(i).name()}})))
              break;
            inv = compare_polys(act_gl(GlGenerator::f(i), direct), NCPoly(n), json{{"m", m}, {"mprime", mp}, {"generator", GlGenerator::f(i).name()}});
          }
        }
        if (!inv) {
          // the joint invariant space of U_q(gl_{n-1}) in H_{m,m'} is one-dimensional
          const BidegreeBasis A(n, m, mp);
          const auto basis = harmonic_basis(n, m, mp);
          std::vector<Matrix> blocks;
          for (int i = 1; i <= n - 1; ++i) {
            blocks.push_back(restricted_matrix(gl_operator(n, GlGenerator::k(i)), basis, A) - Matrix::identity(basis.size()));
            if (i <= n - 2) {
              blocks.push_back(restricted_matrix(gl_operator(n, GlGenerator::e(i)), basis, A));
              blocks.push_back(restricted_matrix(gl_operator(n, GlGenerator::f(i)), basis, A));
            }
          }
          const std::size_t dimk = kernel(Matrix::vstack(blocks)).size();
          if (dimk != 1) inv = json{{"m", m}, {"mprime", mp}, {"invariant_dimension", dimk}};
        }
      }
    }
    b.check("harmonics.zonal_closed_form", "zonal() equals H_{m,m'}(z_n^m w_n^m')", json{{"n", n}}, closed);
    b.check("harmonics.zonal_radial_sum", "H(z_n^m w_n^m') as the s-sum of Q^s z_n^{m'-s} w_n^{m'-s} (m and m' exchanged when m < m')",
            json{{"n", n}}, radial);
    b.check("harmonics.zonal_series_times_constant",
            "H(z_n^m w_n^m') = (q^{2(n-1)};q^2)_min / (q^{2(max+n-1)};q^2)_min times the 2phi1 series in Q_{n-1}/Q",
            json{{"n", n}}, series);
    b.check("harmonics.zonal_double_sum", "H(z_n^m w_n^m') from the double sum over nu and s", json{{"n", n}}, dsum);
    b.check("harmonics.zonal_invariance", "the zonal polynomial is U_q(gl_{n-1}) invariant and spans the invariants in H_{m,m'}",
            json{{"n", n}}, inv);
    if (n == 2 && max_degree >= 2) {
      const NCPoly want = (q(2) + ScalarQ(1)).inverse() *
                          (NCPoly::z(2, 2) * NCPoly::w(2, 2) - q(2) * (NCPoly::z(2, 1) * NCPoly::w(2, 1)));
      b.check("harmonics.zonal_rank_two_example", "n = 2, m = m' = 1 gives (z_2 w_2 - q^2 z_1 w_1)/(1+q^2)", json{{"n", 2}},
              compare_polys(zonal(2, 1, 1), want));
    }

    // separated-variables factors
    std::optional<json> fac, branch, printed, dsum2;
    for (auto [m, mp] : bidegrees)
      for (int s = 0; s <= m; ++s)
        for (int sp = 0; sp <= mp; ++sp) {
          const json at{{"m", m}, {"mprime", mp}, {"s", s}, {"sprime", sp}};
          const NCPoly lead = pow(NCPoly::z(n, n), m - s) * pow(NCPoly::w(n, n), mp - sp);
          const NCPoly t = assoc_factor(n, m, mp, s, sp, n);
          for (const auto& h0 : harmonic_basis(n - 1, s, sp)) {
            const NCPoly h = embed(h0, n);
            const NCPoly direct = project(lead * h, m, mp);
            json ctx = at;
            ctx["h"] = h.to_string();
            if (!fac) fac = compare_polys(t * h, direct, ctx);
            if (!printed) printed = compare_polys(detail::assoc_printed(n, m, mp, s, sp) * h, direct, ctx);
            if (!dsum2) dsum2 = compare_polys(detail::assoc_double_sum(n, m, mp, s, sp) * h, direct, ctx);
          }
          if (!branch && m - s == mp - sp)
            branch = compare_polys(assoc_factor(n, m, mp, s, sp, FactorBranch::ZPower, n),
                                   assoc_factor(n, m, mp, s, sp, FactorBranch::WPower, n), at);
        }
    b.check("harmonics.assoc_factor_projection", "H_{m,m'}(z_n^{m-s} w_n^{m'-s'} h) = t^{n;m,m'}_{s,s'} h for h in H^{(n-1)}_{s,s'}",
            json{{"n", n}}, fac);
    b.check("harmonics.assoc_factor_branches_agree", "the z-power and w-power forms coincide when m - s = m' - s'",
            json{{"n", n}}, branch);
    b.check("harmonics.assoc_factor_printed_coefficient",
            "projection equals z_n^{m-s-m'+s'} Q^{m'-s'} d h (and the w-power form) with d as a q-Pochhammer ratio times 2phi1",
            json{{"n", n}}, printed);
    b.check("harmonics.assoc_factor_double_sum", "the coefficient d from the double sum over nu and k", json{{"n", n}},
            dsum2);

    // Delta on z_n^k w_n^l f(z') g(w')
    {
      std::optional<json> cex;
      const int top = std::min(2, max_degree);
      const LinearOp lap_prev = ops::laplace_range(n, 1, n - 1, "Delta_{n-1}");
      for (int k = 0; k <= top && !cex; ++k)
        for (int l = 0; l <= top && !cex; ++l)
          for (int kp = 0; kp <= top && !cex; ++kp)
            for (int lp = 0; lp <= top && !cex; ++lp) {
              if (k + l + kp + lp > std::max(max_degree, 2)) continue;
              for (const auto& fz : compositions(n - 1, kp)) {
                for (const auto& gw : compositions(n - 1, lp)) {
                  Monomial fm{}, gm{};
                  for (int i = 0; i < n - 1; ++i) {
                    fm.z[i] = fz[i];
                    gm.w[i] = gw[i];
                  }
                  const NCPoly fg = NCPoly::monomial(n, fm) * NCPoly::monomial(n, gm);
                  const NCPoly zk = pow(NCPoly::z(n, n), k), wl = pow(NCPoly::w(n, n), l);
                  NCPoly rhs = q(l - k) * (zk * wl * lap_prev.apply(fg));
                  if (k > 0 && l > 0)
                    rhs += (q(2 * (n - 1) + lp + kp) * q_number(k) * q_number(l)) *
                           (pow(NCPoly::z(n, n), k - 1) * pow(NCPoly::w(n, n), l - 1) * fg);
                  if ((cex = compare_polys(lap.apply(zk * wl * fg), rhs,
                                           json{{"k", k}, {"l", l}, {"kprime", kp}, {"lprime", lp}, {"f", NCPoly::monomial(n, fm).to_string()},
                                                {"g", NCPoly::monomial(n, gm).to_string()}})))
                    break;
                }
                if (cex) break;
              }
            }
      b.check("harmonics.separated_laplacian",
              "Delta(z_n^k w_n^l f g) = q^{l-k} z_n^k w_n^l Delta_{n-1}(f g) + q^{2(n-1)+l'+k'} [k][l] z_n^{k-1} w_n^{l-1} f g",
              json{{"n", n}, {"max_exponent", top}}, cex);
    }

    // Xi basis: count, harmonicity, independence; highest weight vector
    {
      std::optional<json> xi, hw;
      for (auto [m, mp] : bidegrees) {
        const auto basis = xi_basis(n, m, mp);
        const BidegreeBasis A(n, m, mp);
        Matrix x(A.size(), basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j) {
          if (!xi && !lap.apply(basis[j].second).is_zero())
            xi = json{{"m", m}, {"mprime", mp}, {"label", basis[j].first.to_string()}, {"reason", "not harmonic"}};
          x.set_column(j, A.coordinates(basis[j].second));
        }
        const long long dim = dim_harmonic(n, m, mp);
        if (!xi && (static_cast<long long>(basis.size()) != dim || rank(x) != dim))
          xi = json{{"m", m}, {"mprime", mp}, {"labels", basis.size()}, {"rank", rank(x)}, {"dimension", dim}};

        const NCPoly v = pow(NCPoly::z(n, 1), m) * pow(NCPoly::w(n, n), mp);
        if (!hw && !lap.apply(v).is_zero()) hw = json{{"m", m}, {"mprime", mp}, {"reason", "not harmonic"}};
        for (int i = 1; i < n && !hw; ++i)
          hw = compare_polys(act_gl(GlGenerator::e(i), v), NCPoly(n), json{{"m", m}, {"mprime", mp}, {"generator", GlGenerator::e(i).name()}});
        for (int i = 1; i <= n && !hw; ++i) {
          const int weight = (i == 1 ? m : 0) - (i == n ? mp : 0);
          hw = compare_polys(act_gl(GlGenerator::k(i), v), q(weight) * v, json{{"m", m}, {"mprime", mp}, {"generator", GlGenerator::k(i).name()}});
        }
      }
      b.check("harmonics.xi_basis", "the Xi labels number dim H_{m,m'} and give linearly independent harmonics",
              json{{"n", n}}, xi);
      b.check("harmonics.highest_weight_vector", "z_1^m w_n^m' is harmonic, killed by every e_i, with weight (m,0,..,0,-m')",
              json{{"n", n}}, hw);
    }
  }

  // negative control: alpha_1 scaled by q
  {
    std::optional<json> det;
    auto control_bd = bidegrees;
    control_bd.emplace_back(1, 1);
    for (auto [m, mp] : control_bd) {
      if (std::min(m, mp) < 1) continue;
      for (const auto& mono : monomial_basis(n, m, mp)) {
        const NCPoly p = NCPoly::monomial(n, mono);
        NCPoly bad = p;
        NCPoly d = p, qk = NCPoly::constant(n, ScalarQ(1));
        for (int k = 1; k <= std::min(m, mp); ++k) {
          d = lap.apply(d);
          qk = qk * Q;
          bad += (alpha_coeff(n, m, mp, k) * (k == 1 ? q(1) : ScalarQ(1))) * (qk * d);
        }
        if (!lap.apply(bad).is_zero()) {
          det = json{{"monomial", monomial_to_json(mono, n)}, {"laplacian", lap.apply(bad).to_string()}};
          break;
        }
      }
      if (det) break;
    }
    b.control("control.perturbed_alpha", "a projector with alpha_1 scaled by q must leave non-harmonic output",
              json{{"n", n}}, det);
  }
  return b.finish();
}

}  // namespace qharm::verify
