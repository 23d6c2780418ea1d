// q-harmonic polynomials: the projector onto H_{m,m'}, harmonic
// decomposition, dimensions, zonal polynomials and the separated-variables
// basis Xi built from the factors t^{n;m,m'}_{s,s'}.
#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qharm/linalg.hpp"
#include "qharm/operators.hpp"
#include "qharm/qspecial.hpp"

namespace qharm {

/// alpha_k = (-1)^k q^{-(n-1)k} [m+m'+n-k-2]! / ([k]! [m+m'+n-2]!).
inline ScalarQ alpha_coeff(int n, int m, int mp, int k) {
  if (k < 0 || k > std::min(m, mp)) throw std::invalid_argument("alpha_coeff: need 0 <= k <= min(m, m')");
  if (k == 0) return ScalarQ(1);
  const int top = m + mp + n - 2;
  ScalarQ r = q_factorial(top - k) / (q_factorial(k) * q_factorial(top)) * ScalarQ::q_power(-(n - 1) * k);
  return k % 2 ? -r : r;
}

namespace detail {
inline void check_bidegree(const NCPoly& p, int m, int mp, const char* who) {
  for (const auto& [a, b] : p.bidegrees())
    if (a != m || b != mp)
      throw std::invalid_argument(std::string(who) + ": input is not in A_{" + std::to_string(m) + "," +
                                  std::to_string(mp) + "}");
}
inline std::pair<int, int> single_bidegree(const NCPoly& p, const char* who) {
  const auto bd = p.bidegrees();
  if (bd.size() != 1) throw std::invalid_argument(std::string(who) + ": input must be nonzero and homogeneous");
  return *bd.begin();
}
}  // namespace detail

/// H_{m,m'} p = sum_k alpha_k Q^k Delta^k p for p in A_{m,m'}.
inline NCPoly project(const NCPoly& p, int m, int mp) {
  detail::check_bidegree(p, m, mp, "project");
  const int n = p.n();
  const NCPoly Q = q_radius(n);
  const LinearOp& lap = ops::laplace(n);
  NCPoly result = p.to_order(Order::ZFirst);
  NCPoly d = result;
  NCPoly qk = NCPoly::constant(n, ScalarQ(1));
  for (int k = 1; k <= std::min(m, mp); ++k) {
    d = lap.apply(d);
    if (d.is_zero()) break;
    qk = qk * Q;
    result += alpha_coeff(n, m, mp, k) * (qk * d);
  }
  return result;
}

inline NCPoly project(const NCPoly& p) {
  if (p.is_zero()) return p;
  const auto [m, mp] = detail::single_bidegree(p, "project");
  return project(p, m, mp);
}

/// Delta(Q^j h) = laplace_radial_factor(n, j, deg h) Q^{j-1} h for harmonic h.
inline ScalarQ laplace_radial_factor(int n, int j, int total_degree) {
  return ScalarQ::q_power(n - 1) * q_number(j) * q_number(j + n - 1 + total_degree);
}

/// Components (j, h_j) with p = sum_j Q^j h_j and h_j in H_{m-j,m'-j};
/// zero components are omitted.
inline std::vector<std::pair<int, NCPoly>> harmonic_decompose(const NCPoly& p) {
  std::vector<std::pair<int, NCPoly>> out;
  if (p.is_zero()) return out;
  const auto [m, mp] = detail::single_bidegree(p, "harmonic_decompose");
  const int n = p.n();
  const LinearOp& lap = ops::laplace(n);
  NCPoly d = p.to_order(Order::ZFirst);
  for (int j = 0; j <= std::min(m, mp); ++j) {
    if (j > 0) d = lap.apply(d);
    if (d.is_zero()) break;
    // Delta^j p = (prod of radial factors) h_j + Q * (...)
    ScalarQ c(1);
    const int deg = m + mp - 2 * j;
    for (int t = 1; t <= j; ++t) c *= laplace_radial_factor(n, t, deg);
    NCPoly h = c.inverse() * project(d, m - j, mp - j);
    if (!h.is_zero()) out.emplace_back(j, std::move(h));
  }
  return out;
}

/// Reassembles sum_j Q^j h_j.
inline NCPoly recombine(int n, const std::vector<std::pair<int, NCPoly>>& parts) {
  NCPoly r(n);
  const NCPoly Q = q_radius(n);
  for (const auto& [j, h] : parts) r += pow(Q, j) * h;
  return r;
}

/// dim H_{m,m'} = (m+n-2)!(m'+n-2)!(m+m'+n-1) / ((n-1)!(n-2)! m! m'!).
inline long long dim_harmonic(int n, int m, int mp) {
  if (n < 1 || m < 0 || mp < 0) throw std::invalid_argument("dim_harmonic: need n >= 1, m, m' >= 0");
  if (n == 1) return (m == 0 || mp == 0) ? 1 : 0;
  mpz_class num, den, f;
  auto fact = [](int k) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
  };
  num = fact(m + n - 2) * fact(mp + n - 2) * (m + mp + n - 1);
  den = fact(n - 1) * fact(n - 2) * fact(m) * fact(mp);
  return mpz_class(num / den).get_si();
}

namespace detail {
/// sum_nu coeff_nu q^{2 nu} Q_{p-1}^nu Q_p^{L-nu} in rank `ambient`, where
/// coeff are the 2phi1 coefficients and L >= their count - 1.
inline NCPoly radial_series(int ambient, int p, const std::vector<ScalarQ>& coeffs, int L) {
  const NCPoly Qp = q_radius(ambient, p);
  const NCPoly Qs = q_radius(ambient, p - 1);
  NCPoly r(ambient);
  NCPoly qs_pow = NCPoly::constant(ambient, ScalarQ(1));
  for (std::size_t nu = 0; nu < coeffs.size(); ++nu) {
    if (nu > 0) qs_pow = qs_pow * Qs;
    r += (coeffs[nu] * ScalarQ::q_power(2 * static_cast<int>(nu))) * (qs_pow * pow(Qp, L - static_cast<int>(nu)));
  }
  return r;
}
}  // namespace detail

/// Zonal polynomial phi_{m,m'} = H_{m,m'}(z_n^m w_n^{m'}) from its closed
/// form with the little q-Jacobi series in Q_{n-1}/Q.
inline NCPoly zonal(int n, int m, int mp) {
  if (n < 2) throw std::invalid_argument("zonal: rank 1 has no zonal polynomials; use the monomials z^m, w^m'");
  if (m < 0 || mp < 0) throw std::invalid_argument("zonal: negative degree");
  const bool z_branch = m >= mp;
  const int small = z_branch ? mp : m;
  const int big = z_branch ? m : mp;
  const ScalarQ pref = q_pochhammer(ScalarQ::q_power(2 * (n - 1)), 2, small) /
                       q_pochhammer(ScalarQ::q_power(2 * (big + n - 1)), 2, small);
  const auto coeffs =
      phi21_coefficients(Phi21Spec::from_q_exponents(-2 * small, 2 * (big + n - 1), 2 * (n - 1), 2));
  const NCPoly series = pref * detail::radial_series(n, n, coeffs, small);
  if (z_branch) return pow(NCPoly::z(n, n), m - mp) * series;
  return series * pow(NCPoly::w(n, n), mp - m);
}

/// Which closed form produced a separated-variables factor.
enum class FactorBranch { ZPower, WPower };

/// The factor t^{p;m,m'}_{s,s'} in the variables z_1..z_p, w_1..w_p of
/// the rank-`ambient` algebra, so that H_{m,m'}(z_p^{m-s} w_p^{m'-s'} h)
/// = t h for h harmonic of bidegree (s,s') in the first p-1 variables.
inline NCPoly assoc_factor(int p, int m, int mp, int s, int sp, FactorBranch branch, int ambient) {
  if (p < 2 || ambient < p) throw std::invalid_argument("assoc_factor: need 2 <= n <= ambient rank");
  if (s < 0 || sp < 0 || s > m || sp > mp) throw std::invalid_argument("assoc_factor: need 0 <= s <= m, 0 <= s' <= m'");
  if (branch == FactorBranch::ZPower && m - s < mp - sp)
    throw std::invalid_argument("assoc_factor: z-power form needs m - s >= m' - s'");
  if (branch == FactorBranch::WPower && m - s > mp - sp)
    throw std::invalid_argument("assoc_factor: w-power form needs m - s <= m' - s'");
  const NormIndex idx{p, m, mp, s, sp};
  if (branch == FactorBranch::ZPower) {
    const int L = mp - sp;
    const auto coeffs = phi21_coefficients(
        Phi21Spec::from_q_exponents(-2 * L, 2 * (m + sp + p - 1), 2 * (s + sp + p - 1), 2));
    return separated_prefactor(idx) *
           (pow(NCPoly::z(ambient, p), m - s - L) * detail::radial_series(ambient, p, coeffs, L));
  }
  const int L = m - s;
  const auto coeffs = phi21_coefficients(
      Phi21Spec::from_q_exponents(-2 * L, 2 * (mp + s + p - 1), 2 * (s + sp + p - 1), 2));
  return separated_prefactor(idx) *
         (detail::radial_series(ambient, p, coeffs, L) * pow(NCPoly::w(ambient, p), mp - sp - L));
}

inline NCPoly assoc_factor(int p, int m, int mp, int s, int sp, int ambient) {
  return assoc_factor(p, m, mp, s, sp, m - s >= mp - sp ? FactorBranch::ZPower : FactorBranch::WPower, ambient);
}

/// Label of a Xi basis element: ms[j] = m_j and mps[j] = m'_j for
/// j = 2..n (ms[n] = m, mps[n] = m'), plus m_1.
struct HarmonicLabel {
  int n = 2;
  std::vector<int> ms, mps;
  int m1 = 0;

  int m() const { return ms[n]; }
  int mp() const { return mps[n]; }

  /// Bidegree (s, s') of the rank-j harmonic inside the level-(j+1)
  /// factor; level 1 maps m_1 to (m_1, 0) or (0, -m_1).
  std::pair<int, int> level(int j) const {
    if (j >= 2) return {ms[j], mps[j]};
    return m1 >= 0 ? std::pair{m1, 0} : std::pair{0, -m1};
  }

  std::string to_string() const {
    std::string s = "(";
    for (int j = n - 1; j >= 2; --j) s += std::to_string(ms[j]) + (j > 2 ? "," : "");
    s += ";";
    for (int j = n - 1; j >= 2; --j) s += std::to_string(mps[j]) + (j > 2 ? "," : "");
    s += ";" + std::to_string(m1) + ")";
    return s;
  }
  friend bool operator==(const HarmonicLabel&, const HarmonicLabel&) = default;
};

/// All labels for H_{m,m'} in rank n, descending lexicographically on
/// (m_{n-1}, m'_{n-1}, ..., m_2, m'_2, m_1).
inline std::vector<HarmonicLabel> harmonic_labels(int n, int m, int mp) {
  if (n < 2) throw std::invalid_argument("harmonic_labels: need n >= 2");
  std::vector<HarmonicLabel> out;
  HarmonicLabel cur{n, std::vector<int>(n + 1, 0), std::vector<int>(n + 1, 0), 0};
  cur.ms[n] = m;
  cur.mps[n] = mp;
  auto rec = [&](auto&& self, int j) -> void {
    if (j == 1) {
      for (int m1 = cur.ms[2]; m1 >= -cur.mps[2]; --m1) {
        cur.m1 = m1;
        out.push_back(cur);
      }
      return;
    }
    for (int a = cur.ms[j + 1]; a >= 0; --a)
      for (int b = cur.mps[j + 1]; b >= 0; --b) {
        cur.ms[j] = a;
        cur.mps[j] = b;
        self(self, j - 1);
      }
  };
  rec(rec, n - 1);
  return out;
}

/// The element Xi of the label, expanded in rank label.n.
inline NCPoly xi_element(const HarmonicLabel& label) {
  const int n = label.n;
  NCPoly r = label.m1 >= 0 ? pow(NCPoly::z(n, 1), label.m1) : pow(NCPoly::w(n, 1), -label.m1);
  for (int j = 2; j <= n; ++j) {
    const auto [s, sp] = label.level(j - 1);
    r = assoc_factor(j, label.ms[j], label.mps[j], s, sp, n) * r;
  }
  return r;
}

inline std::vector<std::pair<HarmonicLabel, NCPoly>> xi_basis(int n, int m, int mp) {
  std::vector<std::pair<HarmonicLabel, NCPoly>> out;
  for (auto& l : harmonic_labels(n, m, mp)) {
    NCPoly x = xi_element(l);
    out.emplace_back(std::move(l), std::move(x));
  }
  return out;
}

/// <Xi, Xi> as the product of the level ratios along the chain of the label.
inline ScalarQ xi_norm_factors(const HarmonicLabel& label) {
  ScalarQ r(1);
  for (int j = 2; j <= label.n; ++j) {
    const auto [s, sp] = label.level(j - 1);
    r *= separated_norm_ratio(NormIndex{j, label.ms[j], label.mps[j], s, sp});
  }
  return r;
}

/// Copy of a rank-k polynomial in the rank-n algebra with every index
/// shifted by `offset` (offset + k <= n). The shift is applied to the
/// z-first form, so z's stay in front of w's.
inline NCPoly embed(const NCPoly& p, int n, int offset = 0) {
  const int k = p.n();
  if (offset < 0 || offset + k > n) throw std::invalid_argument("embed: indices leave the target rank");
  NCPoly r(n);
  const NCPoly zf = p.to_order(Order::ZFirst);
  for (const auto& [mono, c] : zf.terms()) {
    Monomial e{};
    for (int i = 0; i < k; ++i) {
      e.z[offset + i] = mono.z[i];
      e.w[offset + i] = mono.w[i];
    }
    r.add_term(e, c);
  }
  return r;
}

/// A basis of H_{m,m'} in rank n: the Xi basis for n >= 2 and the single
/// monomial z^m or w^{m'} (or nothing) for n = 1.
inline std::vector<NCPoly> harmonic_basis(int n, int m, int mp) {
  std::vector<NCPoly> out;
  if (n == 1) {
    if (mp == 0) out.push_back(pow(NCPoly::z(1, 1), m));
    else if (m == 0) out.push_back(pow(NCPoly::w(1, 1), mp));
    return out;
  }
  for (auto& [l, x] : xi_basis(n, m, mp)) out.push_back(std::move(x));
  return out;
}

/// Indices of the projection of Q_y^u h_t h_y, where y = (z_1..z_p, w_1..w_p),
/// t = (z_{p+1}..z_n, w_{p+1}..w_n), h_y has bidegree (r, r') and h_t
/// bidegree (s, s'); u = m-r-s = m'-r'-s'.
struct SplitSpec {
  int n = 2, p = 1;
  int m = 0, mp = 0;
  int r = 0, rp = 0, s = 0, sp = 0;

  int u() const { return m - r - s; }
  int sigma() const { return -2 * n - 2 * sp + 2 + 2 * p; }

  void validate() const {
    if (p < 1 || p > n - 1) throw std::invalid_argument("split: need 1 <= p <= n-1");
    if (r < 0 || rp < 0 || s < 0 || sp < 0) throw std::invalid_argument("split: negative degree");
    if (m - r - s != mp - rp - sp || m - r - s < 0)
      throw std::invalid_argument("split: need m-r-s = m'-r'-s' >= 0");
  }
};

namespace ops {
/// Delta_(y) = sum_{i<=p} d_i bar_d_i.
inline LinearOp laplace_y(int n, int p) {
  LinearOp r = partial(n, 1) * bar_partial(n, 1);
  for (int i = 2; i <= p; ++i) r = r + partial(n, i) * bar_partial(n, i);
  return r;
}
/// hat Delta_(y) = sum_{i<=p} q^{2(i-1)} bar_d_i d_i.
inline LinearOp laplace_y_hat(int n, int p) { return laplace_range(n, 1, p, "hatDelta_y"); }
/// Delta_(t) = sum_{i>p} d_i bar_d_i.
inline LinearOp laplace_t(int n, int p) {
  LinearOp r = partial(n, p + 1) * bar_partial(n, p + 1);
  for (int i = p + 2; i <= n; ++i) r = r + partial(n, i) * bar_partial(n, i);
  return r;
}
/// Delta_(t) as sum_{i=1}^{n-p} q^{2(i-1)} bar_d_{p+i} d_{p+i}.
inline LinearOp laplace_t_dual_form(int n, int p) {
  return ScalarQ::q_power(-2 * p) * laplace_range(n, p + 1, n, "Delta_t");
}
}  // namespace ops

/// The basis of tilde-H^(t)_{s,s'}: rank-(n-p) harmonics written z-first
/// and relabeled i -> i + p.
inline std::vector<NCPoly> split_t_basis(int n, int p, int s, int sp) {
  std::vector<NCPoly> out;
  for (const auto& h : harmonic_basis(n - p, s, sp)) out.push_back(embed(h, n, p));
  return out;
}

/// Harmonics in y = (z_1..z_p, w_1..w_p) of bidegree (r, r') in rank n.
inline std::vector<NCPoly> split_y_basis(int n, int p, int r, int rp) {
  std::vector<NCPoly> out;
  for (const auto& h : harmonic_basis(p, r, rp)) out.push_back(embed(h, n, 0));
  return out;
}

/// t^{n,p;m,m'}_{r,r';s,s'} from its little q-Jacobi closed form:
/// (-q^sigma)^u q^{-(u+1)u} (q^{-2(r+r'+p+u-1)};q^2)_u / (q^{-2(m+m'+n-2)};q^2)_u
/// Q^u P_u^{(r+r'+p-1, s+s'+n-p-1)}(q^{-2s} Q_y/Q; q^2).
inline NCPoly split_factor(const SplitSpec& x) {
  x.validate();
  const int u = x.u();
  const ScalarQ lead = (u % 2 ? ScalarQ(-1) : ScalarQ(1)) * ScalarQ::q_power(x.sigma() * u - (u + 1) * u) *
                       q_pochhammer(ScalarQ::q_power(-2 * (x.r + x.rp + x.p + u - 1)), 2, u) /
                       q_pochhammer(ScalarQ::q_power(-2 * (x.m + x.mp + x.n - 2)), 2, u);
  const UPoly P = little_q_jacobi(QJacobiSpec{u, x.r + x.rp + x.p - 1, x.s + x.sp + x.n - x.p - 1});
  const NCPoly Q = q_radius(x.n);
  const NCPoly Qy = q_radius(x.n, x.p);
  NCPoly r(x.n);
  for (int k = 0; k <= u; ++k) {
    const ScalarQ c = P.coeff(k) * ScalarQ::q_power(-2 * x.s * k);
    if (!c.is_zero()) r += c * (pow(Qy, k) * pow(Q, u - k));
  }
  return lead * r;
}

/// The same factor as the finite sum
/// sum_k alpha_k Q^k q^{(s-s'+p-1)k} [u]![r+r'+p+u-1]! / ([u-k]! [r+r'+p+u-k-1]!) Q_y^{u-k}.
inline NCPoly split_factor_sum_form(const SplitSpec& x) {
  x.validate();
  const int u = x.u();
  const int top = x.r + x.rp + x.p + u - 1;
  const NCPoly Q = q_radius(x.n);
  const NCPoly Qy = q_radius(x.n, x.p);
  NCPoly r(x.n);
  for (int k = 0; k <= u; ++k) {
    const ScalarQ c = alpha_coeff(x.n, x.m, x.mp, k) * ScalarQ::q_power((x.s - x.sp + x.p - 1) * k) *
                      q_factorial(u) * q_factorial(top) / (q_factorial(u - k) * q_factorial(top - k));
    r += c * (pow(Q, k) * pow(Qy, u - k));
  }
  return r;
}

/// H_{m,m'}(Q_y^u h_t h_y) = t h_t h_y, after checking that h_y is a
/// harmonic of bidegree (r, r') in y and h_t has bidegree (s, s') in t and
/// is killed by d_i, bar_d_i for i <= p.
inline NCPoly split_project(const SplitSpec& x, const NCPoly& h_t, const NCPoly& h_y) {
  x.validate();
  if (h_t.n() != x.n || h_y.n() != x.n) throw std::invalid_argument("split_project: rank mismatch");
  detail::check_bidegree(h_t, x.s, x.sp, "split_project (h_t)");
  detail::check_bidegree(h_y, x.r, x.rp, "split_project (h_y)");
  const NCPoly yt = h_y.to_order(Order::ZFirst);
  for (const auto& [mono, c] : yt.terms())
    for (int i = x.p; i < x.n; ++i)
      if (mono.z[i] || mono.w[i]) throw std::invalid_argument("split_project: h_y involves t-variables");
  if (!ops::laplace_y(x.n, x.p).apply(h_y).is_zero()) throw std::invalid_argument("split_project: h_y is not harmonic in y");
  for (int i = 1; i <= x.p; ++i)
    if (!ops::partial(x.n, i).apply(h_t).is_zero() || !ops::bar_partial(x.n, i).apply(h_t).is_zero())
      throw std::invalid_argument("split_project: h_t is not annihilated by d_" + std::to_string(i) + ", bar_d_" +
                                  std::to_string(i));
  return split_factor(x) * h_t * h_y;
}

}  // namespace qharm
