// The invariant functional h on the quantum sphere Q = 1, its Jackson
// integral form, the scalar product <p1, p2> = h(p1 p2*), and restriction
// of polynomials to the sphere through harmonic representatives.
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qharm/harmonics.hpp"
#include "qharm/linalg.hpp"

namespace qharm {

/// Commutative polynomial in Q_1..Q_k: exponent vector -> coefficient.
using QPoly = std::map<std::vector<int>, ScalarQ>;

/// h(w_1^{mu_1}..w_n^{mu_n} z_n^{mu_n}..z_1^{mu_1})
///   = (q^2;q^2)_{mu_1}..(q^2;q^2)_{mu_n} (q^2;q^2)_{n-1} / (q^2;q^2)_{|mu|+n-1}.
inline ScalarQ h_profile(const std::vector<int>& mu) {
  const int n = static_cast<int>(mu.size());
  const ScalarQ q2 = ScalarQ::q_power(2);
  ScalarQ num = q_pochhammer(q2, 2, n - 1);
  int total = 0;
  for (int x : mu) {
    num *= q_pochhammer(q2, 2, x);
    total += x;
  }
  return num / q_pochhammer(q2, 2, total + n - 1);
}

/// h on an arbitrary element (Q is read as 1): weight-nonzero terms vanish;
/// a w-first zero-weight term w^mu z_1^{mu_1}..z_n^{mu_n} equals
/// q^{sum_{i<j} mu_i mu_j} w^mu z_n^{mu_n}..z_1^{mu_1}.
inline ScalarQ h_functional(const NCPoly& p) {
  ScalarQ r;
  const int n = p.n();
  const NCPoly conv = p.to_order(Order::WFirst);
  for (const auto& [mono, c] : conv.terms()) {
    if (!mono.zero_weight()) continue;
    std::vector<int> mu(mono.w.begin(), mono.w.begin() + n);
    int cross = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) cross += mu[i] * mu[j];
    r += c * ScalarQ::q_power(cross) * h_profile(mu);
  }
  return r;
}

/// (q^2;q^2)_{n-1}/(1-q^2)^{n-1} times the iterated Jackson q^2-integral
/// over 0 <= Q_1 <= Q_2 <= .. <= Q_{n-1} <= 1. Exponent vectors have n-1
/// entries (for Q_1..Q_{n-1}).
inline ScalarQ h_jackson(int n, const QPoly& f) {
  if (n < 1) throw std::invalid_argument("h_jackson: need n >= 1");
  const ScalarQ one(1);
  const ScalarQ one_minus_q2 = one - ScalarQ::q_power(2);
  auto integral_factor = [&](int k) { return one_minus_q2 / (one - ScalarQ::q_power(2 * (k + 1))); };
  ScalarQ total;
  for (const auto& [ex, c] : f) {
    if (static_cast<int>(ex.size()) != n - 1) throw std::invalid_argument("h_jackson: exponent vector must have n-1 entries");
    ScalarQ term = c;
    int carry = 0;  // exponent of the current upper limit
    for (int i = 0; i < n - 1; ++i) {
      const int k = ex[i] + carry;
      term *= integral_factor(k);
      carry = k + 1;
    }
    total += term;
  }
  return total * q_pochhammer(ScalarQ::q_power(2), 2, n - 1) / one_minus_q2.pow(n - 1);
}

/// Writes a weight-zero element as a polynomial in the commuting Q_1..Q_n
/// (exponent vectors of length n) by an exact linear solve per bidegree.
inline QPoly zero_weight_to_Q(const NCPoly& p) {
  const int n = p.n();
  const NCPoly zf = p.to_order(Order::ZFirst);
  for (const auto& [mono, c] : zf.terms())
    if (!mono.zero_weight()) throw std::invalid_argument("zero_weight_to_Q: input has terms of nonzero weight");
  QPoly out;
  for (const auto& [m, mp] : zf.bidegrees()) {
    const NCPoly part = zf.bidegree_component(m, mp);
    // Q-monomials of degree m and zero-weight PBW monomials of A_{m,m}
    const std::vector<Exps> qexps = compositions(n, m);
    std::vector<Monomial> zw;
    for (const auto& e : compositions(n, m)) zw.push_back(Monomial{e, e});
    std::map<Monomial, std::size_t> row;
    for (std::size_t i = 0; i < zw.size(); ++i) row[zw[i]] = i;
    Matrix a(zw.size(), qexps.size());
    for (std::size_t j = 0; j < qexps.size(); ++j) {
      NCPoly prod = NCPoly::constant(n, ScalarQ(1));
      for (int i = 0; i < n; ++i)
        if (qexps[j][i]) prod = prod * pow(q_radius(n, i + 1), qexps[j][i]);
      for (const auto& [mono, c] : prod.terms()) a.at(row.at(mono), j) = c;
    }
    Vec b(zw.size());
    for (const auto& [mono, c] : part.terms()) b[row.at(mono)] = c;
    const auto x = solve(a, b);
    if (!x) throw std::logic_error("zero_weight_to_Q: inconsistent system");
    for (std::size_t j = 0; j < qexps.size(); ++j)
      if (!(*x)[j].is_zero()) out[std::vector<int>(qexps[j].begin(), qexps[j].begin() + n)] += (*x)[j];
  }
  return out;
}

/// Sets Q_n = 1, leaving a polynomial in Q_1..Q_{n-1}.
inline QPoly restrict_top_radius(const QPoly& f) {
  QPoly out;
  for (const auto& [ex, c] : f) {
    std::vector<int> e(ex.begin(), ex.end() - 1);
    auto& slot = out[e];
    slot += c;
    if (slot.is_zero()) out.erase(e);
  }
  return out;
}

/// <p1, p2> = h(p1 p2*).
inline ScalarQ inner_product(const NCPoly& p1, const NCPoly& p2) {
  if (p1.n() != p2.n()) throw std::invalid_argument("inner_product: rank mismatch");
  return h_functional(p1 * star(p2));
}

inline Matrix gram_matrix(const std::vector<NCPoly>& elements) {
  Matrix g(elements.size(), elements.size());
  std::vector<NCPoly> stars;
  for (const auto& e : elements) stars.push_back(star(e));
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j) g.at(i, j) = h_functional(elements[i] * stars[j]);
  return g;
}

/// The harmonic representative of p on the sphere: sum over bidegrees
/// and over j of the components h_j of p = sum_j Q^j h_j.
inline NCPoly restrict_to_sphere(const NCPoly& p) {
  NCPoly r(p.n());
  for (const auto& [m, mp] : p.bidegrees())
    for (const auto& [j, h] : harmonic_decompose(p.bidegree_component(m, mp))) r += h;
  return r;
}

}  // namespace qharm
