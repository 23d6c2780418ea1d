// Terminating basic hypergeometric series 2phi1 and little q-Jacobi
// polynomials with exact coefficients.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qharm/qscalar.hpp"

namespace qharm {

/// Polynomial in one commuting indeterminate x over Q(v); c[k] multiplies x^k.
class UPoly {
 public:
  UPoly() = default;
  UPoly(int constant) : UPoly(ScalarQ(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit UPoly(const mpz_class& constant) : UPoly(ScalarQ(constant)) {}
  explicit UPoly(const ScalarQ& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
  }
  explicit UPoly(std::vector<ScalarQ> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly x() { return UPoly(std::vector<ScalarQ>{ScalarQ(0), ScalarQ(1)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<ScalarQ>& coeffs() const { return c_; }
  ScalarQ coeff(int k) const { return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : ScalarQ(0); }

  ScalarQ evaluate(const ScalarQ& x) const {
    ScalarQ r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<ScalarQ> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const ScalarQ& s, UPoly a) {
    if (s.is_zero()) return {};
    for (auto& x : a.c_) x *= s;
    return a;
  }
  friend bool operator==(const UPoly&, const UPoly&) = default;

  UPoly pow(int e) const {
    if (e < 0) throw std::invalid_argument("UPoly: negative power");
    UPoly r(1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  /// Text form over v and x, e.g. "(v^2 + 1)*x^2 - 1".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const ScalarQ& c = c_[k];
      if (c.is_zero()) continue;
      std::string mono = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
      std::string cs = c.to_string();
      bool neg = false;
      if (!out.empty() && c.num().lc() < 0) {
        neg = true;
        cs = (-c).to_string();
      }
      const bool compound = cs.find_first_of("+/") != std::string::npos ||
                            cs.find(" - ") != std::string::npos;
      std::string term;
      if (mono.empty())
        term = cs;
      else if (cs == "1")
        term = mono;
      else if (cs == "-1")
        term = "-" + mono;
      else
        term = (compound ? "(" + cs + ")" : cs) + "*" + mono;
      if (out.empty())
        out = term;
      else
        out += (neg ? " - " : " + ") + term;
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<ScalarQ> c_;
};

/// Parses polynomials in x over Q(v); division is allowed by constants only.
inline UPoly parse_upoly(std::string_view text) {
  ExpressionParser<UPoly> p(
      text,
      [](std::string_view name) -> std::optional<UPoly> {
        if (name == "x") return UPoly::x();
        if (name == "v") return UPoly(ScalarQ::v_power(1));
        if (name == "q") return UPoly(ScalarQ::q_power(1));
        return std::nullopt;
      },
      [](const UPoly& a, const UPoly& b) {
        if (b.degree() != 0) throw std::invalid_argument("parse error: division by a non-constant polynomial in x");
        return b.coeff(0).inverse() * a;
      },
      [](const UPoly& a, int e) {
        if (e >= 0) return a.pow(e);
        if (a.degree() != 0) throw std::invalid_argument("parse error: negative power of a polynomial in x");
        return UPoly(a.coeff(0).pow(e));
      });
  return p.parse();
}

/// Parameters of a terminating 2phi1(a, b; c; base, x): a = base^{-N}.
struct Phi21Spec {
  ScalarQ a, b, c, base;
  int termination = 0;

  /// All parameters as integer powers of q.
  static Phi21Spec from_q_exponents(int a_exp, int b_exp, int c_exp, int base_exp) {
    return make(ScalarQ::q_power(a_exp), ScalarQ::q_power(b_exp), ScalarQ::q_power(c_exp),
                ScalarQ::q_power(base_exp));
  }

  /// Detects the termination index from a (or b, which is then swapped
  /// into the first slot) and validates the denominators.
  static Phi21Spec make(ScalarQ a, ScalarQ b, ScalarQ c, ScalarQ base) {
    auto index_of = [&](const ScalarQ& x) -> std::optional<int> {
      if (x.is_one()) return 0;
      const auto ex = x.as_v_power();
      const auto eb = base.as_v_power();
      if (!ex || !eb || *eb == 0) return std::nullopt;
      if (*ex % *eb != 0 || -*ex / *eb < 0) return std::nullopt;
      return -*ex / *eb;
    };
    auto na = index_of(a);
    auto nb = index_of(b);
    if (!na && nb) {
      std::swap(a, b);
      na = nb;
    }
    if (!na) throw std::invalid_argument("2phi1: parameters do not terminate (need a = base^-N)");
    if (nb && *nb < *na) {
      std::swap(a, b);
      na = nb;
    }
    Phi21Spec s{std::move(a), std::move(b), std::move(c), std::move(base), *na};
    ScalarQ cj = s.c;
    for (int j = 0; j < s.termination; ++j, cj *= s.base)
      if (cj.is_one()) throw std::invalid_argument("2phi1: vanishing denominator (c;base)_k");
    return s;
  }
};

/// Coefficients (a;base)_k (b;base)_k / ((c;base)_k (base;base)_k), k = 0..N.
inline std::vector<ScalarQ> phi21_coefficients(const Phi21Spec& s) {
  std::vector<ScalarQ> out;
  out.reserve(static_cast<std::size_t>(s.termination) + 1);
  ScalarQ term(1), ak = s.a, bk = s.b, ck = s.c, qk = s.base;
  out.push_back(term);
  for (int k = 1; k <= s.termination; ++k) {
    term *= (ScalarQ(1) - ak) * (ScalarQ(1) - bk) / ((ScalarQ(1) - ck) * (ScalarQ(1) - qk));
    out.push_back(term);
    ak *= s.base;
    bk *= s.base;
    ck *= s.base;
    qk *= s.base;
  }
  return out;
}

/// The series as a polynomial in the argument x; degree N.
inline UPoly phi21_symbolic(const Phi21Spec& s) { return UPoly(phi21_coefficients(s)); }

inline ScalarQ phi21_eval(const Phi21Spec& s, const ScalarQ& x) { return phi21_symbolic(s).evaluate(x); }

struct QJacobiSpec {
  int k = 0;
  int alpha = 0;
  int beta = 0;
  ScalarQ base = ScalarQ::q_power(2);
};

/// P_k^{(alpha,beta)}(x; base) = 2phi1(base^{-k}, base^{alpha+beta+k+1}; base^{alpha+1}; base; base*x).
inline UPoly little_q_jacobi(const QJacobiSpec& spec) {
  if (spec.k < 0) throw std::invalid_argument("little_q_jacobi: negative degree");
  const ScalarQ& b = spec.base;
  Phi21Spec s = Phi21Spec::make(b.pow(-spec.k), b.pow(spec.alpha + spec.beta + spec.k + 1), b.pow(spec.alpha + 1), b);
  std::vector<ScalarQ> c = phi21_coefficients(s);
  ScalarQ bk(1);
  for (auto& x : c) {
    x *= bk;
    bk *= b;
  }
  return UPoly(std::move(c));
}

/// Index data of the norm coefficient of a separated-variables factor.
struct NormIndex {
  int n = 2;
  int m = 0, mp = 0;
  int s = 0, sp = 0;
};

namespace detail {
inline void check_norm_index(const NormIndex& x) {
  if (x.n < 2 || x.s < 0 || x.sp < 0 || x.s > x.m || x.sp > x.mp)
    throw std::invalid_argument("norm index out of range: need n >= 2, 0 <= s <= m, 0 <= s' <= m'");
}
}  // namespace detail

/// The tabulated norm coefficient
///   b = (1 - q^{2N}) q^{2(m'-s')N} (q^2;q^2)_{m-s} (q^2;q^2)_{m'-s'}
///       / ((1 - q^{2(2m+n-1)}) (q^{2N};q^2)_{m-s} (q^{2N};q^2)_{m'-s'}),
/// with N = n + s + s' - 1, exactly as tabulated for the orthogonality
/// relation of the little q-Jacobi factors. See `separated_weight_norm` for
/// the value that the scalar product actually produces.
inline ScalarQ q_jacobi_norm(const NormIndex& x) {
  detail::check_norm_index(x);
  const int N = x.n + x.s + x.sp - 1;
  const ScalarQ q2 = ScalarQ::q_power(2);
  ScalarQ num = (ScalarQ(1) - ScalarQ::q_power(2 * N)) * ScalarQ::q_power(2 * (x.mp - x.sp) * N) *
                q_pochhammer(q2, 2, x.m - x.s) * q_pochhammer(q2, 2, x.mp - x.sp);
  ScalarQ den = (ScalarQ(1) - ScalarQ::q_power(2 * (2 * x.m + x.n - 1))) * q_pochhammer(ScalarQ::q_power(2 * N), 2, x.m - x.s) *
                q_pochhammer(ScalarQ::q_power(2 * N), 2, x.mp - x.sp);
  return num / den;
}

/// c^{mm'}_{ss'} = q^{-2(m-s)(m'-s')} (q^{-2(m'+s+n-2)};q^2)_{m'-s'} / (q^{-2(m+m'+n-2)};q^2)_{m'-s'}
///               = (q^{2(s+s'+n-1)};q^2)_{m'-s'} / (q^{2(m+s'+n-1)};q^2)_{m'-s'}
/// for m-s >= m'-s', and the mirrored value (m,s) <-> (m',s') otherwise.
inline ScalarQ separated_prefactor(const NormIndex& x) {
  detail::check_norm_index(x);
  const bool z_branch = x.m - x.s >= x.mp - x.sp;
  const int len = z_branch ? x.mp - x.sp : x.m - x.s;
  const int big = z_branch ? x.m : x.mp;
  return q_pochhammer(ScalarQ::q_power(2 * (x.s + x.sp + x.n - 1)), 2, len) /
         q_pochhammer(ScalarQ::q_power(2 * (big + (z_branch ? x.sp : x.s) + x.n - 1)), 2, len);
}

/// The prefactor in its negative-exponent product form
/// q^{-2(m-s)(m'-s')} (q^{-2m'-2s-2n+4};q^2)_{m'-s'} / (q^{-2m-2m'-2n+4};q^2)_{m'-s'},
/// mirrored for m-s < m'-s'.
inline ScalarQ separated_prefactor_product_form(const NormIndex& x) {
  detail::check_norm_index(x);
  const bool z_branch = x.m - x.s >= x.mp - x.sp;
  const int len = z_branch ? x.mp - x.sp : x.m - x.s;
  const int other = z_branch ? x.mp + x.s : x.m + x.sp;
  return ScalarQ::q_power(-2 * (x.m - x.s) * (x.mp - x.sp)) *
         q_pochhammer(ScalarQ::q_power(-2 * other - 2 * x.n + 4), 2, len) /
         q_pochhammer(ScalarQ::q_power(-2 * (x.m + x.mp + x.n - 2)), 2, len);
}

/// (q^{2(s+n-1)};q^2)_{m'-s'} / (q^{2(m+n-1)};q^2)_{m'-s'}: the short form
/// tabulated next to the product form. It agrees with the product form
/// only when s' = 0 (mirrored: s = 0).
inline ScalarQ separated_prefactor_short_form(const NormIndex& x) {
  detail::check_norm_index(x);
  const bool z_branch = x.m - x.s >= x.mp - x.sp;
  const int top = z_branch ? x.s : x.sp;
  const int big = z_branch ? x.m : x.mp;
  const int len = z_branch ? x.mp - x.sp : x.m - x.s;
  return q_pochhammer(ScalarQ::q_power(2 * (top + x.n - 1)), 2, len) /
         q_pochhammer(ScalarQ::q_power(2 * (big + x.n - 1)), 2, len);
}

/// Squared norm of the little q-Jacobi factor (c = 1) against the weight
/// that h induces on the sphere, relative to the lower rank:
///   (1 - q^{2(n-1)}) q^{2e} (q^2;q^2)_{m-s} (q^2;q^2)_{m'-s'}
///   / ((1 - q^{2(m+m'+n-1)}) (q^{2N};q^2)_{m-s} (q^{2N};q^2)_{m'-s'}),
/// N = n + s + s' - 1, e = (m-s-m'+s')(n-1) + N(m'-s') for m-s >= m'-s'
/// and e = (m'-s'-m+s)(s+s') + N(m-s) otherwise.
inline ScalarQ separated_weight_norm(const NormIndex& x) {
  detail::check_norm_index(x);
  const int N = x.n + x.s + x.sp - 1;
  const int d = x.m - x.s, dp = x.mp - x.sp;
  const int e = d >= dp ? (d - dp) * (x.n - 1) + N * dp : (dp - d) * (x.s + x.sp) + N * d;
  const ScalarQ q2 = ScalarQ::q_power(2);
  const ScalarQ qN = ScalarQ::q_power(2 * N);
  return (ScalarQ(1) - ScalarQ::q_power(2 * (x.n - 1))) * ScalarQ::q_power(2 * e) * q_pochhammer(q2, 2, d) *
         q_pochhammer(q2, 2, dp) /
         ((ScalarQ(1) - ScalarQ::q_power(2 * (x.m + x.mp + x.n - 1))) * q_pochhammer(qN, 2, d) * q_pochhammer(qN, 2, dp));
}

/// <t h, t h>_n / <h, h>_{n-1} for the factor t = t^{n;m,m'}_{s,s'} and any
/// h of bidegree (s, s') in the first n-1 generators: c^2 times
/// `separated_weight_norm`.
inline ScalarQ separated_norm_ratio(const NormIndex& x) {
  const ScalarQ c = separated_prefactor(x);
  return c * c * separated_weight_norm(x);
}

}  // namespace qharm
