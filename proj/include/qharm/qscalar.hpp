// Exact arithmetic in the field Q(v) of rational functions in v, where
// v^2 = q, together with the usual q-combinatorics.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qharm {

/// Dense polynomial in v with integer coefficients; c[i] multiplies v^i.
/// Invariant: no trailing zero coefficients (the zero polynomial is empty).
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit ZPoly(const mpz_class& constant) {
    if (constant != 0) c_.push_back(constant);
  }

  static ZPoly monomial(const mpz_class& coeff, int exponent) {
    ZPoly p;
    if (coeff != 0) {
      p.c_.assign(static_cast<std::size_t>(exponent) + 1, mpz_class(0));
      p.c_.back() = coeff;
    }
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  const mpz_class& lc() const { return c_.back(); }
  mpz_class coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : mpz_class(0);
  }

  /// Index of the lowest nonzero coefficient (v-adic valuation).
  int valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) return static_cast<int>(i);
    return 0;
  }
  bool is_monomial() const {
    if (c_.empty()) return false;
    for (std::size_t i = 0; i + 1 < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  std::size_t term_count() const {
    return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const mpz_class& x) { return x != 0; }));
  }

  mpz_class content() const {
    mpz_class g = 0;
    for (const auto& x : c_) {
      if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  /// Multiply by v^k (k >= 0).
  ZPoly shifted_up(int k) const {
    if (is_zero() || k == 0) return *this;
    ZPoly r;
    r.c_.reserve(c_.size() + static_cast<std::size_t>(k));
    r.c_.assign(static_cast<std::size_t>(k), mpz_class(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
  }
  /// Divide by v^k; requires k <= valuation().
  ZPoly shifted_down(int k) const {
    if (k == 0) return *this;
    ZPoly r;
    r.c_.assign(c_.begin() + k, c_.end());
    return r;
  }

  ZPoly operator-() const {
    ZPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  ZPoly& operator+=(const ZPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  ZPoly& operator-=(const ZPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        if (b.c_[j] != 0) mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    return ZPoly(std::move(r));
  }
  ZPoly& operator*=(const mpz_class& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
  }
  /// Exact division of every coefficient by an integer.
  ZPoly& divexact(const mpz_class& s) {
    for (auto& x : c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), s.get_mpz_t());
    return *this;
  }

  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const ZPoly& a, const ZPoly& b) { return !(a == b); }

  /// Exact quotient a / b in Z[v], or nullopt if b does not divide a.
  friend std::optional<ZPoly> exact_quotient(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw std::domain_error("ZPoly: division by zero polynomial");
    if (a.is_zero()) return ZPoly{};
    if (a.degree() < b.degree()) return std::nullopt;
    if (b.is_monomial()) {
      const int k = b.degree();
      if (a.valuation() < k) return std::nullopt;
      ZPoly q = a.shifted_down(k);
      if (b.lc() != 1) {
        for (auto& x : q.c_) {
          if (!mpz_divisible_p(x.get_mpz_t(), b.lc().get_mpz_t())) return std::nullopt;
          mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), b.lc().get_mpz_t());
        }
      }
      return q;
    }
    std::vector<mpz_class> rem = a.c_;
    const int db = b.degree();
    std::vector<mpz_class> quo(static_cast<std::size_t>(a.degree() - db + 1), mpz_class(0));
    for (int i = a.degree(); i >= db; --i) {
      mpz_class& top = rem[i];
      if (top == 0) continue;
      if (!mpz_divisible_p(top.get_mpz_t(), b.lc().get_mpz_t())) return std::nullopt;
      mpz_class t;
      mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), b.lc().get_mpz_t());
      quo[i - db] = t;
      for (int j = 0; j <= db; ++j)
        if (b.c_[j] != 0) mpz_submul(rem[i - db + j].get_mpz_t(), t.get_mpz_t(), b.c_[j].get_mpz_t());
    }
    for (int i = 0; i < db; ++i)
      if (rem[i] != 0) return std::nullopt;
    return ZPoly(std::move(quo));
  }

  mpq_class evaluate(const mpq_class& x) const {
    mpq_class r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + mpq_class(*it);
    return r;
  }
  mpz_class evaluate(const mpz_class& x) const {
    mpz_class r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  bool is_even() const {
    for (std::size_t i = 1; i < c_.size(); i += 2)
      if (c_[i] != 0) return false;
    return true;
  }

  std::size_t hash() const {
    std::size_t h = c_.size();
    for (const auto& x : c_) h = h * 1000003u ^ static_cast<std::size_t>(mpz_get_si(x.get_mpz_t()));
    return h;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<mpz_class> c_;
};

namespace detail {

inline ZPoly primitive_part(const ZPoly& p) {
  if (p.is_zero()) return p;
  ZPoly r = p;
  mpz_class g = p.content();
  if (p.lc() < 0) g = -g;
  if (g != 1) r.divexact(g);
  return r;
}

inline mpz_class max_norm(const ZPoly& p) {
  mpz_class m = 0;
  for (const auto& x : p.coeffs()) {
    mpz_class a = abs(x);
    if (a > m) m = a;
  }
  return m;
}

// Pseudo-remainder based Euclid on primitive parts.
inline ZPoly gcd_prs(ZPoly a, ZPoly b) {
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    // pseudo-remainder of a by b
    std::vector<mpz_class> r = a.coeffs();
    const int db = b.degree();
    const mpz_class& lb = b.lc();
    for (int i = a.degree(); i >= db; --i) {
      if (r[i] == 0) continue;
      mpz_class t = r[i];
      for (auto& x : r) x *= lb;
      for (int j = 0; j <= db; ++j) r[i - db + j] -= t * b.coeffs()[j];
      // keep coefficients small
      mpz_class g = 0;
      for (const auto& x : r)
        if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g > 1)
        for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
    r.resize(static_cast<std::size_t>(db));
    ZPoly rem(std::move(r));
    a = std::move(b);
    b = primitive_part(rem);
  }
  return primitive_part(a);
}

// Heuristic gcd via evaluation at a large integer and balanced digit
// reconstruction; verified by exact division, falls back to PRS.
inline ZPoly gcd_heuristic(const ZPoly& f, const ZPoly& g) {
  const mpz_class nf = max_norm(f), ng = max_norm(g);
  mpz_class xi = 2 * (nf < ng ? nf : ng) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    const mpz_class ff = f.evaluate(xi), gg = g.evaluate(xi);
    mpz_class h;
    mpz_gcd(h.get_mpz_t(), ff.get_mpz_t(), gg.get_mpz_t());
    std::vector<mpz_class> digits;
    const mpz_class half = xi / 2;
    while (h != 0) {
      mpz_class d = h % xi;
      if (d < 0) d += xi;
      if (d > half) d -= xi;
      digits.push_back(d);
      h = (h - d) / xi;
    }
    ZPoly cand = primitive_part(ZPoly(std::move(digits)));
    if (!cand.is_zero() && exact_quotient(f, cand) && exact_quotient(g, cand)) return cand;
    xi = xi * 73794 / 27011;
  }
  return gcd_prs(f, g);
}

}  // namespace detail

/// Primitive gcd over Z[v] (positive leading coefficient). gcd(0, p) = pp(p).
inline ZPoly poly_gcd(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero()) return detail::primitive_part(b);
  if (b.is_zero()) return detail::primitive_part(a);
  const int va = a.valuation(), vb = b.valuation();
  const int vmin = std::min(va, vb);
  ZPoly one_v = ZPoly::monomial(1, vmin);
  if (a.is_monomial() || b.is_monomial()) return one_v;
  ZPoly ar = a.shifted_down(va), br = b.shifted_down(vb);
  if (ar.degree() == 0 || br.degree() == 0) return one_v;
  ZPoly g = detail::gcd_heuristic(detail::primitive_part(ar), detail::primitive_part(br));
  return vmin == 0 ? g : g.shifted_up(vmin);
}

/// Laurent polynomial in v with rational coefficients.
class LaurentV {
 public:
  LaurentV() = default;
  explicit LaurentV(std::map<int, mpq_class> coeffs) : c_(std::move(coeffs)) {
    std::erase_if(c_, [](const auto& kv) { return kv.second == 0; });
  }
  const std::map<int, mpq_class>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  friend bool operator==(const LaurentV&, const LaurentV&) = default;

 private:
  std::map<int, mpq_class> c_;
};

/// Element of Q(v) in canonical form: num/den with num, den in Z[v] coprime,
/// jointly integer-primitive, and den having positive leading coefficient.
/// Equal values have identical representations.
class ScalarQ {
 public:
  ScalarQ() : den_(mpz_class(1)) {}
  ScalarQ(int value) : num_(mpz_class(value)), den_(mpz_class(1)) {}  // NOLINT(google-explicit-constructor)
  explicit ScalarQ(const mpz_class& value) : num_(value), den_(mpz_class(1)) {}
  explicit ScalarQ(const mpq_class& value) : num_(value.get_num()), den_(value.get_den()) {}
  ScalarQ(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("ScalarQ: zero denominator");
    reduce_full();
  }
  explicit ScalarQ(const LaurentV& l) : ScalarQ() {
    for (const auto& [e, c] : l.coeffs()) *this += ScalarQ(c).times_v_power(e);
  }

  /// v^k for any integer k.
  static ScalarQ v_power(int k) {
    ScalarQ r;
    if (k >= 0)
      r.num_ = ZPoly::monomial(1, k);
    else {
      r.num_ = ZPoly(mpz_class(1));
      r.den_ = ZPoly::monomial(1, -k);
    }
    return r;
  }
  /// q^k = v^{2k}.
  static ScalarQ q_power(int k) { return v_power(2 * k); }

  const ZPoly& num() const { return num_; }
  const ZPoly& den() const { return den_; }
  LaurentV numerator() const { return to_laurent(num_); }
  LaurentV denominator() const { return to_laurent(den_); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  /// True when the value is a Laurent polynomial (denominator c*v^k).
  bool is_laurent() const { return den_.is_monomial(); }

  /// If the value equals v^k exactly, returns k.
  std::optional<int> as_v_power() const {
    if (!num_.is_monomial() || !den_.is_monomial()) return std::nullopt;
    if (num_.lc() != 1 || den_.lc() != 1) return std::nullopt;
    return num_.degree() - den_.degree();
  }
  std::optional<mpq_class> as_rational() const {
    if (num_.degree() > 0 || den_.degree() > 0) return std::nullopt;
    if (is_zero()) return mpq_class(0);
    mpq_class r(num_.lc(), den_.lc());
    r.canonicalize();
    return r;
  }

  /// Multiply by v^k without any gcd work.
  ScalarQ times_v_power(int k) const {
    if (is_zero() || k == 0) return *this;
    ScalarQ r = *this;
    if (k > 0) {
      const int d = std::min(k, r.den_.valuation());
      r.den_ = r.den_.shifted_down(d);
      r.num_ = r.num_.shifted_up(k - d);
    } else {
      const int d = std::min(-k, r.num_.valuation());
      r.num_ = r.num_.shifted_down(d);
      r.den_ = r.den_.shifted_up(-k - d);
    }
    return r;
  }

  ScalarQ inverse() const {
    if (is_zero()) throw std::domain_error("ScalarQ: inverse of zero");
    ScalarQ r;
    r.num_ = den_;
    r.den_ = num_;
    r.fix_sign();
    return r;
  }

  ScalarQ operator-() const {
    ScalarQ r = *this;
    r.num_ = -r.num_;
    return r;
  }

  ScalarQ& operator+=(const ScalarQ& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
      num_ += o.num_;
      if (num_.is_zero()) {
        den_ = ZPoly(mpz_class(1));
        return *this;
      }
      if (!den_.is_one()) {
        ZPoly g = poly_gcd(num_, den_);
        divide_both(g);
      }
      normalize_content();
      return *this;
    }
    ZPoly g = poly_gcd(den_, o.den_);
    ZPoly od = g.is_one() ? o.den_ : *exact_quotient(o.den_, g);
    ZPoly td = g.is_one() ? den_ : *exact_quotient(den_, g);
    num_ = num_ * od + o.num_ * td;
    den_ = den_ * od;
    if (num_.is_zero()) {
      den_ = ZPoly(mpz_class(1));
      return *this;
    }
    if (!g.is_one()) {
      ZPoly g2 = poly_gcd(num_, g);
      divide_both(g2);
    }
    normalize_content();
    return *this;
  }
  ScalarQ& operator-=(const ScalarQ& o) { return *this += -o; }
  ScalarQ& operator*=(const ScalarQ& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = ScalarQ();
    ZPoly g1 = poly_gcd(num_, o.den_);
    ZPoly g2 = poly_gcd(o.num_, den_);
    ZPoly n1 = g1.is_one() ? num_ : *exact_quotient(num_, g1);
    ZPoly d2 = g1.is_one() ? o.den_ : *exact_quotient(o.den_, g1);
    ZPoly n2 = g2.is_one() ? o.num_ : *exact_quotient(o.num_, g2);
    ZPoly d1 = g2.is_one() ? den_ : *exact_quotient(den_, g2);
    num_ = n1 * n2;
    den_ = d1 * d2;
    normalize_content();
    return *this;
  }
  ScalarQ& operator/=(const ScalarQ& o) { return *this *= o.inverse(); }

  friend ScalarQ operator+(ScalarQ a, const ScalarQ& b) { return a += b; }
  friend ScalarQ operator-(ScalarQ a, const ScalarQ& b) { return a -= b; }
  friend ScalarQ operator*(ScalarQ a, const ScalarQ& b) { return a *= b; }
  friend ScalarQ operator/(ScalarQ a, const ScalarQ& b) { return a /= b; }
  friend bool operator==(const ScalarQ& a, const ScalarQ& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const ScalarQ& a, const ScalarQ& b) { return !(a == b); }

  ScalarQ pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    ScalarQ result(1), base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  /// True when the value is invariant under v -> -v, i.e. lies in Q(q).
  bool is_even() const { return num_.is_even() && den_.is_even(); }

  /// Exact value at v = v0.
  mpq_class eval_v(const mpq_class& v0) const {
    const mpq_class d = den_.evaluate(v0);
    if (d == 0) throw std::domain_error("ScalarQ: pole at evaluation point");
    mpq_class r = num_.evaluate(v0) / d;
    r.canonicalize();
    return r;
  }

  /// Exact value at q = q0. Requires either an element of Q(q) or a
  /// perfect-square q0 (so that v0 = sqrt(q0) is rational).
  mpq_class eval_q(const mpq_class& q0) const {
    if (is_even()) {
      auto half = [](const ZPoly& p) {
        std::vector<mpz_class> c;
        for (std::size_t i = 0; i < p.coeffs().size(); i += 2) c.push_back(p.coeffs()[i]);
        return ZPoly(std::move(c));
      };
      const mpq_class d = half(den_).evaluate(q0);
      if (d == 0) throw std::domain_error("ScalarQ: pole at evaluation point");
      mpq_class r = half(num_).evaluate(q0) / d;
      r.canonicalize();
      return r;
    }
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), q0.get_num_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), q0.get_den_mpz_t());
    if (rn * rn != q0.get_num() || rd * rd != q0.get_den())
      throw std::domain_error("ScalarQ: odd power of v at non-square q0 has no rational value");
    return eval_v(mpq_class(rn, rd));
  }

  std::size_t hash() const { return num_.hash() * 31u + den_.hash(); }

  std::string to_string() const;

 private:
  static LaurentV to_laurent(const ZPoly& p) {
    std::map<int, mpq_class> m;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
      if (p.coeffs()[i] != 0) m.emplace(static_cast<int>(i), mpq_class(p.coeffs()[i]));
    return LaurentV(std::move(m));
  }
  void divide_both(const ZPoly& g) {
    if (g.is_one()) return;
    num_ = *exact_quotient(num_, g);
    den_ = *exact_quotient(den_, g);
  }
  void fix_sign() {
    if (den_.lc() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }
  void normalize_content() {
    if (num_.is_zero()) {
      den_ = ZPoly(mpz_class(1));
      return;
    }
    mpz_class g = den_.content();
    if (g != 1) {
      mpz_class gn = num_.content();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), gn.get_mpz_t());
    }
    if (g != 1) {
      num_.divexact(g);
      den_.divexact(g);
    }
    fix_sign();
  }
  void reduce_full() {
    if (num_.is_zero()) {
      den_ = ZPoly(mpz_class(1));
      return;
    }
    divide_both(poly_gcd(num_, den_));
    normalize_content();
  }

  ZPoly num_;
  ZPoly den_;
};

inline std::ostream& operator<<(std::ostream& os, const ScalarQ& x) { return os << x.to_string(); }

// ---------------------------------------------------------------------------
// Text form

namespace detail {

inline std::string format_zpoly(const ZPoly& p, const char* var = "v") {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const mpz_class& c = p.coeffs()[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    const mpz_class a = neg ? mpz_class(-c) : c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    std::string mono;
    if (i == 1)
      mono = var;
    else if (i > 1)
      mono = std::string(var) + "^" + std::to_string(i);
    if (mono.empty())
      out += a.get_str();
    else if (a == 1)
      out += mono;
    else
      out += a.get_str() + "*" + mono;
  }
  return out;
}

inline bool needs_parens(const ZPoly& p) {
  if (p.term_count() > 1) return true;
  return p.degree() > 0 && abs(p.lc()) != 1;
}

}  // namespace detail

inline std::string ScalarQ::to_string() const {
  if (den_.is_one()) return detail::format_zpoly(num_);
  std::string n = detail::format_zpoly(num_);
  std::string d = detail::format_zpoly(den_);
  if (detail::needs_parens(num_)) n = "(" + n + ")";
  if (detail::needs_parens(den_) || (den_.degree() > 0 && den_.lc() != 1)) d = "(" + d + ")";
  return n + "/" + d;
}

/// Recursive-descent parser for arithmetic expressions over a ring T.
/// Grammar: sums/differences of products/quotients of signed powers of
/// atoms; exponents are (optionally braced or parenthesized) integers.
/// `atom` resolves identifiers; `divide` implements '/'.
template <class T>
class ExpressionParser {
 public:
  using AtomFn = std::function<std::optional<T>(std::string_view)>;
  using DivFn = std::function<T(const T&, const T&)>;
  using PowFn = std::function<T(const T&, int)>;

  ExpressionParser(std::string_view text, AtomFn atom, DivFn divide, PowFn power)
      : s_(text), atom_(std::move(atom)), div_(std::move(divide)), pow_(std::move(power)) {}

  T parse() {
    T r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at column " + std::to_string(pos_ + 1) + ": " + what + " in \"" +
                                std::string(s_) + "\"");
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  T expr() {
    T acc = term();
    for (;;) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }
  T term() {
    T acc = unary();
    for (;;) {
      if (accept('*'))
        acc = acc * unary();
      else if (accept('/'))
        acc = div_(acc, unary());
      else
        return acc;
    }
  }
  T unary() {
    if (accept('-')) return T(0) - unary();
    if (accept('+')) return unary();
    return power();
  }
  T power() {
    T base = atom();
    if (accept('^')) return pow_(base, exponent());
    return base;
  }
  int exponent() {
    char close = 0;
    if (accept('{'))
      close = '}';
    else if (accept('('))
      close = ')';
    skip_ws();
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
    if (close && !accept(close)) fail(std::string("expected '") + close + "'");
    return neg ? -e : e;
  }
  T atom() {
    skip_ws();
    if (accept('(')) {
      T r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class z(std::string(s_.substr(start, pos_ - start)));
      return T(z);
    }
    if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      auto name = s_.substr(start, pos_ - start);
      if (auto v = atom_(name)) return *v;
      pos_ = start;
      fail("unknown symbol '" + std::string(name) + "'");
    }
    fail("expected number, symbol or '('");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  AtomFn atom_;
  DivFn div_;
  PowFn pow_;
};

/// Parses the canonical text form (and anything else in the expression
/// grammar over v; "q" is sugar for v^2).
inline ScalarQ parse_scalar(std::string_view text) {
  ExpressionParser<ScalarQ> p(
      text,
      [](std::string_view name) -> std::optional<ScalarQ> {
        if (name == "v") return ScalarQ::v_power(1);
        if (name == "q") return ScalarQ::q_power(1);
        return std::nullopt;
      },
      [](const ScalarQ& a, const ScalarQ& b) { return a / b; }, [](const ScalarQ& a, int e) { return a.pow(e); });
  return p.parse();
}

// ---------------------------------------------------------------------------
// q-combinatorics

/// [a] = (q^a - q^-a)/(q - q^-1).
inline ScalarQ q_number(int a) {
  if (a == 0) return ScalarQ(0);
  const int s = a < 0 ? -1 : 1;
  const int k = a < 0 ? -a : a;
  // q^{k-1} + q^{k-3} + ... + q^{-(k-1)}, in v-exponents shifted by 2(k-1)
  std::vector<mpz_class> c(static_cast<std::size_t>(4 * (k - 1) + 1), mpz_class(0));
  for (int j = 0; j < k; ++j) c[static_cast<std::size_t>(4 * j)] = s;
  return ScalarQ(ZPoly(std::move(c)), ZPoly::monomial(1, 2 * (k - 1)));
}

/// [s]! = [s][s-1]...[1], [0]! = 1.
inline ScalarQ q_factorial(int s) {
  if (s < 0) throw std::invalid_argument("q_factorial: negative argument");
  ScalarQ r(1);
  for (int j = 2; j <= s; ++j) r *= q_number(j);
  return r;
}

/// (a; q^e)_s = prod_{j<s} (1 - a q^{e j}).
inline ScalarQ q_pochhammer(const ScalarQ& a, int base_exp, int s) {
  if (s < 0) throw std::invalid_argument("q_pochhammer: negative length");
  ScalarQ r(1);
  for (int j = 0; j < s; ++j) {
    r *= ScalarQ(1) - a.times_v_power(2 * base_exp * j);
    if (r.is_zero()) break;
  }
  return r;
}

/// {x} = (x - x^{-1})/(q - q^{-1}).
inline ScalarQ q_bracket(const ScalarQ& x) {
  return (x - x.inverse()) / (ScalarQ::q_power(1) - ScalarQ::q_power(-1));
}

}  // namespace qharm

template <>
struct std::hash<qharm::ScalarQ> {
  std::size_t operator()(const qharm::ScalarQ& x) const noexcept { return x.hash(); }
};
