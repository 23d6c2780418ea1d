// Decimal evaluation of Q(v) elements at a rational q0 in (0, 1), with
// v0 = sqrt(q0) carried to 64 significant digits.
#pragma once

#include <gmpxx.h>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <stdexcept>
#include <string>

#include "qharm/qscalar.hpp"

namespace qharm {

using Real = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<64>>;

inline Real to_real(const mpz_class& x) { return Real(x.get_str()); }
inline Real to_real(const mpq_class& x) { return to_real(x.get_num()) / to_real(x.get_den()); }

/// Parses "a/b" or an integer into a rational.
inline mpq_class parse_rational(const std::string& text) {
  mpq_class r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational number: '" + text + "'");
  r.canonicalize();
  return r;
}

class NumericPoint {
 public:
  explicit NumericPoint(const mpq_class& q0) : q0_(q0) {
    if (q0 <= 0 || q0 >= 1) throw std::invalid_argument("evaluation point q0 must satisfy 0 < q0 < 1");
    v0_ = boost::multiprecision::sqrt(to_real(q0));
  }

  const mpq_class& q0() const { return q0_; }
  const Real& v0() const { return v0_; }

  Real eval(const ZPoly& p) const {
    Real r = 0;
    for (int i = p.degree(); i >= 0; --i) r = r * v0_ + to_real(p.coeff(i));
    return r;
  }
  Real eval(const ScalarQ& x) const {
    if (x.is_even()) return to_real(x.eval_q(q0_));
    const Real d = eval(x.den());
    if (d == 0) throw std::domain_error("denominator vanishes at the evaluation point");
    return eval(x.num()) / d;
  }

  /// Square root of a value that must be positive at q0.
  Real sqrt_positive(const ScalarQ& x) const {
    const Real r = eval(x);
    if (r < 0) throw std::domain_error("negative radicand " + x.to_string());
    return boost::multiprecision::sqrt(r);
  }

 private:
  mpq_class q0_;
  Real v0_;
};

/// Sign of x at q0: exact when x lies in Q(q), otherwise from the
/// 64-digit value.
inline int sign_at(const ScalarQ& x, const mpq_class& q0) {
  if (x.is_even()) return sgn(x.eval_q(q0));
  const Real r = NumericPoint(q0).eval(x);
  return r > 0 ? 1 : (r < 0 ? -1 : 0);
}

inline std::string to_decimal(const Real& x, int digits = 20) { return x.str(digits, std::ios_base::scientific); }

}  // namespace qharm
