// Linear operators on A: gradations, multiplication operators,
// q-derivatives, the q-Laplace operator and the U_q(gl_n) and U_q(sl_2)
// actions.
#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qharm/algebra.hpp"

namespace qharm {

/// Linear operator on A given by its values on the PBW monomials of one
/// order. Values are memoized per monomial; the cache is shared by copies.
class LinearOp {
 public:
  using Rule = std::function<NCPoly(const Monomial&)>;
  using Shift = std::pair<int, int>;

  LinearOp(int n, Order in, Order out, Rule rule, std::string name, std::optional<Shift> shift = std::nullopt)
      : n_(n), in_(in), out_(out), shift_(shift), state_(std::make_shared<State>()) {
    state_->rule = std::move(rule);
    state_->name = std::move(name);
  }

  int n() const { return n_; }
  Order input_order() const { return in_; }
  Order output_order() const { return out_; }
  /// Bidegree shift (dm, dm') when the operator is homogeneous.
  std::optional<Shift> shift() const { return shift_; }
  const std::string& name() const { return state_->name; }

  NCPoly apply_monomial(const Monomial& m) const {
    {
      std::lock_guard<std::mutex> lock(state_->mu);
      if (auto it = state_->cache.find(m); it != state_->cache.end()) return it->second;
    }
    NCPoly r = state_->rule(m);
    if (r.n() != n_) throw std::logic_error("operator " + name() + " produced a polynomial of wrong rank");
    r = r.to_order(out_);
    std::lock_guard<std::mutex> lock(state_->mu);
    return state_->cache.emplace(m, std::move(r)).first->second;
  }

  NCPoly apply(const NCPoly& p) const {
    if (p.n() != n_) throw std::invalid_argument("operator " + name() + ": rank mismatch");
    const NCPoly in = p.to_order(in_);
    NCPoly r(n_, out_);
    for (const auto& [m, c] : in.terms()) {
      const NCPoly img = apply_monomial(m);
      for (const auto& [mi, ci] : img.terms()) r.add_term(mi, c * ci);
    }
    return r;
  }
  NCPoly operator()(const NCPoly& p) const { return apply(p); }

  /// Composition: (a * b)(p) = a(b(p)).
  friend LinearOp operator*(const LinearOp& a, const LinearOp& b) {
    check_same_rank(a, b);
    std::optional<Shift> s;
    if (a.shift_ && b.shift_) s = Shift{a.shift_->first + b.shift_->first, a.shift_->second + b.shift_->second};
    return LinearOp(
        b.n_, b.in_, a.out_, [a, b](const Monomial& m) { return a.apply(b.apply_monomial(m)); },
        a.name() + "*" + b.name(), s);
  }
  friend LinearOp operator+(const LinearOp& a, const LinearOp& b) { return combine(a, b, ScalarQ(1), "+"); }
  friend LinearOp operator-(const LinearOp& a, const LinearOp& b) { return combine(a, b, ScalarQ(-1), "-"); }
  friend LinearOp operator*(const ScalarQ& s, const LinearOp& a) {
    return LinearOp(
        a.n_, a.in_, a.out_, [s, a](const Monomial& m) { return s * a.apply_monomial(m); },
        "(" + s.to_string() + ")" + a.name(), a.shift_);
  }

  LinearOp pow(int k) const {
    if (k < 0) throw std::invalid_argument("LinearOp: negative power");
    LinearOp r = identity(n_, in_);
    for (int i = 0; i < k; ++i) r = *this * r;
    return r;
  }

  static LinearOp identity(int n, Order order = Order::ZFirst) {
    return LinearOp(
        n, order, order, [n, order](const Monomial& m) { return NCPoly::monomial(n, m, ScalarQ(1), order); }, "1",
        Shift{0, 0});
  }
  static LinearOp zero(int n) {
    return LinearOp(n, Order::ZFirst, Order::ZFirst, [n](const Monomial&) { return NCPoly(n); }, "0", std::nullopt);
  }

  /// Operator scaling each monomial of the given order by f(monomial).
  static LinearOp diagonal(int n, Order order, std::function<ScalarQ(const Monomial&)> f, std::string name) {
    return LinearOp(
        n, order, order, [n, order, f](const Monomial& m) { return NCPoly::monomial(n, m, f(m), order); },
        std::move(name), Shift{0, 0});
  }

 private:
  struct State {
    Rule rule;
    std::string name;
    std::mutex mu;
    std::unordered_map<Monomial, NCPoly, MonomialHash> cache;
  };

  static void check_same_rank(const LinearOp& a, const LinearOp& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("LinearOp: rank mismatch");
  }
  static LinearOp combine(const LinearOp& a, const LinearOp& b, const ScalarQ& sign, const char* op) {
    check_same_rank(a, b);
    std::optional<Shift> s;
    if (a.shift_ && b.shift_ && *a.shift_ == *b.shift_) s = a.shift_;
    const int n = a.n_;
    const Order in = a.in_;
    return LinearOp(
        n, in, a.out_,
        [a, b, sign, n, in](const Monomial& m) {
          NCPoly r = a.apply_monomial(m);
          r += sign * b.apply(NCPoly::monomial(n, m, ScalarQ(1), in)).to_order(r.order());
          return r;
        },
        a.name() + op + b.name(), s);
  }

  int n_;
  Order in_, out_;
  std::optional<Shift> shift_;
  std::shared_ptr<State> state_;
};

namespace ops {

inline void check_index(int n, int i) { NCPoly::check_index(n, i); }

/// gamma_i^{h/2}: scales z^r w^s (z-first) by q^{h r_i / 2}.
inline LinearOp gamma(int n, int i, int half_power = 2) {
  check_index(n, i);
  return LinearOp::diagonal(
      n, Order::ZFirst, [i, half_power](const Monomial& m) { return ScalarQ::v_power(half_power * m.z[i - 1]); },
      "gamma" + std::to_string(i));
}

/// bar_gamma_i^{h/2}: scales w^r z^s (w-first) by q^{h r_i / 2}.
inline LinearOp bar_gamma(int n, int i, int half_power = 2) {
  check_index(n, i);
  return LinearOp::diagonal(
      n, Order::WFirst, [i, half_power](const Monomial& m) { return ScalarQ::v_power(half_power * m.w[i - 1]); },
      "bar_gamma" + std::to_string(i));
}

/// gamma^{h/2} = (gamma_1..gamma_n)^{h/2}; equals q^{h m / 2} on A_{m,m'}.
inline LinearOp gamma_total(int n, int half_power = 2) {
  return LinearOp::diagonal(
      n, Order::ZFirst, [half_power](const Monomial& m) { return ScalarQ::v_power(half_power * m.m()); }, "gamma");
}
inline LinearOp bar_gamma_total(int n, int half_power = 2) {
  return LinearOp::diagonal(
      n, Order::WFirst, [half_power](const Monomial& m) { return ScalarQ::v_power(half_power * m.mp()); },
      "bar_gamma");
}

/// {gamma} = (gamma - gamma^{-1})/(q - q^{-1}) and its barred analogue.
inline LinearOp gamma_bracket(int n) {
  return LinearOp::diagonal(n, Order::ZFirst, [](const Monomial& m) { return q_number(m.m()); }, "{gamma}");
}
inline LinearOp bar_gamma_bracket(int n) {
  return LinearOp::diagonal(n, Order::WFirst, [](const Monomial& m) { return q_number(m.mp()); }, "{bar_gamma}");
}

/// Left multiplication by z_i.
inline LinearOp z_hat(int n, int i) {
  check_index(n, i);
  const int k = i - 1;
  return LinearOp(
      n, Order::ZFirst, Order::ZFirst,
      [n, k](const Monomial& m) {
        Monomial r = m;
        ++r.z[k];
        return NCPoly::monomial(n, r, ScalarQ::q_power(-sum_below(m.z, k)));
      },
      "z_hat" + std::to_string(i), LinearOp::Shift{1, 0});
}

/// Insertion of z_i at the end of the z-block of z^r w^s.
inline LinearOp z_breve(int n, int i) {
  check_index(n, i);
  const int k = i - 1;
  return LinearOp(
      n, Order::ZFirst, Order::ZFirst,
      [n, k](const Monomial& m) {
        Monomial r = m;
        ++r.z[k];
        return NCPoly::monomial(n, r, ScalarQ::q_power(-sum_above(m.z, k)));
      },
      "z_breve" + std::to_string(i), LinearOp::Shift{1, 0});
}

/// Left multiplication by w_i.
inline LinearOp w_hat(int n, int i) {
  check_index(n, i);
  const int k = i - 1;
  return LinearOp(
      n, Order::WFirst, Order::WFirst,
      [n, k](const Monomial& m) {
        Monomial r = m;
        ++r.w[k];
        return NCPoly::monomial(n, r, ScalarQ::q_power(sum_below(m.w, k)), Order::WFirst);
      },
      "w_hat" + std::to_string(i), LinearOp::Shift{0, 1});
}

/// Insertion of w_i at the end of the w-block of w^r z^s.
inline LinearOp w_breve(int n, int i) {
  check_index(n, i);
  const int k = i - 1;
  return LinearOp(
      n, Order::WFirst, Order::WFirst,
      [n, k](const Monomial& m) {
        Monomial r = m;
        ++r.w[k];
        return NCPoly::monomial(n, r, ScalarQ::q_power(sum_above(m.w, k)), Order::WFirst);
      },
      "w_breve" + std::to_string(i), LinearOp::Shift{0, 1});
}

/// d_i z^r w^s = q^{r_{i+1}+..+r_n} [r_i] z^{r-e_i} w^s.
inline LinearOp partial(int n, int i) {
  check_index(n, i);
  const int k = i - 1;
  return LinearOp(
      n, Order::ZFirst, Order::ZFirst,
      [n, k](const Monomial& m) {
        if (m.z[k] == 0) return NCPoly(n);
        Monomial r = m;
        --r.z[k];
        return NCPoly::monomial(n, r, q_number(m.z[k]).times_v_power(2 * sum_above(m.z, k)));
      },
      "d" + std::to_string(i), LinearOp::Shift{-1, 0});
}

/// bar_d_i w^r z^s = q^{-(r_{i+1}+..+r_n)} [r_i] w^{r-e_i} z^s.
inline LinearOp bar_partial(int n, int i) {
  check_index(n, i);
  const int k = i - 1;
  return LinearOp(
      n, Order::WFirst, Order::WFirst,
      [n, k](const Monomial& m) {
        if (m.w[k] == 0) return NCPoly(n, Order::WFirst);
        Monomial r = m;
        --r.w[k];
        return NCPoly::monomial(n, r, q_number(m.w[k]).times_v_power(-2 * sum_above(m.w, k)), Order::WFirst);
      },
      "bar_d" + std::to_string(i), LinearOp::Shift{0, -1});
}

/// Sum of q^{2(i-1)} bar_d_i d_i over i in [first, last] (1-based).
inline LinearOp laplace_range(int n, int first, int last, const std::string& name) {
  return LinearOp(
      n, Order::ZFirst, Order::ZFirst,
      [n, first, last](const Monomial& m) {
        NCPoly r(n);
        for (int i = first; i <= last; ++i) {
          const NCPoly di = partial(n, i).apply_monomial(m);
          if (di.is_zero()) continue;
          r += ScalarQ::q_power(2 * (i - 1)) * bar_partial(n, i).apply(di).to_order(Order::ZFirst);
        }
        return r;
      },
      name, LinearOp::Shift{-1, -1});
}

/// Delta_q = sum_i q^{2(i-1)} bar_d_i d_i.
inline LinearOp laplace(int n) {
  thread_local std::unordered_map<int, LinearOp> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  NCPoly::check_rank(n);
  return cache.emplace(n, laplace_range(n, 1, n, "Delta")).first->second;
}

/// The other printed form, sum_i d_i bar_d_i.
inline LinearOp laplace_dual_form(int n) {
  LinearOp r = partial(n, 1) * bar_partial(n, 1);
  for (int i = 2; i <= n; ++i) r = r + partial(n, i) * bar_partial(n, i);
  return r;
}

/// Left multiplication by a fixed element.
inline LinearOp left_multiply(const NCPoly& a, std::string name) {
  const int n = a.n();
  const Order o = a.order();
  std::optional<LinearOp::Shift> s;
  if (a.is_homogeneous() && !a.is_zero()) s = LinearOp::Shift{a.terms().begin()->first.m(), a.terms().begin()->first.mp()};
  return LinearOp(
      n, o, o, [a, n, o](const Monomial& m) { return a * NCPoly::monomial(n, m, ScalarQ(1), o); }, std::move(name), s);
}

/// Multiplication by the squared radius Q.
inline LinearOp q_hat(int n) { return left_multiply(q_radius(n), "Q_hat"); }

/// D = sum z_hat_k d_k and bar_D = sum w_hat_k bar_d_k.
inline LinearOp euler(int n) {
  LinearOp r = z_hat(n, 1) * partial(n, 1);
  for (int k = 2; k <= n; ++k) r = r + z_hat(n, k) * partial(n, k);
  return r;
}
inline LinearOp bar_euler(int n) {
  LinearOp r = w_hat(n, 1) * bar_partial(n, 1);
  for (int k = 2; k <= n; ++k) r = r + w_hat(n, k) * bar_partial(n, k);
  return r;
}

}  // namespace ops

/// Generators of U_q(gl_n): k_i^{h/2} (h = half_power), e_i, f_i.
struct GlGenerator {
  enum class Kind { K, E, F } kind = Kind::K;
  int index = 1;
  int half_power = 2;

  static GlGenerator k(int i, int half_power = 2) { return {Kind::K, i, half_power}; }
  static GlGenerator e(int i) { return {Kind::E, i, 0}; }
  static GlGenerator f(int i) { return {Kind::F, i, 0}; }

  std::string name() const {
    switch (kind) {
      case Kind::K:
        return "k" + std::to_string(index) + (half_power == 2 ? "" : "^(" + std::to_string(half_power) + "/2)");
      case Kind::E:
        return "e" + std::to_string(index);
      case Kind::F:
        return "f" + std::to_string(index);
    }
    return "?";
  }
};

namespace detail {

// Pieces of the closed-form action on A_z (x) A_w. Each returns
// (coefficient, new exponents) or nullopt for zero.
struct Piece {
  ScalarQ coeff;
  Exps e;
};

// q^{-1/2} (gamma_i gamma_{i+1})^{1/2} z_breve_i d_{i+1} on z^r (0-based i).
inline std::optional<Piece> z_raise(const Exps& r, int i) {
  if (r[i + 1] == 0) return std::nullopt;
  Exps t = r;
  --t[i + 1];
  int vexp = 2 * sum_above(t, i + 1);
  ScalarQ c = q_number(r[i + 1]);
  vexp -= 2 * sum_above(t, i);
  ++t[i];
  vexp += t[i] + t[i + 1] - 1;
  return Piece{c.times_v_power(vexp), t};
}
// q^{1/2} (gamma_i gamma_{i+1})^{-1/2} z_breve_{i+1} d_i on z^r.
inline std::optional<Piece> z_lower(const Exps& r, int i) {
  if (r[i] == 0) return std::nullopt;
  Exps t = r;
  --t[i];
  int vexp = 2 * sum_above(t, i);
  ScalarQ c = q_number(r[i]);
  vexp -= 2 * sum_above(t, i + 1);
  ++t[i + 1];
  vexp += -(t[i] + t[i + 1]) + 1;
  return Piece{c.times_v_power(vexp), t};
}
// -q^{-3/2} (bar_gamma_i bar_gamma_{i+1})^{1/2} w_breve_{i+1} bar_d_i on w^s.
inline std::optional<Piece> w_raise(const Exps& s, int i) {
  if (s[i] == 0) return std::nullopt;
  Exps t = s;
  --t[i];
  int vexp = -2 * sum_above(t, i);
  ScalarQ c = -q_number(s[i]);
  vexp += 2 * sum_above(t, i + 1);
  ++t[i + 1];
  vexp += t[i] + t[i + 1] - 3;
  return Piece{c.times_v_power(vexp), t};
}
// -q^{3/2} (bar_gamma_i bar_gamma_{i+1})^{-1/2} w_breve_i bar_d_{i+1} on w^s.
inline std::optional<Piece> w_lower(const Exps& s, int i) {
  if (s[i + 1] == 0) return std::nullopt;
  Exps t = s;
  --t[i + 1];
  int vexp = -2 * sum_above(t, i + 1);
  ScalarQ c = -q_number(s[i + 1]);
  vexp += 2 * sum_above(t, i);
  ++t[i];
  vexp += -(t[i] + t[i + 1]) + 3;
  return Piece{c.times_v_power(vexp), t};
}

}  // namespace detail

/// The operator L(X) on A, acting on z-first monomials z^r w^s viewed as
/// z^r (x) w^s via L(k_i) = gamma_i (x) bar_gamma_i^{-1} and
///   L(e_i) = q^{-1/2}(g_i g_{i+1})^{1/2} zb_i d_{i+1} (x) (bg_i bg_{i+1}^{-1})^{1/2}
///          - q^{-3/2}(g_i g_{i+1}^{-1})^{1/2} (x) (bg_i bg_{i+1})^{1/2} wb_{i+1} bd_i,
///   L(f_i) = q^{1/2}(g_i g_{i+1})^{-1/2} zb_{i+1} d_i (x) (bg_i bg_{i+1}^{-1})^{1/2}
///          - q^{3/2}(g_i g_{i+1}^{-1})^{1/2} (x) (bg_i bg_{i+1})^{-1/2} wb_i bd_{i+1}.
inline LinearOp gl_operator(int n, const GlGenerator& g) {
  using Kind = GlGenerator::Kind;
  if (g.kind == Kind::K) {
    NCPoly::check_index(n, g.index);
  } else if (g.index < 1 || g.index >= n) {
    throw std::invalid_argument("e_i, f_i need 1 <= i <= n-1");
  }
  const int i = g.index - 1;
  const int h = g.half_power;
  if (g.kind == Kind::K)
    return LinearOp::diagonal(
        n, Order::ZFirst, [i, h](const Monomial& m) { return ScalarQ::v_power(h * (m.z[i] - m.w[i])); }, g.name());
  const bool raise = g.kind == Kind::E;
  return LinearOp(
      n, Order::ZFirst, Order::ZFirst,
      [n, i, raise](const Monomial& m) {
        NCPoly r(n);
        // first term acts on the z-factor, the w-factor picks up (bg_i/bg_{i+1})^{1/2}
        if (auto p = raise ? detail::z_raise(m.z, i) : detail::z_lower(m.z, i))
          r.add_term(Monomial{p->e, m.w}, p->coeff.times_v_power(m.w[i] - m.w[i + 1]));
        // second term acts on the w-factor, the z-factor picks up (g_i/g_{i+1})^{1/2}
        if (auto p = raise ? detail::w_raise(m.w, i) : detail::w_lower(m.w, i))
          r.add_term(Monomial{m.z, p->e}, p->coeff.times_v_power(m.z[i] - m.z[i + 1]));
        return r;
      },
      g.name(), LinearOp::Shift{0, 0});
}

inline NCPoly act_gl(const GlGenerator& g, const NCPoly& p) { return gl_operator(p.n(), g).apply(p); }

/// Generators of U_q(sl_2) acting through omega.
enum class Sl2Generator { K, KInverse, E, F };

/// omega(k) = q^n gamma bar_gamma, omega(e) = q^{1-n} Q_hat, omega(f) = -Delta_q.
inline LinearOp sl2_operator(int n, Sl2Generator g) {
  switch (g) {
    case Sl2Generator::K:
      return LinearOp::diagonal(
          n, Order::ZFirst, [n](const Monomial& m) { return ScalarQ::q_power(n + m.m() + m.mp()); }, "omega(k)");
    case Sl2Generator::KInverse:
      return LinearOp::diagonal(
          n, Order::ZFirst, [n](const Monomial& m) { return ScalarQ::q_power(-(n + m.m() + m.mp())); },
          "omega(k^-1)");
    case Sl2Generator::E:
      return ScalarQ::q_power(1 - n) * ops::q_hat(n);
    case Sl2Generator::F:
      return ScalarQ(-1) * ops::laplace(n);
  }
  throw std::invalid_argument("unknown sl2 generator");
}

inline NCPoly act_sl2(Sl2Generator g, const NCPoly& p) { return sl2_operator(p.n(), g).apply(p); }

}  // namespace qharm
