// The algebra A = C_q[z_1..z_n, w_1..w_n] with relations
//   z_i z_j = q z_j z_i,  w_i w_j = q^{-1} w_j w_i   (i < j),
//   w_j z_i = q z_i w_j                                (i != j),
//   w_k z_k = z_k w_k + (1 - q^2) sum_{s<k} z_s w_s,
// stored in one of the two PBW normal orders.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qharm/qscalar.hpp"

namespace qharm {

inline constexpr int kMaxRank = 6;

using Exps = std::array<std::uint8_t, kMaxRank>;

inline int total(const Exps& e) {
  int t = 0;
  for (auto x : e) t += x;
  return t;
}

/// ZFirst: z_1^{r_1}..z_n^{r_n} w_1^{s_1}..w_n^{s_n}.
/// WFirst: w_1^{r_1}..w_n^{r_n} z_1^{s_1}..z_n^{s_n}.
/// In both cases `z` holds the z-exponents and `w` the w-exponents.
enum class Order { ZFirst, WFirst };

inline const char* order_name(Order o) { return o == Order::ZFirst ? "z-first" : "w-first"; }

struct Monomial {
  Exps z{};
  Exps w{};

  int m() const { return total(z); }
  int mp() const { return total(w); }
  bool zero_weight() const { return z == w; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Graded lexicographic on (m, m', z, w).
  friend bool operator<(const Monomial& a, const Monomial& b) {
    const int am = a.m(), bm = b.m();
    if (am != bm) return am < bm;
    const int amp = a.mp(), bmp = b.mp();
    if (amp != bmp) return amp < bmp;
    if (a.z != b.z) return a.z < b.z;
    return a.w < b.w;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 0;
    for (auto x : m.z) h = h * 131 + x;
    for (auto x : m.w) h = h * 131 + x;
    return h;
  }
};

inline Exps unit(int i) {
  Exps e{};
  e[static_cast<std::size_t>(i)] = 1;
  return e;
}

inline Exps add(Exps a, const Exps& b) {
  for (int i = 0; i < kMaxRank; ++i) a[i] = static_cast<std::uint8_t>(a[i] + b[i]);
  return a;
}

/// Sum over index pairs i > j of a_i * b_j.
inline int cross_above(const Exps& a, const Exps& b) {
  int t = 0, below = 0;
  for (int i = 0; i < kMaxRank; ++i) {
    t += a[i] * below;
    below += b[i];
  }
  return t;
}

/// Sum over i < j of a_i a_j.
inline int pair_sum(const Exps& a) {
  int t = 0, seen = 0;
  for (int i = 0; i < kMaxRank; ++i) {
    t += a[i] * seen;
    seen += a[i];
  }
  return t;
}

/// Sum of a_i over i < k (0-based k).
inline int sum_below(const Exps& a, int k) {
  int t = 0;
  for (int i = 0; i < k; ++i) t += a[i];
  return t;
}
/// Sum of a_i over i > k (0-based k).
inline int sum_above(const Exps& a, int k) {
  int t = 0;
  for (int i = k + 1; i < kMaxRank; ++i) t += a[i];
  return t;
}

class NCPoly;

namespace detail {

struct ExpsPairHash {
  std::size_t operator()(const std::pair<Exps, Exps>& k) const noexcept {
    return MonomialHash{}(Monomial{k.first, k.second});
  }
};
struct IndexExpsHash {
  std::size_t operator()(const std::pair<int, Exps>& k) const noexcept {
    std::size_t h = static_cast<std::size_t>(k.first);
    for (auto x : k.second) h = h * 131 + x;
    return h;
  }
};

/// A term z^c w_j (or w^c z_j): exponent vector and single-letter index.
struct SingleTerm {
  Exps e;
  int j;
  ScalarQ coeff;
};
struct PairTerm {
  Monomial mono;
  ScalarQ coeff;
};

inline const ScalarQ& one_minus_q2() {
  static const ScalarQ v = ScalarQ(1) - ScalarQ::q_power(2);
  return v;
}

inline void accumulate(std::vector<SingleTerm>& out, const Exps& e, int j, const ScalarQ& c) {
  if (c.is_zero()) return;
  for (auto& t : out)
    if (t.j == j && t.e == e) {
      t.coeff += c;
      return;
    }
  out.push_back({e, j, c});
}

inline int first_nonzero(const Exps& c) {
  for (int i = 0; i < kMaxRank; ++i)
    if (c[i]) return i;
  return -1;
}
inline int last_nonzero(const Exps& c) {
  for (int i = kMaxRank - 1; i >= 0; --i)
    if (c[i]) return i;
  return -1;
}

/// w_k z^c = sum coeff * z^{e} w_j.
inline const std::vector<SingleTerm>& w_past_z(int k, const Exps& c) {
  thread_local std::unordered_map<std::pair<int, Exps>, std::vector<SingleTerm>, IndexExpsHash> cache;
  auto key = std::make_pair(k, c);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::vector<SingleTerm> out;
  const int J = first_nonzero(c);
  if (J < 0) {
    out.push_back({Exps{}, k, ScalarQ(1)});
  } else {
    Exps rest = c;
    --rest[J];
    const Exps eJ = unit(J);
    if (k != J) {
      const auto sub = w_past_z(k, rest);
      for (const auto& t : sub)
        accumulate(out, add(t.e, eJ), t.j, t.coeff.times_v_power(2 - 2 * sum_below(t.e, J)));
    } else {
      const auto sub = w_past_z(J, rest);
      for (const auto& t : sub) accumulate(out, add(t.e, eJ), t.j, t.coeff.times_v_power(-2 * sum_below(t.e, J)));
      for (int s = 0; s < J; ++s) {
        const auto subs = w_past_z(s, rest);
        const Exps es = unit(s);
        for (const auto& t : subs)
          accumulate(out, add(t.e, es), t.j, one_minus_q2() * t.coeff.times_v_power(-2 * sum_below(t.e, s)));
      }
    }
  }
  std::erase_if(out, [](const auto& t) { return t.coeff.is_zero(); });
  return cache.emplace(key, std::move(out)).first->second;
}

/// z_k w^c = sum coeff * w^{e} z_j.
inline const std::vector<SingleTerm>& z_past_w(int k, const Exps& c) {
  thread_local std::unordered_map<std::pair<int, Exps>, std::vector<SingleTerm>, IndexExpsHash> cache;
  auto key = std::make_pair(k, c);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::vector<SingleTerm> out;
  const int J = first_nonzero(c);
  if (J < 0) {
    out.push_back({Exps{}, k, ScalarQ(1)});
  } else {
    Exps rest = c;
    --rest[J];
    const Exps eJ = unit(J);
    if (k != J) {
      const auto sub = z_past_w(k, rest);
      for (const auto& t : sub)
        accumulate(out, add(t.e, eJ), t.j, t.coeff.times_v_power(-2 + 2 * sum_below(t.e, J)));
    } else {
      const auto sub = z_past_w(J, rest);
      for (const auto& t : sub) accumulate(out, add(t.e, eJ), t.j, t.coeff.times_v_power(2 * sum_below(t.e, J)));
      for (int s = 0; s < J; ++s) {
        const auto subs = z_past_w(s, add(rest, unit(s)));
        for (const auto& t : subs) accumulate(out, t.e, t.j, -(one_minus_q2() * t.coeff));
      }
    }
  }
  std::erase_if(out, [](const auto& t) { return t.coeff.is_zero(); });
  return cache.emplace(key, std::move(out)).first->second;
}

inline void accumulate(std::vector<PairTerm>& out, const Monomial& mono, const ScalarQ& c) {
  if (c.is_zero()) return;
  for (auto& t : out)
    if (t.mono == mono) {
      t.coeff += c;
      return;
    }
  out.push_back({mono, c});
}

/// w^b z^c in ZFirst order: terms with mono.z the z-part, mono.w the w-part.
inline const std::vector<PairTerm>& w_block_past_z_block(const Exps& b, const Exps& c) {
  thread_local std::unordered_map<std::pair<Exps, Exps>, std::vector<PairTerm>, ExpsPairHash> cache;
  auto key = std::make_pair(b, c);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::vector<PairTerm> out;
  const int K = last_nonzero(b);
  if (K < 0) {
    out.push_back({Monomial{c, Exps{}}, ScalarQ(1)});
  } else if (first_nonzero(c) < 0) {
    out.push_back({Monomial{Exps{}, b}, ScalarQ(1)});
  } else {
    Exps rest = b;
    --rest[K];
    const auto single = w_past_z(K, c);
    for (const auto& s : single) {
      const auto inner = w_block_past_z_block(rest, s.e);
      for (const auto& t : inner) {
        Monomial mono{t.mono.z, add(t.mono.w, unit(s.j))};
        accumulate(out, mono, s.coeff * t.coeff.times_v_power(2 * sum_above(t.mono.w, s.j)));
      }
    }
  }
  std::erase_if(out, [](const auto& t) { return t.coeff.is_zero(); });
  return cache.emplace(key, std::move(out)).first->second;
}

/// z^a w^b in WFirst order: terms with mono.w the w-part, mono.z the z-part.
inline const std::vector<PairTerm>& z_block_past_w_block(const Exps& a, const Exps& b) {
  thread_local std::unordered_map<std::pair<Exps, Exps>, std::vector<PairTerm>, ExpsPairHash> cache;
  auto key = std::make_pair(a, b);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::vector<PairTerm> out;
  const int K = last_nonzero(a);
  if (K < 0) {
    out.push_back({Monomial{Exps{}, b}, ScalarQ(1)});
  } else if (first_nonzero(b) < 0) {
    out.push_back({Monomial{a, Exps{}}, ScalarQ(1)});
  } else {
    Exps rest = a;
    --rest[K];
    const auto single = z_past_w(K, b);
    for (const auto& s : single) {
      const auto inner = z_block_past_w_block(rest, s.e);
      for (const auto& t : inner) {
        Monomial mono{add(t.mono.z, unit(s.j)), t.mono.w};
        accumulate(out, mono, s.coeff * t.coeff.times_v_power(-2 * sum_above(t.mono.z, s.j)));
      }
    }
  }
  std::erase_if(out, [](const auto& t) { return t.coeff.is_zero(); });
  return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace detail

/// Element of A in a fixed PBW order and rank. Terms never hold zero
/// coefficients, so equal elements have identical term maps.
class NCPoly {
 public:
  using Terms = std::map<Monomial, ScalarQ>;

  NCPoly() = default;
  explicit NCPoly(int n, Order order = Order::ZFirst) : n_(n), order_(order) { check_rank(n); }

  static NCPoly constant(int n, const ScalarQ& c, Order order = Order::ZFirst) {
    NCPoly p(n, order);
    p.add_term(Monomial{}, c);
    return p;
  }
  static NCPoly monomial(int n, const Monomial& mono, const ScalarQ& c = ScalarQ(1), Order order = Order::ZFirst) {
    NCPoly p(n, order);
    p.add_term(mono, c);
    return p;
  }
  /// Generator z_i (1-based).
  static NCPoly z(int n, int i, Order order = Order::ZFirst) {
    check_index(n, i);
    Monomial m;
    m.z[i - 1] = 1;
    return monomial(n, m, ScalarQ(1), order);
  }
  /// Generator w_i (1-based).
  static NCPoly w(int n, int i, Order order = Order::ZFirst) {
    check_index(n, i);
    Monomial m;
    m.w[i - 1] = 1;
    return monomial(n, m, ScalarQ(1), order);
  }

  int n() const { return n_; }
  Order order() const { return order_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  ScalarQ coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ScalarQ(0) : it->second;
  }

  void add_term(const Monomial& m, const ScalarQ& c) {
    if (c.is_zero()) return;
    for (int i = n_; i < kMaxRank; ++i)
      if (m.z[i] || m.w[i]) throw std::invalid_argument("NCPoly: monomial uses an index above the rank");
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  NCPoly& operator+=(const NCPoly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  NCPoly& operator-=(const NCPoly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  NCPoly operator-() const {
    NCPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const ScalarQ& s, NCPoly p) {
    if (s.is_zero()) return NCPoly(p.n_, p.order_);
    if (s.is_one()) return p;
    for (auto& [m, c] : p.terms_) c *= s;
    return p;
  }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);

  /// Same element, order-independent comparison.
  friend bool operator==(const NCPoly& a, const NCPoly& b);
  friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

  /// Re-expresses the element in the other PBW basis.
  NCPoly to_order(Order target) const {
    if (target == order_) return *this;
    NCPoly r(n_, target);
    for (const auto& [m, c] : terms_) {
      const auto& conv = order_ == Order::ZFirst ? detail::z_block_past_w_block(m.z, m.w)
                                                 : detail::w_block_past_z_block(m.w, m.z);
      for (const auto& t : conv) r.add_term(t.mono, c * t.coeff);
    }
    return r;
  }

  /// Component of bidegree (m, m').
  NCPoly bidegree_component(int m, int mp) const {
    NCPoly r(n_, order_);
    for (const auto& [mono, c] : terms_)
      if (mono.m() == m && mono.mp() == mp) r.terms_.emplace(mono, c);
    return r;
  }
  /// Bidegrees present, sorted.
  std::vector<std::pair<int, int>> bidegrees() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& [mono, c] : terms_) out.emplace_back(mono.m(), mono.mp());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  bool is_homogeneous() const { return bidegrees().size() <= 1; }

  /// Terms of weight zero (z-exponents equal w-exponents); the weight of a
  /// PBW monomial does not depend on the order.
  NCPoly zero_weight_part() const {
    NCPoly r(n_, order_);
    for (const auto& [mono, c] : terms_)
      if (mono.zero_weight()) r.terms_.emplace(mono, c);
    return r;
  }

  /// Coefficient-wise map (coefficients are functions of v).
  NCPoly map_coefficients(const std::function<ScalarQ(const ScalarQ&)>& f) const {
    NCPoly r(n_, order_);
    for (const auto& [m, c] : terms_) r.add_term(m, f(c));
    return r;
  }

  /// Human-readable text, e.g. "z1*w1 + (v^2 + 1)*z2^2".
  std::string to_string() const;

  static void check_rank(int n) {
    if (n < 1 || n > kMaxRank) throw std::invalid_argument("rank must be between 1 and " + std::to_string(kMaxRank));
  }
  static void check_index(int n, int i) {
    check_rank(n);
    if (i < 1 || i > n) throw std::invalid_argument("generator index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
  }

 private:
  void check_compatible(const NCPoly& o) const {
    if (o.n_ != n_) throw std::invalid_argument("NCPoly: rank mismatch");
    if (o.order_ != order_) throw std::invalid_argument("NCPoly: order mismatch in addition");
  }

  int n_ = 1;
  Order order_ = Order::ZFirst;
  Terms terms_;
};

inline NCPoly operator*(const NCPoly& a, const NCPoly& b_in) {
  if (a.n_ != b_in.n_) throw std::invalid_argument("NCPoly: rank mismatch in product");
  const NCPoly b = b_in.to_order(a.order_);
  NCPoly r(a.n_, a.order_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      const ScalarQ c = ca * cb;
      if (a.order_ == Order::ZFirst) {
        // z^{a} (w^{b} z^{c}) w^{d}
        for (const auto& t : detail::w_block_past_z_block(ma.w, mb.z)) {
          const int e = -cross_above(ma.z, t.mono.z) + cross_above(t.mono.w, mb.w);
          r.add_term(Monomial{add(ma.z, t.mono.z), add(t.mono.w, mb.w)}, (c * t.coeff).times_v_power(2 * e));
        }
      } else {
        // w^{a} (z^{b} w^{c}) z^{d}
        for (const auto& t : detail::z_block_past_w_block(ma.z, mb.w)) {
          const int e = cross_above(ma.w, t.mono.w) - cross_above(t.mono.z, mb.z);
          r.add_term(Monomial{add(t.mono.z, mb.z), add(ma.w, t.mono.w)},
                     (c * t.coeff).times_v_power(2 * e));
        }
      }
    }
  return r;
}

inline bool operator==(const NCPoly& a, const NCPoly& b) {
  if (a.n_ != b.n_) return false;
  if (a.order_ == b.order_) return a.terms_ == b.terms_;
  return a.terms_ == b.to_order(a.order_).terms_;
}

inline NCPoly pow(const NCPoly& p, int k) {
  if (k < 0) throw std::invalid_argument("NCPoly: negative power");
  NCPoly r = NCPoly::constant(p.n(), ScalarQ(1), p.order());
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

/// Involutive antihomomorphism with z_i* = w_i, w_i* = z_i;
/// coefficients are fixed. Output is in the input's order.
inline NCPoly star(const NCPoly& p) {
  const NCPoly zf = p.to_order(Order::ZFirst);
  NCPoly r(p.n(), Order::ZFirst);
  for (const auto& [m, c] : zf.terms()) {
    // (z^r w^s)* = (w_n^{s_n}..w_1^{s_1})* ... = z_n^{s_n}..z_1^{s_1} w_n^{r_n}..w_1^{r_1}
    r.add_term(Monomial{m.w, m.z}, c.times_v_power(2 * (pair_sum(m.z) - pair_sum(m.w))));
  }
  return r.to_order(p.order());
}

/// Q_j = z_1 w_1 + ... + z_j w_j (ZFirst).
inline NCPoly q_radius(int n, int j) {
  NCPoly::check_rank(n);
  if (j < 0 || j > n) throw std::invalid_argument("q_radius: index out of range");
  NCPoly r(n, Order::ZFirst);
  for (int i = 0; i < j; ++i) {
    Monomial m;
    m.z[i] = 1;
    m.w[i] = 1;
    r.add_term(m, ScalarQ(1));
  }
  return r;
}
inline NCPoly q_radius(int n) { return q_radius(n, n); }

/// All PBW exponent vectors of length n with the given total, in
/// lexicographic order.
inline std::vector<Exps> compositions(int n, int total_degree) {
  std::vector<Exps> out;
  Exps cur{};
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      cur[i] = static_cast<std::uint8_t>(left);
      out.push_back(cur);
      return;
    }
    for (int k = left; k >= 0; --k) {
      cur[i] = static_cast<std::uint8_t>(k);
      rec(i + 1, left - k);
    }
    cur[i] = 0;
  };
  if (n >= 1) rec(0, total_degree);
  std::sort(out.begin(), out.end());
  return out;
}

/// Monomial basis of A_{m,m'} in canonical (graded lexicographic) order.
inline std::vector<Monomial> monomial_basis(int n, int m, int mp) {
  std::vector<Monomial> out;
  for (const auto& z : compositions(n, m))
    for (const auto& w : compositions(n, mp)) out.push_back(Monomial{z, w});
  std::sort(out.begin(), out.end());
  return out;
}

/// dim A_{m,m'} = C(m+n-1, n-1) C(m'+n-1, n-1).
inline std::size_t bidegree_dimension(int n, int m, int mp) {
  if (m < 0 || mp < 0) return 0;
  auto binom = [](int a, int b) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r.get_ui();
  };
  return binom(m + n - 1, n - 1) * binom(mp + n - 1, n - 1);
}

namespace detail {
inline std::string format_monomial(const Monomial& m, Order order) {
  std::string out;
  auto emit = [&](char letter, const Exps& e) {
    for (int i = 0; i < kMaxRank; ++i) {
      if (!e[i]) continue;
      if (!out.empty()) out += "*";
      out += letter + std::to_string(i + 1);
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
  };
  if (order == Order::ZFirst) {
    emit('z', m.z);
    emit('w', m.w);
  } else {
    emit('w', m.w);
    emit('z', m.z);
  }
  return out.empty() ? "1" : out;
}
}  // namespace detail

inline std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    const std::string mono = detail::format_monomial(m, order_);
    const bool neg = c.num().lc() < 0;
    const ScalarQ a = neg ? -c : c;
    std::string cs = a.to_string();
    const bool compound = cs.find_first_of("+-/") != std::string::npos;
    std::string term;
    if (mono == "1")
      term = neg && compound ? "(" + cs + ")" : cs;
    else if (a.is_one())
      term = mono;
    else
      term = (compound ? "(" + cs + ")" : cs) + "*" + mono;
    if (out.empty())
      out = neg ? "-" + term : term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out;
}

}  // namespace qharm
