// Dense matrices over Q(v): row reduction, rank, kernel, solve, and the
// matrices of operators on the bidegree components A_{m,m'}.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qharm/operators.hpp"

namespace qharm {

using Vec = std::vector<ScalarQ>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  ScalarQ& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const ScalarQ& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec column(std::size_t j) const {
    Vec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }
  void set_column(std::size_t j, const Vec& c) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = c[i];
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (i != j && !at(i, j).is_zero()) return false;
    return true;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ScalarQ(1);
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const ScalarQ& x = a.at(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b.at(k, j).is_zero()) r.at(i, j) += x * b.at(k, j);
      }
    return r;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    check_shape(a, b);
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    check_shape(a, b);
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
    return a;
  }
  friend Matrix operator*(const ScalarQ& s, Matrix a) {
    for (auto& x : a.a_) x *= s;
    return a;
  }
  friend bool operator==(const Matrix&, const Matrix&) = default;

  Vec apply(const Vec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("matrix-vector product: shape mismatch");
    Vec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!at(i, j).is_zero() && !x[j].is_zero()) r[i] += at(i, j) * x[j];
    return r;
  }

  /// Stacks matrices with equal column counts on top of each other.
  static Matrix vstack(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) return {};
    Matrix r(0, blocks.front().cols_);
    for (const auto& b : blocks) {
      if (b.cols_ != r.cols_) throw std::invalid_argument("vstack: column mismatch");
      r.a_.insert(r.a_.end(), b.a_.begin(), b.a_.end());
      r.rows_ += b.rows_;
    }
    return r;
  }

 private:
  static void check_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  }
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<ScalarQ> a_;
};

namespace detail {
inline int scalar_size(const ScalarQ& x) { return x.num().degree() + x.den().degree(); }
}  // namespace detail

struct Echelon {
  Matrix reduced;            // reduced row echelon form
  std::vector<int> pivots;   // pivot column of each nonzero row
};

/// Gauss-Jordan elimination; the pivot in each column is the entry of
/// smallest numerator-plus-denominator degree.
inline Echelon row_reduce(Matrix a) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t best = a.rows();
    for (std::size_t i = row; i < a.rows(); ++i)
      if (!a.at(i, col).is_zero() &&
          (best == a.rows() || detail::scalar_size(a.at(i, col)) < detail::scalar_size(a.at(best, col))))
        best = i;
    if (best == a.rows()) continue;
    if (best != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(best, j), a.at(row, j));
    const ScalarQ inv = a.at(row, col).inverse();
    for (std::size_t j = col; j < a.cols(); ++j)
      if (!a.at(row, j).is_zero()) a.at(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a.at(i, col).is_zero()) continue;
      const ScalarQ f = a.at(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        if (!a.at(row, j).is_zero()) a.at(i, j) -= f * a.at(row, j);
    }
    e.pivots.push_back(static_cast<int>(col));
    ++row;
  }
  e.reduced = std::move(a);
  return e;
}

inline int rank(const Matrix& a) { return static_cast<int>(row_reduce(a).pivots.size()); }

/// Basis of the null space, one vector per free column.
inline std::vector<Vec> kernel(const Matrix& a) {
  const Echelon e = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec x(a.cols());
    x[free] = ScalarQ(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = -e.reduced.at(r, free);
    out.push_back(std::move(x));
  }
  return out;
}

/// Some solution of a x = b, or nothing when the system is inconsistent.
inline std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: shape mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  const Echelon e = row_reduce(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == static_cast<int>(a.cols())) return std::nullopt;
  Vec x(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced.at(r, a.cols());
  return x;
}

/// Index of the z-first monomial basis of A_{m,m'}.
class BidegreeBasis {
 public:
  BidegreeBasis(int n, int m, int mp) : n_(n), m_(m), mp_(mp), monos_(monomial_basis(n, m, mp)) {
    for (std::size_t i = 0; i < monos_.size(); ++i) index_.emplace(monos_[i], i);
  }
  int n() const { return n_; }
  int m() const { return m_; }
  int mp() const { return mp_; }
  std::size_t size() const { return monos_.size(); }
  const std::vector<Monomial>& monomials() const { return monos_; }

  Vec coordinates(const NCPoly& p) const {
    Vec x(monos_.size());
    const NCPoly conv = p.to_order(Order::ZFirst);
    for (const auto& [mono, c] : conv.terms()) {
      auto it = index_.find(mono);
      if (it == index_.end())
        throw std::invalid_argument("polynomial has a term outside A_{" + std::to_string(m_) + "," +
                                    std::to_string(mp_) + "}");
      x[it->second] = c;
    }
    return x;
  }
  NCPoly element(const Vec& x) const {
    NCPoly p(n_);
    for (std::size_t i = 0; i < monos_.size(); ++i)
      if (!x[i].is_zero()) p.add_term(monos_[i], x[i]);
    return p;
  }
  NCPoly element(std::size_t i) const { return NCPoly::monomial(n_, monos_[i]); }

 private:
  int n_, m_, mp_;
  std::vector<Monomial> monos_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

/// Matrix of `op` from A_{m,m'} to A_{m+dm, m'+dm'}.
inline Matrix operator_matrix(const LinearOp& op, const BidegreeBasis& from, const BidegreeBasis& to) {
  Matrix a(to.size(), from.size());
  for (std::size_t j = 0; j < from.size(); ++j) a.set_column(j, to.coordinates(op.apply_monomial(from.monomials()[j])));
  return a;
}

/// Matrix of a bidegree-preserving operator on A_{m,m'}.
inline Matrix operator_matrix(const LinearOp& op, const BidegreeBasis& basis) { return operator_matrix(op, basis, basis); }

/// Matrix of `op` restricted to the span of `elements`, expressed in the
/// same elements; requires the span to be invariant and the elements to
/// be linearly independent.
inline Matrix restricted_matrix(const LinearOp& op, const std::vector<NCPoly>& elements, const BidegreeBasis& basis) {
  Matrix e(basis.size(), elements.size());
  for (std::size_t j = 0; j < elements.size(); ++j) e.set_column(j, basis.coordinates(elements[j]));
  Matrix image(basis.size(), elements.size());
  for (std::size_t j = 0; j < elements.size(); ++j) image.set_column(j, basis.coordinates(op.apply(elements[j])));
  Matrix r(elements.size(), elements.size());
  for (std::size_t j = 0; j < elements.size(); ++j) {
    auto x = solve(e, image.column(j));
    if (!x) throw std::invalid_argument("restricted_matrix: span is not invariant under " + op.name());
    r.set_column(j, *x);
  }
  return r;
}

}  // namespace qharm
