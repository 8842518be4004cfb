#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qbruhat/scalar.hpp"

namespace qbruhat {

template <class F>
using Vec = std::vector<F>;

template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols, F(0)) {}
  Matrix(std::initializer_list<std::initializer_list<F>> rows) {
    r_ = static_cast<int>(rows.size());
    c_ = r_ ? static_cast<int>(rows.begin()->size()) : 0;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != c_) throw std::invalid_argument("ragged matrix");
      a_.insert(a_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }
  static Matrix from_rows(int cols, const std::vector<Vec<F>>& rows) {
    Matrix m(static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.r_; ++i) {
      if (static_cast<int>(rows[i].size()) != cols) throw std::invalid_argument("row length mismatch");
      for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  F& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  const F& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

  Vec<F> row(int i) const {
    return Vec<F>(a_.begin() + static_cast<std::ptrdiff_t>(i) * c_,
                  a_.begin() + static_cast<std::ptrdiff_t>(i + 1) * c_);
  }
  Vec<F> column(int j) const {
    Vec<F> v(r_);
    for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void append_row(const Vec<F>& v) {
    if (r_ == 0 && c_ == 0) c_ = static_cast<int>(v.size());
    if (static_cast<int>(v.size()) != c_) throw std::invalid_argument("row length mismatch");
    a_.insert(a_.end(), v.begin(), v.end());
    ++r_;
  }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("matrix shape mismatch");
    Matrix m(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
      for (int k = 0; k < a.c_; ++k) {
        const F& x = a(i, k);
        if (is_zero(x)) continue;
        for (int j = 0; j < b.c_; ++j)
          if (!is_zero(b(k, j))) m(i, j) += x * b(k, j);
      }
    return m;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t k = 0; k < a.a_.size(); ++k) a.a_[k] += b.a_[k];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t k = 0; k < a.a_.size(); ++k) a.a_[k] -= b.a_[k];
    return a;
  }
  Matrix scaled(const F& s) const {
    Matrix m = *this;
    for (auto& x : m.a_) x *= s;
    return m;
  }

  Vec<F> apply(const Vec<F>& x) const {
    if (static_cast<int>(x.size()) != c_) throw std::invalid_argument("vector length mismatch");
    Vec<F> y(r_, F(0));
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j)
        if (!is_zero(x[j]) && !is_zero((*this)(i, j))) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  bool is_zero_matrix() const {
    for (const auto& x : a_)
      if (!is_zero(x)) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

 private:
  int r_ = 0;
  int c_ = 0;
  std::vector<F> a_;
};

template <class F>
struct Echelon {
  Matrix<F> matrix;
  int rank = 0;
  std::vector<int> pivots;
};

template <class F>
Echelon<F> rref(Matrix<F> m) {
  Echelon<F> e;
  const int R = m.rows(), C = m.cols();
  int r = 0;
  for (int c = 0; c < C && r < R; ++c) {
    int p = -1;
    for (int i = r; i < R; ++i)
      if (!is_zero(m(i, c))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < C; ++j) std::swap(m(p, j), m(r, j));
    const F inv = F(1) / m(r, c);
    for (int j = c; j < C; ++j)
      if (!is_zero(m(r, j))) m(r, j) = m(r, j) * inv;
    for (int i = 0; i < R; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const F f = m(i, c);
      for (int j = c; j < C; ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.rank = r;
  e.matrix = std::move(m);
  return e;
}

template <class F>
int rank(const Matrix<F>& m) {
  return rref(m).rank;
}

template <class F>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient) : n_(ambient), basis_(0, ambient) {}

  static Subspace zero(int ambient) { return Subspace(ambient); }
  static Subspace full(int ambient) { return span(Matrix<F>::identity(ambient)); }

  // Row space of m.
  static Subspace span(const Matrix<F>& m) {
    Subspace s(m.cols());
    Echelon<F> e = rref(m);
    s.pivots_ = e.pivots;
    for (int i = 0; i < e.rank; ++i) s.basis_.append_row(e.matrix.row(i));
    return s;
  }
  static Subspace span(int ambient, const std::vector<Vec<F>>& vs) {
    return span(Matrix<F>::from_rows(ambient, vs));
  }

  int ambient() const { return n_; }
  int dim() const { return basis_.rows(); }
  bool is_zero_space() const { return dim() == 0; }
  bool is_full() const { return dim() == n_; }
  const Matrix<F>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  Vec<F> vector(int k) const { return basis_.row(k); }

  // Reduce v against the echelon basis; zero iff v lies in the span.
  Vec<F> reduce(Vec<F> v) const {
    check_len(v);
    for (int k = 0; k < dim(); ++k) {
      const F f = v[pivots_[k]];
      if (is_zero(f)) continue;
      for (int j = 0; j < n_; ++j)
        if (!is_zero(basis_(k, j))) v[j] -= f * basis_(k, j);
    }
    return v;
  }
  bool contains(const Vec<F>& v) const {
    for (const auto& x : reduce(v))
      if (!is_zero(x)) return false;
    return true;
  }
  bool contains(const Subspace& o) const {
    check_ambient(o);
    for (int k = 0; k < o.dim(); ++k)
      if (!contains(o.vector(k))) return false;
    return true;
  }

  // Coordinates of v in the echelon basis; nullopt if v is outside the span.
  std::optional<Vec<F>> coordinates(const Vec<F>& v) const {
    if (!contains(v)) return std::nullopt;
    Vec<F> c(dim());
    for (int k = 0; k < dim(); ++k) c[k] = v[pivots_[k]];
    return c;
  }

  Subspace operator+(const Subspace& o) const {
    check_ambient(o);
    if (o.is_zero_space()) return *this;
    if (is_zero_space()) return o;
    Matrix<F> m = basis_;
    for (int k = 0; k < o.dim(); ++k) m.append_row(o.vector(k));
    return span(m);
  }

  Subspace orthogonal_complement() const;

  Subspace intersect(const Subspace& o) const {
    check_ambient(o);
    if (is_zero_space() || o.is_full()) return *this;
    if (o.is_zero_space() || is_full()) return o;
    return (orthogonal_complement() + o.orthogonal_complement()).orthogonal_complement();
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  void check_len(const Vec<F>& v) const {
    if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("vector outside ambient space");
  }
  void check_ambient(const Subspace& o) const {
    if (o.n_ != n_) throw std::invalid_argument("ambient dimension mismatch");
  }

  int n_ = 0;
  Matrix<F> basis_;
  std::vector<int> pivots_;
};

template <class F>
Subspace<F> kernel(const Matrix<F>& m) {
  const int C = m.cols();
  Echelon<F> e = rref(m);
  std::vector<bool> is_pivot(C, false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<Vec<F>> vs;
  for (int f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    Vec<F> v(C, F(0));
    v[f] = F(1);
    for (int k = 0; k < e.rank; ++k) v[e.pivots[k]] = -e.matrix(k, f);
    vs.push_back(std::move(v));
  }
  return Subspace<F>::span(C, vs);
}

template <class F>
Subspace<F> Subspace<F>::orthogonal_complement() const {
  if (is_zero_space()) return full(n_);
  return kernel(basis_);
}

// Solve A X = B column by column; nullopt when some column is inconsistent.
template <class F>
std::optional<Matrix<F>> solve(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
  const int n = a.cols(), k = b.cols();
  Matrix<F> aug(a.rows(), n + k);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (int j = 0; j < k; ++j) aug(i, n + j) = b(i, j);
  }
  Echelon<F> e = rref(aug);
  Matrix<F> x(n, k);
  for (int r = 0; r < e.rank; ++r) {
    const int p = e.pivots[r];
    if (p >= n) return std::nullopt;
    for (int j = 0; j < k; ++j) x(p, j) = e.matrix(r, n + j);
  }
  return x;
}

template <class F>
std::optional<Vec<F>> solve(const Matrix<F>& a, const Vec<F>& b) {
  Matrix<F> bm(static_cast<int>(b.size()), 1);
  for (int i = 0; i < bm.rows(); ++i) bm(i, 0) = b[i];
  auto x = solve(a, bm);
  if (!x) return std::nullopt;
  return x->column(0);
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
  if (rank(a) < a.rows()) return std::nullopt;
  return solve(a, Matrix<F>::identity(a.rows()));
}

}  // namespace qbruhat
