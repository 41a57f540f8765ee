#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "mutwb/error.hpp"
#include "mutwb/numeric.hpp"

namespace mutwb {

/// Dense matrix over an exact field F (Rational, or a prime field for oracles).
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, F(0)) {}
  /// Row-major nested initializer; throws InvalidArgument on ragged rows.
  explicit Matrix(const std::vector<std::vector<F>>& rows) : rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) fail(ErrorKind::InvalidArgument, "ragged matrix rows");
      a_.insert(a_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<std::vector<F>> to_rows() const {
    std::vector<std::vector<F>> out(rows_, std::vector<F>(cols_));
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
    }
    return out;
  }

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  friend Matrix operator+(Matrix x, const Matrix& y) {
    x.require_shape(y);
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] += y.a_[i];
    return x;
  }
  friend Matrix operator-(Matrix x, const Matrix& y) {
    x.require_shape(y);
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] -= y.a_[i];
    return x;
  }
  Matrix operator-() const {
    Matrix x = *this;
    for (auto& v : x.a_) v = -v;
    return x;
  }
  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) fail(ErrorKind::InvalidArgument, "matrix product shape mismatch");
    Matrix out(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i) {
      for (std::size_t t = 0; t < x.cols_; ++t) {
        const F& v = x(i, t);
        if (v == F(0)) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) out(i, j) += v * y(t, j);
      }
    }
    return out;
  }
  friend Matrix operator*(const F& c, Matrix x) {
    for (auto& v : x.a_) v *= c;
    return x;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    }
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }
  }

  /// Reduced row echelon form and the pivot columns.
  std::pair<Matrix, std::vector<std::size_t>> rref() const {
    Matrix m = *this;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && m(p, c) == F(0)) ++p;
      if (p == rows_) continue;
      m.swap_rows(p, r);
      F inv = F(1) / m(r, c);
      for (std::size_t j = 0; j < cols_; ++j) m(r, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || m(i, c) == F(0)) continue;
        F f = m(i, c);
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) -= f * m(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return {std::move(m), std::move(pivots)};
  }

  std::size_t rank() const { return rref().second.size(); }

  /// Basis of {v : M v = 0}, as columns of the result (cols() x nullity).
  Matrix nullspace() const {
    auto [r, pivots] = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!is_pivot[c]) free.push_back(c);
    }
    Matrix basis(cols_, free.size());
    for (std::size_t f = 0; f < free.size(); ++f) {
      basis(free[f], f) = F(1);
      for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], f) = -r(i, free[f]);
    }
    return basis;
  }

  F det() const {
    require_square();
    Matrix m = *this;
    F d(1);
    for (std::size_t c = 0; c < rows_; ++c) {
      std::size_t p = c;
      while (p < rows_ && m(p, c) == F(0)) ++p;
      if (p == rows_) return F(0);
      if (p != c) {
        m.swap_rows(p, c);
        d = -d;
      }
      d *= m(c, c);
      F inv = F(1) / m(c, c);
      for (std::size_t i = c + 1; i < rows_; ++i) {
        if (m(i, c) == F(0)) continue;
        F f = m(i, c) * inv;
        for (std::size_t j = c; j < rows_; ++j) m(i, j) -= f * m(c, j);
      }
    }
    return d;
  }

  std::optional<Matrix> try_inverse() const {
    require_square();
    const std::size_t n = rows_;
    if (n == 0) return Matrix(0, 0);
    Matrix aug(n, 2 * n);
    aug.set_block(0, 0, *this);
    aug.set_block(0, n, identity(n));
    auto [r, pivots] = aug.rref();
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    return r.block(0, n, n, n);
  }

  bool is_invertible() const { return try_inverse().has_value(); }

  /// Characteristic polynomial det(x I - M), coefficients from degree 0 upward (monic).
  std::vector<F> charpoly() const {
    require_square();
    const std::size_t n = rows_;
    Matrix h = *this;
    // similarity reduction to upper Hessenberg form
    for (std::size_t j = 0; j + 2 < n; ++j) {
      std::size_t p = j + 1;
      while (p < n && h(p, j) == F(0)) ++p;
      if (p == n) continue;
      if (p != j + 1) {
        h.swap_rows(p, j + 1);
        h.swap_cols(p, j + 1);
      }
      for (std::size_t r = j + 2; r < n; ++r) {
        if (h(r, j) == F(0)) continue;
        F u = h(r, j) / h(j + 1, j);
        for (std::size_t c = 0; c < n; ++c) h(r, c) -= u * h(j + 1, c);
        for (std::size_t c = 0; c < n; ++c) h(c, j + 1) += u * h(c, r);
      }
    }
    std::vector<std::vector<F>> p(n + 1);
    p[0] = {F(1)};
    for (std::size_t m = 0; m < n; ++m) {
      // (x - h_mm) p_m
      std::vector<F> next(m + 2, F(0));
      for (std::size_t d = 0; d <= m; ++d) {
        next[d + 1] += p[m][d];
        next[d] -= h(m, m) * p[m][d];
      }
      F prod(1);
      for (std::size_t i = m; i-- > 0;) {
        prod *= h(i + 1, i);
        F coef = prod * h(i, m);
        if (coef == F(0)) continue;
        for (std::size_t d = 0; d < p[i].size(); ++d) next[d] -= coef * p[i][d];
      }
      p[m + 1] = std::move(next);
    }
    return p[n];
  }

 private:
  void require_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorKind::InvalidArgument, "matrix shape mismatch");
  }
  void require_square() const {
    if (!is_square()) fail(ErrorKind::InvalidArgument, "square matrix required");
  }
  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> a_;
};

/// Integer power; negative exponents invert. Throws NotRegular when inverting a singular matrix.
template <class F>
Matrix<F> matrix_power(const Matrix<F>& m, const Integer& e) {
  if (!m.is_square()) fail(ErrorKind::InvalidArgument, "square matrix required");
  Matrix<F> base = m;
  if (e < 0) {
    auto inv = m.try_inverse();
    if (!inv) fail(ErrorKind::NotRegular, "singular matrix raised to a negative power");
    base = *inv;
  }
  Integer k = abs(e);
  Matrix<F> result = Matrix<F>::identity(m.rows());
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

using RationalMatrix = Matrix<Rational>;

}  // namespace mutwb
