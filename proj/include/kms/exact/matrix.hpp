#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kms/exact/scalar.hpp"

namespace kms {

using Int = std::int64_t;
using IntVec = std::vector<Int>;

inline bool is_zero_value(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero_value(const Scalar& x) { return x.is_zero(); }
inline bool is_zero_value(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero_value(Int x) { return x == 0; }

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, const T& fill = T(0)) : r_(r), c_(c), d_(r * c, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    r_ = rows.size();
    c_ = r_ ? rows.begin()->size() : 0;
    for (const auto& row : rows) {
      if (row.size() != c_) fail(ErrorCode::Internal, "ragged matrix literal");
      d_.insert(d_.end(), row.begin(), row.end());
    }
  }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m;
    m.r_ = rows.size();
    m.c_ = m.r_ ? rows[0].size() : 0;
    for (const auto& row : rows) {
      if (row.size() != m.c_) fail(ErrorCode::Internal, "ragged matrix rows");
      m.d_.insert(m.d_.end(), row.begin(), row.end());
    }
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  T& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }
  std::vector<T> row(std::size_t i) const { return {d_.begin() + i * c_, d_.begin() + (i + 1) * c_}; }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> v;
    v.reserve(r_);
    for (std::size_t i = 0; i < r_; ++i) v.push_back((*this)(i, j));
    return v;
  }
  void set_row(std::size_t i, const std::vector<T>& v) {
    for (std::size_t j = 0; j < c_; ++j) (*this)(i, j) = v[j];
  }
  const std::vector<T>& data() const { return d_; }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) fail(ErrorCode::Internal, "matrix shape mismatch");
    Matrix m(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k) {
        const T& x = a(i, k);
        if (is_zero_value(x)) continue;
        for (std::size_t j = 0; j < b.c_; ++j) m(i, j) = m(i, j) + x * b(k, j);
      }
    return m;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix m = a;
    for (std::size_t i = 0; i < m.d_.size(); ++i) m.d_[i] = m.d_[i] + b.d_[i];
    return m;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix m = a;
    for (std::size_t i = 0; i < m.d_.size(); ++i) m.d_[i] = m.d_[i] - b.d_[i];
    return m;
  }
  std::vector<T> apply(const std::vector<T>& v) const {
    std::vector<T> out(r_, T(0));
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j)
        if (!is_zero_value(v[j])) out[i] = out[i] + (*this)(i, j) * v[j];
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.d_ == b.d_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
  friend bool operator<(const Matrix& a, const Matrix& b) { return a.d_ < b.d_; }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<T> d_;
};

using IntMatrix = Matrix<Int>;
using QMatrix = Matrix<Rational>;
using SMatrix = Matrix<Scalar>;

template <class T>
struct EchelonForm {
  Matrix<T> m;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form over a field.
template <class T>
EchelonForm<T> rref(Matrix<T> m) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero_value(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    T inv = T(1) / m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero_value(m(i, c))) continue;
      T f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_zero_value(m(r, j))) m(i, j) = m(i, j) - f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(piv)};
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return rref(m).pivots.size();
}

template <class T>
T determinant(Matrix<T> m) {
  const std::size_t n = m.rows();
  T det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero_value(m(p, c))) ++p;
    if (p == n) return T(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det = det * m(c, c);
    T inv = T(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero_value(m(i, c))) continue;
      T f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
    }
  }
  return det;
}

/// One solution x of m x = b, if any.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& m, const std::vector<T>& b) {
  Matrix<T> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto e = rref(std::move(aug));
  std::vector<T> x(m.cols(), T(0));
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    if (e.pivots[k] == m.cols()) return std::nullopt;
    x[e.pivots[k]] = e.m(k, m.cols());
  }
  return x;
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  auto e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.m(i, n + j);
  return inv;
}

/// Basis of {x : m x = 0}.
template <class T>
std::vector<std::vector<T>> nullspace(const Matrix<T>& m) {
  auto e = rref(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto p : e.pivots) is_piv[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    std::vector<T> v(m.cols(), T(0));
    v[f] = T(1);
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.m(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T, class U>
Matrix<T> convert(const Matrix<U>& m) {
  Matrix<T> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = T(m(i, j));
  return r;
}

inline QMatrix to_rational(const IntMatrix& m) {
  QMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(static_cast<long>(m(i, j)));
  return r;
}

inline SMatrix to_scalar(const IntMatrix& m) {
  SMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Scalar(static_cast<long>(m(i, j)));
  return r;
}

inline Int to_int(const Rational& q) {
  if (!is_integral(q)) fail(ErrorCode::Internal, "expected an integer, got " + q.get_str());
  if (!q.get_num().fits_slong_p()) fail(ErrorCode::Overflow, "integer does not fit in 64 bits");
  return q.get_num().get_si();
}

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer overflow");
  return r;
}
inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer overflow");
  return r;
}

/// Integer matrix product with overflow checks.
inline IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorCode::Internal, "matrix shape mismatch");
  IntMatrix m(a.rows(), b.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) m(i, j) = checked_add(m(i, j), checked_mul(x, b(k, j)));
    }
  return m;
}

inline IntVec mul(const IntMatrix& a, const IntVec& v) {
  IntVec out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (v[j] != 0 && a(i, j) != 0) out[i] = checked_add(out[i], checked_mul(a(i, j), v[j]));
  return out;
}

/// Exact integer inverse of a unimodular matrix.
inline IntMatrix unimodular_inverse(const IntMatrix& m) {
  auto inv = inverse(to_rational(m));
  if (!inv) fail(ErrorCode::Internal, "matrix is singular");
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = to_int((*inv)(i, j));
  return r;
}

}  // namespace kms
