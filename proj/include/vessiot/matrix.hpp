#pragma once

// Dense matrices over a commutative ring T, with field-only operations
// (inverse, determinant, LU) available when T has exact division.
//
// MatK = Matrix<RatFunc> models group elements of GL(n, K) and automorphic
// fields in gl(n, K). The generic form is reused with multivariate polynomial
// entries to generate Lie-Vessiot systems symbolically.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vessiot/errors.hpp"
#include "vessiot/ratfunc.hpp"

namespace vessiot {

template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw Error(ErrorCode::DimensionMismatch, "entry count does not match shape");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) : rows_(rows.size()) {
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw Error(ErrorCode::RaggedRows, "ragged matrix rows");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = T(1);
    return m;
  }

  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const std::vector<T>& data() const noexcept { return data_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  // Rows [r0, r0+nr), columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorCode::DimensionMismatch, "block out of range");
    Matrix r(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
    return r;
  }

  template <class F>
  auto map(F f) const -> Matrix<std::invoke_result_t<F, const T&>> {
    std::vector<std::invoke_result_t<F, const T&>> out;
    out.reserve(data_.size());
    for (const auto& x : data_) out.push_back(f(x));
    return {rows_, cols_, std::move(out)};
  }

  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw Error(ErrorCode::DimensionMismatch, "cannot multiply " + a.shape() + " by " + b.shape());
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (b(k, j).is_zero()) continue;
          r(i, j) += aik * b(k, j);
        }
      }
    return r;
  }

  friend Matrix operator*(const T& s, Matrix m) {
    for (auto& x : m.data_) x = s * x;
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw Error(ErrorCode::DimensionMismatch, "shape " + shape() + " vs " + o.shape());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using MatK = Matrix<RatFunc>;

template <class T>
void require_square(const Matrix<T>& a, const char* what) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, std::string(what) + " needs a square matrix, got " + a.shape());
}

template <class T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b;
}

// Gaussian elimination with exact pivoting on the first nonzero entry in row
// order. Throws Singular when the determinant vanishes.
template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
  require_square(a, "inverse");
  const std::size_t n = a.rows();
  Matrix<T> work = a;
  Matrix<T> inv = Matrix<T>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw Error(ErrorCode::Singular, "matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(col, j), work(pivot, j));
        std::swap(inv(col, j), inv(pivot, j));
      }
    }
    const T p_inv = T(1) / work(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      if (!work(col, j).is_zero()) work(col, j) = work(col, j) * p_inv;
      if (!inv(col, j).is_zero()) inv(col, j) = inv(col, j) * p_inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work(r, col).is_zero()) continue;
      const T factor = work(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (!work(col, j).is_zero()) work(r, j) -= factor * work(col, j);
        if (!inv(col, j).is_zero()) inv(r, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

template <class T>
T determinant(const Matrix<T>& a) {
  require_square(a, "determinant");
  const std::size_t n = a.rows();
  Matrix<T> work = a;
  T det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return T();
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(work(col, j), work(pivot, j));
      det = -det;
    }
    det = det * work(col, col);
    const T p_inv = T(1) / work(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (work(r, col).is_zero()) continue;
      const T factor = work(r, col) * p_inv;
      for (std::size_t j = col; j < n; ++j)
        if (!work(col, j).is_zero()) work(r, j) -= factor * work(col, j);
    }
  }
  return det;
}

// Leading principal minors, orders 1..n.
template <class T>
std::vector<T> principal_minors(const Matrix<T>& a) {
  require_square(a, "principal_minors");
  std::vector<T> minors;
  minors.reserve(a.rows());
  for (std::size_t k = 1; k <= a.rows(); ++k) minors.push_back(determinant(a.block(0, 0, k, k)));
  return minors;
}

template <class T>
struct Blocks {
  Matrix<T> a11, a12, a21, a22;
};

// Splits an n x n matrix with a leading m x m block, 1 <= m < n.
template <class T>
Blocks<T> block_split(const Matrix<T>& a, std::size_t m) {
  require_square(a, "block_split");
  const std::size_t n = a.rows();
  if (m < 1 || m >= n)
    throw Error(ErrorCode::BadBlockSize, "block size " + std::to_string(m) + " outside [1, " + std::to_string(n) + ")");
  return {a.block(0, 0, m, m), a.block(0, m, m, n - m), a.block(m, 0, n - m, m), a.block(m, m, n - m, n - m)};
}

template <class T>
Matrix<T> block_join(const Blocks<T>& b) {
  const std::size_t m = b.a11.rows();
  const std::size_t n = m + b.a22.rows();
  if (b.a11.cols() != m || b.a12.rows() != m || b.a12.cols() != n - m || b.a21.rows() != n - m ||
      b.a21.cols() != m || b.a22.cols() != n - m)
    throw Error(ErrorCode::DimensionMismatch, "inconsistent block shapes");
  Matrix<T> r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i < m && j < m) r(i, j) = b.a11(i, j);
      else if (i < m) r(i, j) = b.a12(i, j - m);
      else if (j < m) r(i, j) = b.a21(i - m, j);
      else r(i, j) = b.a22(i - m, j - m);
    }
  return r;
}

template <class T>
struct LUFactors {
  Matrix<T> lower;  // unit lower triangular
  Matrix<T> upper;  // upper triangular
};

// Doolittle factorisation without pivoting: a = L U, L unit lower triangular.
// Exists and is unique exactly when every leading principal minor is nonzero;
// otherwise reports the order of the first vanishing one.
template <class T>
LUFactors<T> lu_flag_decompose(const Matrix<T>& a) {
  require_square(a, "lu_flag_decompose");
  const std::size_t n = a.rows();
  Matrix<T> lower = Matrix<T>::identity(n);
  Matrix<T> upper = a;
  for (std::size_t col = 0; col < n; ++col) {
    // upper(col, col) = minor_{col+1} / minor_{col}
    if (upper(col, col).is_zero()) throw PrincipalMinorVanishes(col + 1);
    const T p_inv = T(1) / upper(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (upper(r, col).is_zero()) continue;
      const T factor = upper(r, col) * p_inv;
      lower(r, col) = factor;
      for (std::size_t j = col; j < n; ++j)
        if (!upper(col, j).is_zero()) upper(r, j) -= factor * upper(col, j);
    }
  }
  return {std::move(lower), std::move(upper)};
}

// Entrywise d/dt.
inline MatK derive(const MatK& a) {
  return a.map([](const RatFunc& x) { return x.derivative(); });
}

template <class T>
Matrix<T> lie_bracket(const Matrix<T>& a, const Matrix<T>& b) {
  require_square(a, "lie_bracket");
  if (a.rows() != b.rows() || !b.is_square())
    throw Error(ErrorCode::DimensionMismatch, "bracket of " + a.shape() + " and " + b.shape());
  return a * b - b * a;
}

template <class T>
T trace(const Matrix<T>& a) {
  require_square(a, "trace");
  T s;
  for (std::size_t k = 0; k < a.rows(); ++k) s += a(k, k);
  return s;
}

template <class T>
bool is_unit_lower_triangular(const Matrix<T>& a) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j) {
      if (i == j && !(a(i, j) == T(1))) return false;
      if (i != j && !a(i, j).is_zero()) return false;
    }
  return true;
}

template <class T>
bool is_upper_triangular(const Matrix<T>& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < i && j < a.cols(); ++j)
      if (!a(i, j).is_zero()) return false;
  return true;
}

// Inverse of a unit lower triangular matrix by forward substitution; needs
// only ring operations, so it also works on polynomial entries.
template <class T>
Matrix<T> unit_lower_inverse(const Matrix<T>& l) {
  require_square(l, "unit_lower_inverse");
  const std::size_t n = l.rows();
  Matrix<T> inv = Matrix<T>::identity(n);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      T s;
      for (std::size_t k = j; k < i; ++k)
        if (!l(i, k).is_zero() && !inv(k, j).is_zero()) s += l(i, k) * inv(k, j);
      inv(i, j) = -s;
    }
  return inv;
}

template <class T>
Matrix<T> strictly_lower_part(const Matrix<T>& a) {
  Matrix<T> r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < i && j < a.cols(); ++j) r(i, j) = a(i, j);
  return r;
}

// Text form "[a, b; c, d]" (rows separated by ';').
template <class T>
std::string to_string(const Matrix<T>& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i != 0) out += "; ";
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j != 0) out += ", ";
      out += to_string(a(i, j));
    }
  }
  return out + "]";
}

}  // namespace vessiot
