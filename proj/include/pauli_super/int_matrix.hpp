#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "pauli_super/errors.hpp"

namespace pauli_super {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major matrix with arbitrary-precision integer entries.
///
/// Every matrix in the library (Pauli words, basis elements of P(t),
/// evaluated brackets) lives here, so zero tests and determinants are exact.
/// Shape is fixed at construction.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Row-wise literal, e.g. IntMatrix{{0, 1}, {-1, 0}}.
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw DimensionError("IntMatrix: ragged initializer");
      for (long long v : row) data_.emplace_back(v);
    }
  }

  static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<BigInt>& entries() const noexcept { return data_; }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!v.is_zero()) return false;
    return true;
  }

  /// Copy of the nr x nc block whose top-left corner is (r0, c0).
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("IntMatrix::block: out of range");
    IntMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  /// Writes `src` into this matrix with its top-left corner at (r0, c0).
  void set_block(std::size_t r0, std::size_t c0, const IntMatrix& src) {
    if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_)
      throw DimensionError("IntMatrix::set_block: out of range");
    for (std::size_t i = 0; i < src.rows_; ++i)
      for (std::size_t j = 0; j < src.cols_; ++j) (*this)(r0 + i, c0 + j) = src(i, j);
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

inline std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

namespace detail {
inline void require_same_shape(const IntMatrix& x, const IntMatrix& y, const char* op) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw DimensionError(std::string(op) + ": shape mismatch");
}
}  // namespace detail

inline IntMatrix mat_add(const IntMatrix& x, const IntMatrix& y) {
  detail::require_same_shape(x, y, "mat_add");
  IntMatrix r(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) r(i, j) = x(i, j) + y(i, j);
  return r;
}

inline IntMatrix mat_sub(const IntMatrix& x, const IntMatrix& y) {
  detail::require_same_shape(x, y, "mat_sub");
  IntMatrix r(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) r(i, j) = x(i, j) - y(i, j);
  return r;
}

inline IntMatrix mat_scale(const IntMatrix& x, const BigInt& s) {
  IntMatrix r(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) r(i, j) = s * x(i, j);
  return r;
}

// Zero entries of x are skipped: most matrices here are signed permutation
// matrices, so this brings a product down to O(n^2) in practice.
inline IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols() != y.rows()) throw DimensionError("mat_mul: inner dimensions differ");
  IntMatrix r(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k) {
      const BigInt& xik = x(i, k);
      if (xik.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) {
        const BigInt& ykj = y(k, j);
        if (!ykj.is_zero()) r(i, j) += xik * ykj;
      }
    }
  return r;
}

inline IntMatrix mat_transpose(const IntMatrix& x) {
  IntMatrix r(x.cols(), x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) r(j, i) = x(i, j);
  return r;
}

inline BigInt mat_trace(const IntMatrix& x) {
  if (!x.is_square()) throw DimensionError("mat_trace: matrix is not square");
  BigInt s = 0;
  for (std::size_t i = 0; i < x.rows(); ++i) s += x(i, i);
  return s;
}

/// Exact determinant by Bareiss fraction-free elimination. Every division is
/// exact, so intermediate entries stay integral and bounded by minors of x.
inline BigInt mat_det(const IntMatrix& x) {
  if (!x.is_square()) throw DimensionError("mat_det: matrix is not square");
  const std::size_t n = x.rows();
  if (n == 0) return 1;
  IntMatrix a = x;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

inline IntMatrix mat_kron(const IntMatrix& x, const IntMatrix& y) {
  IntMatrix r(x.rows() * y.rows(), x.cols() * y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) {
      if (x(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < y.rows(); ++k)
        for (std::size_t l = 0; l < y.cols(); ++l) r(i * y.rows() + k, j * y.cols() + l) = x(i, j) * y(k, l);
    }
  return r;
}

/// If x = s * y for an integer s, returns s. Returns nullopt when x is not an
/// integer multiple of y. A zero y only admits a zero x (reported as s = 0).
inline std::optional<BigInt> integer_ratio(const IntMatrix& x, const IntMatrix& y) {
  detail::require_same_shape(x, y, "integer_ratio");
  std::optional<BigInt> s;
  for (std::size_t i = 0; i < x.entries().size(); ++i) {
    const BigInt& yi = y.entries()[i];
    const BigInt& xi = x.entries()[i];
    if (yi.is_zero()) {
      if (!xi.is_zero()) return std::nullopt;
      continue;
    }
    if (!s) {
      if (xi % yi != 0) return std::nullopt;
      s = xi / yi;
    } else if (xi != *s * yi) {
      return std::nullopt;
    }
  }
  return s.value_or(BigInt(0));
}

}  // namespace pauli_super
