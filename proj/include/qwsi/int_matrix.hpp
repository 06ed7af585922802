// SPDX-License-Identifier: Apache-2.0
#pragma once

// Dense row-major int64 matrices with overflow-checked arithmetic. Combinatorial identities
// (walk counts, Bose–Mesner products, permutation representations) are checked exactly here.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "qwsi/errors.hpp"

namespace qwsi {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix constant(int rows, int cols, std::int64_t v) {
    IntMatrix m(rows, cols);
    std::fill(m.data_.begin(), m.data_.end(), v);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::int64_t& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::int64_t operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  bool operator==(const IntMatrix&) const = default;

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    a.require_same_shape(b);
    IntMatrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = checked_add(a.data_[i], b.data_[i]);
    return out;
  }

  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    a.require_same_shape(b);
    IntMatrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) {
      std::int64_t v;
      if (__builtin_sub_overflow(a.data_[i], b.data_[i], &v)) throw overflow();
      out.data_[i] = v;
    }
    return out;
  }

  friend IntMatrix operator*(std::int64_t s, const IntMatrix& a) {
    IntMatrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = checked_mul(s, a.data_[i]);
    return out;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw invalid_argument("matrix product shape mismatch");
    IntMatrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int k = 0; k < a.cols_; ++k) {
        const std::int64_t aik = a(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < b.cols_; ++j) out(i, j) = checked_add(out(i, j), checked_mul(aik, b(k, j)));
      }
    }
    return out;
  }

  /// M^m by repeated squaring.
  IntMatrix pow(int m) const {
    if (rows_ != cols_) throw invalid_argument("matrix power needs a square matrix");
    if (m < 0) throw invalid_argument("matrix power must be non-negative");
    IntMatrix result = identity(rows_), base = *this;
    while (m > 0) {
      if (m & 1) result = result * base;
      m >>= 1;
      if (m > 0) base = base * base;
    }
    return result;
  }

  std::int64_t max_abs() const {
    std::int64_t r = 0;
    for (std::int64_t v : data_) r = std::max(r, v < 0 ? -v : v);
    return r;
  }

 private:
  static Error overflow() { return invalid_argument("integer overflow in exact matrix arithmetic"); }

  static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t v;
    if (__builtin_add_overflow(a, b, &v)) throw overflow();
    return v;
  }

  static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t v;
    if (__builtin_mul_overflow(a, b, &v)) throw overflow();
    return v;
  }

  void require_same_shape(const IntMatrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw invalid_argument("matrix shape mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

}  // namespace qwsi
