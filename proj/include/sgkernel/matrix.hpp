#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sgkernel/errors.hpp"
#include "sgkernel/rational.hpp"

namespace sgkernel {

// Dense row-major matrix. Everything at desk scale (C(12,6) = 924 is the
// largest side we ever index), so no sparse machinery.
template <typename T>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols, const T& fill = T())
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Mat ones(int rows, int cols) { return Mat(rows, cols, T(1)); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const T& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  bool operator==(const Mat& other) const = default;

  Mat operator*(const Mat& other) const {
    if (cols_ != other.rows_) throw DomainError("matrix product: dimension mismatch");
    Mat out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == T(0)) continue;
        for (int j = 0; j < other.cols_; ++j) {
          const T& b = other(k, j);
          if (b != T(0)) out(i, j) += a * b;
        }
      }
    return out;
  }

  Mat operator+(const Mat& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
      throw DomainError("matrix sum: dimension mismatch");
    Mat out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
    return out;
  }

  Mat operator-(const Mat& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
      throw DomainError("matrix difference: dimension mismatch");
    Mat out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
    return out;
  }

  Mat scaled(const T& s) const {
    Mat out = *this;
    for (auto& v : out.data_) v *= s;
    return out;
  }

  Mat transpose() const {
    Mat out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  bool is_zero() const {
    for (const auto& v : data_) {
      if (v != T(0)) return false;
    }
    return true;
  }

  std::vector<T> row(int r) const {
    std::vector<T> out(cols_);
    for (int j = 0; j < cols_; ++j) out[j] = (*this)(r, j);
    return out;
  }

  std::vector<T> col(int c) const {
    std::vector<T> out(rows_);
    for (int i = 0; i < rows_; ++i) out[i] = (*this)(i, c);
    return out;
  }

  T trace() const {
    T t(0);
    for (int i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using RatMat = Mat<Rational>;

// row vector * matrix
template <typename T>
std::vector<T> operator*(const std::vector<T>& v, const Mat<T>& m) {
  if (static_cast<int>(v.size()) != m.rows())
    throw DomainError("row-vector product: dimension mismatch");
  std::vector<T> out(m.cols(), T(0));
  for (int i = 0; i < m.rows(); ++i) {
    if (v[i] == T(0)) continue;
    for (int j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

// matrix * column vector
template <typename T>
std::vector<T> operator*(const Mat<T>& m, const std::vector<T>& v) {
  if (static_cast<int>(v.size()) != m.cols())
    throw DomainError("column-vector product: dimension mismatch");
  std::vector<T> out(m.rows(), T(0));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (v[j] != T(0)) out[i] += m(i, j) * v[j];
  return out;
}

// --- exact linear algebra ---------------------------------------------------

// Gauss-Jordan to reduced row echelon form; returns pivot column indices.
std::vector<int> rref(RatMat& m);

int matrix_rank(RatMat m);

// Basis of { x : M x = 0 }, one vector per free column, deterministic order.
std::vector<std::vector<Rational>> nullspace(const RatMat& m);

// Basis of { x : x M = 0 }.
std::vector<std::vector<Rational>> left_nullspace(const RatMat& m);

// Exact inverse; throws DomainError when singular.
RatMat inverse(const RatMat& m);

// Unique solution of A x = b, or nullopt when none exists or it is not unique.
std::optional<std::vector<Rational>> solve_unique(const RatMat& a,
                                                  const std::vector<Rational>& b);

// --- double-precision helpers (Abel-limit diagnostic only) -----------------

Mat<double> to_double(const RatMat& m);

// Partial-pivot inverse; reports the smallest pivot magnitude encountered so
// callers can flag near-singular systems.
Mat<double> inverse(const Mat<double>& m, double* min_pivot = nullptr);

}  // namespace sgkernel
