#include "sgkernel/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sgkernel {

std::vector<int> rref(RatMat& m) {
  std::vector<int> pivots;
  int lead = 0;
  for (int col = 0; col < m.cols() && lead < m.rows(); ++col) {
    int p = -1;
    for (int r = lead; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    if (p != lead)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(lead, j));
    Rational inv = Rational(1) / m(lead, col);
    for (int j = 0; j < m.cols(); ++j) m(lead, j) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, col) == 0) continue;
      Rational f = m(r, col);
      for (int j = 0; j < m.cols(); ++j) m(r, j) -= f * m(lead, j);
    }
    pivots.push_back(col);
    ++lead;
  }
  return pivots;
}

int matrix_rank(RatMat m) { return static_cast<int>(rref(m).size()); }

std::vector<std::vector<Rational>> nullspace(const RatMat& m) {
  RatMat r = m;
  std::vector<int> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (int free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(static_cast<int>(i), free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Rational>> left_nullspace(const RatMat& m) {
  return nullspace(m.transpose());
}

RatMat inverse(const RatMat& m) {
  if (m.rows() != m.cols()) throw DomainError("inverse: matrix not square");
  int n = m.rows();
  RatMat work(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) work(i, j) = m(i, j);
    work(i, n + i) = 1;
  }
  std::vector<int> pivots = rref(work);
  if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
    throw DomainError("inverse: singular matrix");
  RatMat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = work(i, n + j);
  return out;
}

std::optional<std::vector<Rational>> solve_unique(const RatMat& a,
                                                  const std::vector<Rational>& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw DomainError("solve: dimension mismatch");
  RatMat work(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) work(i, j) = a(i, j);
    work(i, a.cols()) = b[i];
  }
  std::vector<int> pivots = rref(work);
  // inconsistent if a pivot lands in the augmented column
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  if (static_cast<int>(pivots.size()) != a.cols()) return std::nullopt;  // underdetermined
  std::vector<Rational> x(a.cols());
  for (int i = 0; i < a.cols(); ++i) x[i] = work(i, a.cols());
  return x;
}

Mat<double> to_double(const RatMat& m) {
  Mat<double> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = to_double(m(i, j));
  return out;
}

Mat<double> inverse(const Mat<double>& m, double* min_pivot) {
  if (m.rows() != m.cols()) throw DomainError("inverse: matrix not square");
  int n = m.rows();
  Mat<double> a = m;
  Mat<double> inv = Mat<double>::identity(n);
  double smallest = std::numeric_limits<double>::infinity();
  for (int col = 0; col < n; ++col) {
    int p = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(p, col))) p = r;
    double pv = a(p, col);
    smallest = std::min(smallest, std::abs(pv));
    if (pv == 0.0) throw DomainError("inverse: singular matrix (double)");
    if (p != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a(p, j), a(col, j));
        std::swap(inv(p, j), inv(col, j));
      }
    for (int j = 0; j < n; ++j) {
      a(col, j) /= pv;
      inv(col, j) /= pv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      double f = a(r, col);
      if (f == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  if (min_pivot) *min_pivot = smallest;
  return inv;
}

}  // namespace sgkernel
