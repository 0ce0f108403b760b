#include "sgkernel/measures.hpp"

#include <algorithm>
#include <cmath>

#include "sgkernel/errors.hpp"
#include "sgkernel/hierarchy.hpp"

namespace sgkernel {

Rational Measure::total() const {
  Rational t = 0;
  for (const auto& [id, w] : weights) t += w;
  return t;
}

void Measure::trim() {
  for (auto it = weights.begin(); it != weights.end();)
    it = it->second == 0 ? weights.erase(it) : std::next(it);
}

Measure generator_measure(const ColorSystem& cs, const SemigroupTable& st) {
  Measure m;
  for (std::size_t i = 0; i < cs.colors.size(); ++i)
    m.weights[st.generator_ids()[i]] += cs.weights[i];
  return m;
}

Measure convolve(const Measure& m1, const Measure& m2, const SemigroupTable& st) {
  Measure out;
  for (const auto& [a, wa] : m1.weights) {
    if (wa == 0) continue;
    for (const auto& [b, wb] : m2.weights) {
      if (wb == 0) continue;
      out.weights[st.product(a, b)] += wa * wb;
    }
  }
  out.trim();
  return out;
}

namespace {

// Solves the stacked system {v = L v, v = R v} for a one-dimensional
// nonnegative solution normalized so the entries weighted by `mass` sum to 1.
std::vector<Rational> joint_fixed_vector(const RatMat& left, const RatMat& right,
                                         const Rational& mass) {
  int m = left.rows();
  RatMat stacked(2 * m, m);
  RatMat eye = RatMat::identity(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      stacked(i, j) = eye(i, j) - left(i, j);
      stacked(m + i, j) = eye(i, j) - right(i, j);
    }
  auto basis = nullspace(stacked);
  if (basis.size() != 1)
    throw DomainError("SingularSystem: limit-measure fixed point not unique; generation bug");
  Rational total = 0;
  for (const auto& v : basis[0]) total += v * mass;
  if (total == 0) throw DomainError("SingularSystem: degenerate limit-measure solution");
  for (auto& v : basis[0]) {
    v /= total;
    if (v < 0) throw DomainError("limit measure with negative weight; solve bug");
  }
  return basis[0];
}

}  // namespace

Measure limit_measure_exact(const ColorSystem& cs, const SemigroupTable& st,
                            const KernelStructure& ks) {
  Measure mu = generator_measure(cs, st);
  int m = ks.size();
  int ny = static_cast<int>(ks.ranges().size());
  int cells = static_cast<int>(ks.partitions().size()) * ny;

  // Joint fixed-point system: lambda = mu * lambda and lambda = lambda * mu.
  // One side alone is degenerate (left convolution cannot see the range
  // marginal); both together pin the measure down uniquely.
  Measure lambda;
  if (m <= 300) {
    RatMat left(m, m), right(m, m);
    for (int s = 0; s < m; ++s) {
      for (const auto& [gid, w] : mu.weights) {
        const Transformation& c = st.element(gid);
        int lt = ks.index_of(compose(c, ks.element(s)));
        int rt = ks.index_of(compose(ks.element(s), c));
        if (lt < 0 || rt < 0)
          throw DomainError("kernel not closed under generators; generation bug");
        left(lt, s) += w;
        right(rt, s) += w;
      }
    }
    std::vector<Rational> v = joint_fixed_vector(left, right, Rational(1));
    for (int k = 0; k < m; ++k)
      if (v[k] != 0) lambda.weights[ks.semigroup_ids()[k]] = v[k];
  } else {
    // Large kernels: translation by a generator maps each Rees cell onto
    // another cell bijectively (elements of minimal rank cannot merge), so
    // the system aggregates exactly onto per-cell weights.
    RatMat left(cells, cells), right(cells, cells);
    for (std::size_t x = 0; x < ks.partitions().size(); ++x)
      for (int y = 0; y < ny; ++y) {
        int source = static_cast<int>(x) * ny + y;
        int idem = ks.cell_idempotent(static_cast<int>(x), y);
        for (const auto& [gid, w] : mu.weights) {
          const Transformation& c = st.element(gid);
          int lt = ks.index_of(compose(c, ks.element(idem)));
          int rt = ks.index_of(compose(ks.element(idem), c));
          if (lt < 0 || rt < 0)
            throw DomainError("kernel not closed under generators; generation bug");
          left(ks.partition_index(lt) * ny + ks.range_index(lt), source) += w;
          right(ks.partition_index(rt) * ny + ks.range_index(rt), source) += w;
        }
      }
    std::vector<Rational> v = joint_fixed_vector(left, right, Rational(ks.group_order()));
    for (int k = 0; k < m; ++k) {
      const Rational& w = v[ks.partition_index(k) * ny + ks.range_index(k)];
      if (w != 0) lambda.weights[ks.semigroup_ids()[k]] = w;
    }
  }

  // Verify the defining relations element by element, whichever path built
  // the measure.
  std::vector<Rational> from_left(m, Rational(0)), from_right(m, Rational(0));
  for (int s = 0; s < m; ++s) {
    Rational ws = lambda.at(ks.semigroup_ids()[s]);
    if (ws == 0) continue;
    for (const auto& [gid, w] : mu.weights) {
      const Transformation& c = st.element(gid);
      from_left[ks.index_of(compose(c, ks.element(s)))] += w * ws;
      from_right[ks.index_of(compose(ks.element(s), c))] += w * ws;
    }
  }
  for (int k = 0; k < m; ++k) {
    Rational expected = lambda.at(ks.semigroup_ids()[k]);
    if (from_left[k] != expected || from_right[k] != expected)
      throw DomainError("limit measure fails its fixed-point relations; solve bug");
  }
  return lambda;
}

LimitFactorization factorize_lambda(const Measure& lambda, const KernelStructure& ks) {
  int nx = static_cast<int>(ks.partitions().size());
  int ny = static_cast<int>(ks.ranges().size());
  for (const auto& [sid, w] : lambda.weights)
    if (w != 0 && ks.index_of_semigroup_id(sid) < 0)
      throw DomainError("factorize_lambda: measure not supported on the kernel");

  LimitFactorization f;
  f.alpha.assign(nx, Rational(0));
  f.beta.assign(ny, Rational(0));
  f.group_order = ks.group_order();
  auto weight_of = [&](int k) { return lambda.at(ks.semigroup_ids()[k]); };
  for (int k = 0; k < ks.size(); ++k) {
    f.alpha[ks.partition_index(k)] += weight_of(k);
    f.beta[ks.range_index(k)] += weight_of(k);
  }
  // Haar within cells and exact product form.
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y) {
      Rational expected = f.alpha[x] * f.beta[y] / f.group_order;
      for (int k : ks.cell(x, y))
        if (weight_of(k) != expected)
          throw DomainError("NotProductForm: measure is not alpha x Haar x beta");
    }
  return f;
}

Measure cesaro_partial(const ColorSystem& cs, const SemigroupTable& st, int N) {
  if (N < 1) throw DomainError("cesaro_partial: N must be positive");
  Measure mu = generator_measure(cs, st);
  Measure power = mu;
  Measure sum = mu;
  for (int m = 2; m <= N; ++m) {
    power = convolve(power, mu, st);
    for (const auto& [id, w] : power.weights) sum.weights[id] += w;
  }
  for (auto& [id, w] : sum.weights) w /= N;
  sum.trim();
  return sum;
}

Rational sup_distance(const Measure& a, const Measure& b) {
  Rational best = 0;
  auto scan = [&](const Measure& lhs, const Measure& rhs) {
    for (const auto& [id, w] : lhs.weights) {
      Rational d = w - rhs.at(id);
      if (d < 0) d = -d;
      best = std::max(best, d);
    }
  };
  scan(a, b);
  scan(b, a);
  return best;
}

Rational non_kernel_mass(const Measure& m, const KernelStructure& ks) {
  Rational t = 0;
  for (const auto& [sid, w] : m.weights)
    if (ks.index_of_semigroup_id(sid) < 0) t += w;
  return t;
}

RatMat omega_level(const KernelStructure& ks, const Measure& lambda, int level) {
  int dim = static_cast<int>(binomial(ks.elements().front().n(), level));
  RatMat omega(dim, dim);
  for (int k = 0; k < ks.size(); ++k) {
    Rational w = lambda.at(ks.semigroup_ids()[k]);
    if (w == 0) continue;
    omega = omega + level_matrix(ks.element(k), level).scaled(w);
  }
  return omega;
}

RatMat eigenprojection(const RatMat& p) {
  if (p.rows() != p.cols()) throw DomainError("eigenprojection: matrix not square");
  for (int i = 0; i < p.rows(); ++i) {
    Rational row_sum = 0;
    for (int j = 0; j < p.cols(); ++j) {
      if (p(i, j) < 0) throw DomainError("NotSubstochastic: negative entry");
      row_sum += p(i, j);
    }
    if (row_sum > 1) throw DomainError("NotSubstochastic: row sum exceeds 1");
  }
  RatMat shifted = RatMat::identity(p.rows()) - p;
  auto right = nullspace(shifted);               // P v = v
  auto left = nullspace(shifted.transpose());    // w P = w
  if (right.empty() || left.empty()) return RatMat(p.rows(), p.cols());
  int t = static_cast<int>(right.size());
  RatMat r(p.rows(), t), l(t, p.rows());
  for (int j = 0; j < t; ++j)
    for (int i = 0; i < p.rows(); ++i) {
      r(i, j) = right[j][i];
      l(j, i) = left[j][i];
    }
  // Eigenvalue 1 is semisimple for substochastic matrices, so L R is
  // invertible; a singular L R signals corrupt input.
  RatMat lr = l * r;
  RatMat lr_inv;
  try {
    lr_inv = inverse(lr);
  } catch (const DomainError&) {
    throw DomainError("eigenprojection: L R singular; eigenvalue 1 not semisimple");
  }
  return r * lr_inv * l;
}

Mat<double> abel_numeric(const RatMat& p, double s) {
  if (!(0 <= s && s < 1)) throw DomainError("abel_numeric: need 0 <= s < 1");
  int n = p.rows();
  Mat<double> system(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      system(i, j) = (i == j ? 1.0 : 0.0) - s * to_double(p(i, j));
  double min_pivot = 0;
  Mat<double> inv = inverse(system, &min_pivot);
  if (min_pivot < 1e-13)
    throw DomainError("NearSingular: I - sP poorly conditioned at s = " + std::to_string(s) +
                      " (pivot " + std::to_string(min_pivot) + ")");
  Mat<double> out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = (1.0 - s) * inv(i, j);
  return out;
}

double max_abs_diff(const Mat<double>& a, const Mat<double>& b) {
  double best = 0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) best = std::max(best, std::abs(a(i, j) - b(i, j)));
  return best;
}

}  // namespace sgkernel
