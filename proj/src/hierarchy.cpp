#include "sgkernel/hierarchy.hpp"

#include <bit>

#include "sgkernel/errors.hpp"

namespace sgkernel {

namespace {

void require_level(int n, int level, int lo = 1) {
  if (level < lo || level > n)
    throw DomainError("level " + std::to_string(level) + " out of range for n = " +
                      std::to_string(n));
}

}  // namespace

RatMat level_matrix(const Transformation& f, int level) {
  require_level(f.n(), level);
  SubsetTable table(f.n(), level);
  RatMat m(table.size(), table.size());
  for (int i = 0; i < table.size(); ++i) {
    SubsetMask img = table.image_mask(i, f);
    int j = table.index_of(img);  // -1 when f collapses the subset
    if (j >= 0) m(i, j) = 1;
  }
  return m;
}

Rational permanent(const RatMat& m) {
  int k = m.rows();
  if (k != m.cols()) throw DomainError("permanent: matrix not square");
  // expansion along the first uncommitted row, tracking used columns
  std::vector<bool> used(k, false);
  auto rec = [&](auto&& self, int row) -> Rational {
    if (row == k) return 1;
    Rational sum = 0;
    for (int j = 0; j < k; ++j) {
      if (used[j] || m(row, j) == 0) continue;
      used[j] = true;
      sum += m(row, j) * self(self, row + 1);
      used[j] = false;
    }
    return sum;
  };
  return rec(rec, 0);
}

RatMat level_matrix_via_permanents(const Transformation& f, int level) {
  require_level(f.n(), level);
  SubsetTable table(f.n(), level);
  RatMat big = matrix_of(f);
  RatMat out(table.size(), table.size());
  for (int i = 0; i < table.size(); ++i) {
    const auto& rows = table.members(i);
    for (int j = 0; j < table.size(); ++j) {
      const auto& cols = table.members(j);
      RatMat sub(level, level);
      for (int a = 0; a < level; ++a)
        for (int b = 0; b < level; ++b) sub(a, b) = big(rows[a] - 1, cols[b] - 1);
      out(i, j) = permanent(sub);
    }
  }
  return out;
}

RatMat augmented_level_matrix(const Transformation& f, int level) {
  require_level(f.n(), level);
  SubsetTable table(f.n(), level);
  int c = table.size();
  RatMat m(c + 1, c + 1);
  for (int i = 0; i < c; ++i) {
    SubsetMask img = table.image_mask(i, f);
    int j = table.index_of(img);
    if (j >= 0)
      m(i, j) = 1;
    else
      m(i, c) = 1;
  }
  m(c, c) = 1;  // absorbing
  return m;
}

bool homomorphism_check(const Transformation& f, const Transformation& g, int level) {
  if (f.n() != g.n()) throw DomainError("homomorphism_check: size mismatch");
  return level_matrix(compose(f, g), level) == level_matrix(f, level) * level_matrix(g, level);
}

RatMat inclusion_operator(int n, int from_level, int to_level) {
  require_level(n, from_level, 0);
  require_level(n, to_level, 0);
  SubsetTable rows(n, from_level);
  SubsetTable cols(n, to_level);
  RatMat m(rows.size(), cols.size());
  for (int i = 0; i < rows.size(); ++i)
    for (int j = 0; j < cols.size(); ++j) {
      SubsetMask a = rows.mask(i), b = cols.mask(j);
      bool inc = from_level <= to_level ? (a & b) == a : (a & b) == b;
      if (inc) m(i, j) = 1;
    }
  return m;
}

RatMat exclusion_operator(int n, int from_level, int to_level) {
  require_level(n, from_level, 0);
  require_level(n, to_level, 0);
  SubsetTable rows(n, from_level);
  SubsetTable cols(n, to_level);
  RatMat m(rows.size(), cols.size());
  for (int i = 0; i < rows.size(); ++i)
    for (int j = 0; j < cols.size(); ++j)
      if ((rows.mask(i) & cols.mask(j)) == 0) m(i, j) = 1;
  return m;
}

std::vector<int> local_commuting_violations(const Transformation& f, int level) {
  if (level <= 1) throw DomainError("local_commuting_violations: level must exceed 1");
  int n = f.n();
  RatMat lhs = inclusion_operator(n, level, level - 1) * level_matrix(f, level - 1);
  RatMat rhs = level_matrix(f, level) * inclusion_operator(n, level, level - 1);
  SubsetTable table(n, level);
  std::vector<int> bad;
  for (int i = 0; i < table.size(); ++i) {
    if (!is_preserved(f, table.members(i))) continue;
    for (int j = 0; j < lhs.cols(); ++j)
      if (lhs(i, j) != rhs(i, j)) {
        bad.push_back(i);
        break;
      }
  }
  return bad;
}

bool factorial_composition_check(int n, int a, int b) {
  if (!(1 <= a && a < b && b <= n))
    throw DomainError("factorial_composition_check: need 1 <= a < b <= n");
  RatMat chain = inclusion_operator(n, b, b - 1);
  for (int l = b - 1; l > a; --l) chain = chain * inclusion_operator(n, l, l - 1);
  Rational fact = 1;
  for (int i = 2; i <= b - a; ++i) fact *= i;
  return chain == inclusion_operator(n, b, a).scaled(fact);
}

RatMat inclusion_inverse(int n, int level) {
  if (level < 1 || 2 * level > n)
    throw DomainError("inclusion_inverse: need 1 <= level <= n/2");
  int co = n - level;
  RatMat sum(static_cast<int>(binomial(n, co)), static_cast<int>(binomial(n, level)));
  Rational sign = 1;
  for (int i = 0; i <= level; ++i) {
    Rational coeff = sign / Rational(binomial(n - i - level, level - i));
    sum = sum + (exclusion_operator(n, co, i) * inclusion_operator(n, i, level)).scaled(coeff);
    sign = -sign;
  }
  RatMat e = inclusion_operator(n, level, co);
  if (e * sum == RatMat::identity(e.rows())) return sum;
  // Formula failed to verify; solve directly. Not expected to trigger.
  return inverse(e);
}

bool special_inverse_check(int n) {
  if (n < 2) throw DomainError("special_inverse_check: need n >= 2");
  RatMat j = RatMat::ones(n, n);
  RatMat anti(n, n);
  for (int i = 0; i < n; ++i) anti(i, n - 1 - i) = 1;
  RatMat e = inclusion_operator(n, 1, n - 1);
  if (e != j - anti) return false;
  RatMat inv = j.scaled(Rational(1, n - 1)) - anti;
  return e * inv == RatMat::identity(n) && inv * e == RatMat::identity(n);
}

bool is_preserved(const Transformation& f, const std::vector<int>& members) {
  SubsetMask img = 0;
  for (int v : members) img |= SubsetMask{1} << (f.apply(v) - 1);
  return std::popcount(img) == static_cast<int>(members.size());
}

bool is_compatible(const std::vector<Rational>& v, int n, int level,
                   const std::vector<Transformation>& fs) {
  SubsetTable table(n, level);
  if (static_cast<int>(v.size()) != table.size())
    throw DomainError("is_compatible: vector length does not match level");
  for (int i = 0; i < table.size(); ++i) {
    if (v[i] == 0) continue;
    for (const auto& f : fs)
      if (!is_preserved(f, table.members(i))) return false;
  }
  return true;
}

std::vector<Rational> descend_left_eigenvector(const std::vector<Rational>& v, int n, int level,
                                               const std::vector<Transformation>& check) {
  require_level(n, level);
  if (!check.empty() && !is_compatible(v, n, level, check))
    throw DomainError("descend_left_eigenvector: vector not compatible (support on collapsed sets)");
  return v * inclusion_operator(n, level, level - 1);
}

RatMat weighted_inclusion(const std::vector<Rational>& weights, int from_level, int to_level) {
  int n = static_cast<int>(weights.size());
  for (const auto& w : weights)
    if (w <= 0) throw DomainError("weighted_inclusion: weights must be positive");
  if (from_level >= to_level)
    throw DomainError("weighted_inclusion: source level must lie below target level");
  require_level(n, from_level, 0);
  require_level(n, to_level);
  SubsetTable rows(n, from_level);
  SubsetTable cols(n, to_level);
  RatMat m(rows.size(), cols.size());
  for (int i = 0; i < rows.size(); ++i)
    for (int j = 0; j < cols.size(); ++j) {
      SubsetMask a = rows.mask(i), b = cols.mask(j);
      if ((a & b) != a) continue;
      Rational prod = 1;
      for (int v : members_of(b & ~a, n)) prod *= weights[v - 1];
      m(i, j) = prod;
    }
  return m;
}

}  // namespace sgkernel
