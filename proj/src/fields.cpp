#include "sgkernel/fields.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "sgkernel/errors.hpp"
#include "sgkernel/hierarchy.hpp"

namespace sgkernel {

std::vector<Rational> Field::normalized() const {
  std::vector<Rational> out = raw;
  if (kind == FieldKind::Pi) {
    Rational total = std::accumulate(out.begin(), out.end(), Rational(0));
    if (total == 0) return out;
    for (auto& v : out) v /= total;
  } else {
    Rational peak = 0;
    for (const auto& v : out) peak = std::max(peak, v);
    if (peak == 0) return out;
    for (auto& v : out) v /= peak;
  }
  return out;
}

namespace {

std::vector<std::vector<int>> out_neighbors(const ColorSystem& cs) {
  std::vector<std::vector<int>> adj(cs.n);
  for (int v = 1; v <= cs.n; ++v)
    for (const auto& c : cs.colors) adj[v - 1].push_back(c.apply(v) - 1);
  return adj;
}

std::vector<int> bfs_layers(const std::vector<std::vector<int>>& adj, int start) {
  std::vector<int> dist(adj.size(), -1);
  std::queue<int> q;
  dist[start] = 0;
  q.push(start);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
  }
  return dist;
}

}  // namespace

bool is_strongly_connected(const ColorSystem& cs) {
  auto adj = out_neighbors(cs);
  std::vector<std::vector<int>> rev(cs.n);
  for (int u = 0; u < cs.n; ++u)
    for (int v : adj[u]) rev[v].push_back(u);
  for (int d : bfs_layers(adj, 0))
    if (d < 0) return false;
  for (int d : bfs_layers(rev, 0))
    if (d < 0) return false;
  return true;
}

bool is_aperiodic(const ColorSystem& cs) {
  // gcd over all edges u->v of dist(u) + 1 - dist(v); the period of a
  // strongly connected digraph.
  auto adj = out_neighbors(cs);
  auto dist = bfs_layers(adj, 0);
  int g = 0;
  for (int u = 0; u < cs.n; ++u) {
    if (dist[u] < 0) continue;
    for (int v : adj[u])
      if (dist[v] >= 0) g = std::gcd(g, std::abs(dist[u] + 1 - dist[v]));
  }
  return g == 1;
}

Field stationary(const ColorSystem& cs) {
  if (!is_strongly_connected(cs)) throw DomainError("NotIrreducible: graph is not strongly connected");
  if (!is_aperiodic(cs)) throw DomainError("NotAperiodic: chain has period > 1");
  RatMat a = adjacency(cs);
  auto basis = nullspace((RatMat::identity(cs.n) - a).transpose());
  if (basis.size() != 1)
    throw DomainError("stationary: fixed space not one-dimensional despite irreducibility");
  Field f{cs.n, 1, FieldKind::Pi, basis[0]};
  f.raw = f.normalized();
  return f;
}

Field pi_field(const KernelStructure& ks, const Measure& lambda, int level) {
  if (level < 1 || level > ks.rank())
    throw DomainError("pi_field: level out of range 1..rank");
  RatMat omega = omega_level(ks, lambda, level);
  std::vector<Rational> ones(omega.rows(), Rational(1));
  return Field{ks.elements().front().n(), level, FieldKind::Pi, ones * omega};
}

Field u_field(const KernelStructure& ks, const Measure& lambda, int level) {
  if (level < 1 || level > ks.rank())
    throw DomainError("u_field: level out of range 1..rank");
  RatMat omega = omega_level(ks, lambda, level);
  std::vector<Rational> ones(omega.cols(), Rational(1));
  return Field{ks.elements().front().n(), level, FieldKind::U, omega * ones};
}

Field pi_descend(const Field& f) {
  if (f.level < 2) throw DomainError("pi_descend: already at level 1");
  std::vector<Rational> down = f.raw * inclusion_operator(f.n, f.level, f.level - 1);
  return Field{f.n, f.level - 1, FieldKind::Pi, std::move(down)};
}

Field u_descend(const Field& f, const std::vector<Rational>& pi) {
  if (f.level < 2) throw DomainError("u_descend: already at level 1");
  if (static_cast<int>(pi.size()) != f.n) throw DomainError("u_descend: weight vector size mismatch");
  // u is a column hierarchy: u_l = Pi^(l, l+1) u_{l+1}.
  std::vector<Rational> down = weighted_inclusion(pi, f.level - 1, f.level) * f.raw;
  return Field{f.n, f.level - 1, FieldKind::U, std::move(down)};
}

RatMat split_matrix(const Field& u2) {
  if (u2.level != 2) throw DomainError("split_matrix: needs a level-2 field");
  std::vector<Rational> vals = u2.normalized();
  SubsetTable pairs(u2.n, 2);
  RatMat m(u2.n, u2.n);
  for (int idx = 0; idx < pairs.size(); ++idx) {
    const auto& p = pairs.members(idx);
    m(p[0] - 1, p[1] - 1) = vals[idx];
    m(p[1] - 1, p[0] - 1) = vals[idx];
  }
  return m;
}

RatMat kk_average(const Field& u2) {
  return RatMat::ones(u2.n, u2.n) - split_matrix(u2);
}

int detect_rank(const std::vector<Rational>& pi, const Field& u2) {
  std::vector<Rational> v = pi * kk_average(u2);
  for (const auto& entry : v)
    if (entry != v[0])
      throw DomainError("NotConstant: pi <KK^T> is not a constant vector");
  if (v[0] <= 0 || numerator(v[0]) != 1)
    throw DomainError("NotConstant: constant is not a unit fraction");
  Rational r = 1 / v[0];
  return static_cast<int>(numerator(r));
}

RightGroupResult right_group_test(const Field& u2) {
  std::vector<Rational> vals = u2.normalized();
  for (const auto& v : vals)
    if (v != 0 && v != 1) return {};

  // Zero entries mark pairs sharing a block of the single partition; the
  // blocks are the connected components of the zero pattern.
  RightGroupResult res;
  res.is_right_group = true;
  std::vector<int> parent(u2.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  SubsetTable pairs(u2.n, 2);
  for (int idx = 0; idx < pairs.size(); ++idx) {
    if (vals[idx] != 0) continue;
    const auto& p = pairs.members(idx);
    parent[find(p[0] - 1)] = find(p[1] - 1);
  }
  std::vector<std::vector<int>> blocks(u2.n);
  for (int v = 0; v < u2.n; ++v) blocks[find(v)].push_back(v + 1);
  for (auto& b : blocks)
    if (!b.empty()) res.partition.push_back(std::move(b));
  std::sort(res.partition.begin(), res.partition.end());
  return res;
}

FriedmanReport friedman_check(const std::vector<Rational>& pi, const KernelStructure& ks) {
  FriedmanReport report;
  Rational share(1, ks.rank());
  for (std::size_t p = 0; p < ks.partitions().size(); ++p) {
    for (const auto& block : ks.partitions()[p]) {
      Rational mass = 0;
      for (int v : block) mass += pi[v - 1];
      if (mass != share) {
        std::string label;
        for (int v : block) label += std::to_string(v) + " ";
        report.violations.push_back("block {" + label + "} of partition " + std::to_string(p + 1) +
                                    " has mass " + format_rational(mass));
      }
    }
  }
  for (int k = 0; k < ks.size(); ++k) {
    std::vector<Rational> moved = pi * matrix_of(ks.element(k));
    std::vector<Rational> expected(pi.size(), Rational(0));
    for (int v : image_of(ks.element(k))) expected[v - 1] = share;
    if (moved != expected)
      report.violations.push_back("pi k != (1/r) rho(k) for kernel element " +
                                  ks.element(k).to_string());
  }
  return report;
}

}  // namespace sgkernel
