#include "sgkernel/classify.hpp"

#include <algorithm>

#include "sgkernel/errors.hpp"
#include "sgkernel/hierarchy.hpp"
#include "sgkernel/measures.hpp"

namespace sgkernel {

namespace {

void require_permutation(const Transformation& t, const char* name) {
  if (rank_of(t) != t.n())
    throw DomainError(std::string(name) + " must be a permutation");
}

int loop_count(const Transformation& r, const Transformation& b) {
  int loops = 0;
  for (int v = 1; v <= r.n(); ++v) loops += (r.apply(v) == v) + (b.apply(v) == v);
  return loops;
}

// Steps 1-2 shared by both constructions: raise every label by one and
// duplicate the first column.
std::vector<int> lift_and_duplicate(const Transformation& t) {
  std::vector<int> out;
  out.reserve(t.n() + 1);
  out.push_back(t.apply(1) + 1);
  for (int v = 1; v <= t.n(); ++v) out.push_back(t.apply(v) + 1);
  return out;
}

}  // namespace

ColorSystem split_with_loop(const Transformation& red, const Transformation& blue) {
  require_permutation(red, "red");
  require_permutation(blue, "blue");
  int loops = loop_count(red, blue);
  if (loops > 1) throw DomainError("MultipleLoops: precursor has more than one loop");
  bool red_loop = red.apply(1) == 1;
  bool blue_loop = blue.apply(1) == 1;
  if (loops == 0 || !(red_loop || blue_loop))
    throw DomainError("NoLoopAtVertexOne: the unique loop must sit at vertex 1");
  int n = red.n() + 1;
  std::vector<int> r2 = lift_and_duplicate(red);
  std::vector<int> b2 = lift_and_duplicate(blue);
  // The loop edge became "position 2 maps to 2"; rewire it into 1 <-> 2.
  (red_loop ? r2 : b2)[1] = 1;
  return make_color_system({from_oneline(std::move(r2), n), from_oneline(std::move(b2), n)});
}

ColorSystem split_no_loop(const Transformation& red, const Transformation& blue) {
  require_permutation(red, "red");
  require_permutation(blue, "blue");
  if (loop_count(red, blue) != 0) throw DomainError("HasLoop: precursor must be loop-free");
  int n = red.n() + 1;
  std::vector<int> r2 = lift_and_duplicate(red);
  std::vector<int> b2 = lift_and_duplicate(blue);
  // Rewire the first (here: only) edge into the old vertex 1 from the blue
  // row; the precursor is loop-free so it sits past the duplicated column.
  auto it = std::find(b2.begin(), b2.end(), 2);
  if (it == b2.end()) throw DomainError("split_no_loop: blue row misses the old vertex 1");
  *it = 1;
  return make_color_system({from_oneline(std::move(r2), n), from_oneline(std::move(b2), n)});
}

ClassificationReport classify_rank_n_minus_1(const ColorSystem& cs, std::size_t cap) {
  if (cs.colors.size() != 2)
    throw DomainError("classify_rank_n_minus_1: exactly two colors expected");
  int n = cs.n;
  SemigroupTable st = generate_semigroup(cs, cap);
  KernelStructure ks = kernel_of(st);

  ClassificationReport report;
  report.kernel_rank = ks.rank();
  if (ks.rank() != n - 1) {
    report.kind = SplitCase::Neither;
    return report;
  }
  if (!structural_right_group(ks))
    throw DomainError("rank n-1 kernel with several partitions; contradicts structure theory");

  // The single partition has one doubleton and n-2 singletons.
  const auto& partition = ks.partitions()[0];
  std::vector<int> doubleton;
  for (const auto& block : partition) {
    if (block.size() == 2) doubleton = block;
    else if (block.size() != 1)
      throw DomainError("rank n-1 kernel with a block larger than two");
  }
  if (doubleton.empty()) throw DomainError("rank n-1 kernel without a doubleton block");

  std::vector<int> indeg(n + 1, 0);
  for (int v = 1; v <= n; ++v)
    for (const auto& c : cs.colors) ++indeg[c.apply(v)];
  for (int v = 1; v <= n; ++v) {
    if (indeg[v] <= 3) continue;
    // In-degree 4 is consistent with the invariance equation in exactly one
    // degenerate shape: both colors send both doubleton vertices here, so
    // the incoming weights sum to 2(p_1 + p_2). Anything else is impossible
    // at rank n-1.
    bool doubleton_only = indeg[v] == 4;
    for (const auto& c : cs.colors)
      for (int u = 1; u <= n; ++u)
        if (c.apply(u) == v)
          doubleton_only &= u == doubleton[0] || u == doubleton[1];
    if (!doubleton_only)
      throw DomainError("vertex of in-degree above 3 in a rank n-1 system");
  }

  Field pi = stationary(cs);
  int a = doubleton[0], b = doubleton[1];
  bool a_single = indeg[a] == 1, b_single = indeg[b] == 1;
  int v1, v2;
  Rational share(1, n - 1);
  if (a_single && b_single) {
    report.kind = SplitCase::NoLoop;
    v1 = a;
    v2 = b;
    if (pi.raw[a - 1] != pi.raw[b - 1] || pi.raw[a - 1] != share / 2)
      throw DomainError("no-loop classification: stationary weights off the predicted split");
    bool mutual = false;
    for (const auto& c : cs.colors) mutual |= c.apply(a) == b || c.apply(b) == a;
    if (mutual) throw DomainError("no-loop classification: doubleton vertices map to each other");
  } else if (a_single || b_single) {
    report.kind = SplitCase::WithLoop;
    v1 = a_single ? a : b;
    v2 = a_single ? b : a;
    bool edge = false;
    for (const auto& c : cs.colors) edge |= c.apply(v2) == v1;
    if (!edge) throw DomainError("with-loop classification: missing the 2 -> 1 edge");
    if (pi.raw[v2 - 1] != share * Rational(2, 3) || pi.raw[v1 - 1] != share * Rational(1, 3))
      throw DomainError("with-loop classification: stationary weights off the predicted split");
  } else {
    throw DomainError("neither doubleton vertex has in-degree 1; contradicts rank n-1 theory");
  }
  report.q = pi.raw[v2 - 1];

  // Renumber so the doubleton becomes {1, 2}; everything else keeps its order.
  report.renumbering.assign(n, 0);
  report.renumbering[v1 - 1] = 1;
  report.renumbering[v2 - 1] = 2;
  int next = 3;
  for (int v = 1; v <= n; ++v)
    if (v != v1 && v != v2) report.renumbering[v - 1] = next++;

  report.pi.assign(n, Rational(0));
  for (int v = 1; v <= n; ++v) report.pi[report.renumbering[v - 1] - 1] = pi.raw[v - 1];
  if (report.pi[0] != share - report.q)
    throw DomainError("classification: renumbered stationary vector off the predicted form");
  for (int v = 3; v <= n; ++v)
    if (report.pi[v - 1] != share)
      throw DomainError("classification: renumbered stationary vector off the predicted form");

  Field renumbered_pi{n, 1, FieldKind::Pi, report.pi};
  report.beta = updown_beta(renumbered_pi, n - 1).normalized();

  // Two range classes: everything but vertex 2, everything but vertex 1.
  std::vector<int> r1, r2;
  for (int v = 1; v <= n; ++v) {
    if (v != 2) r1.push_back(v);
    if (v != 1) r2.push_back(v);
  }
  report.ranges = {r1, r2};

  SubsetTable pairs(n, 2);
  report.u2.assign(pairs.size(), Rational(1));
  report.u2[0] = 0;  // pair {1,2} is collapsed in the unique partition

  // The predictions must agree with exact spectral computations on the
  // original labels, mapped through the renumbering. The kernel itself can
  // be large here (|G| = 360 already for n = 7), so beta comes from the
  // one-dimensional left fixed space of the top-level average rather than
  // from the limit-measure solve.
  RatMat a_top = level_average(cs, n - 1);
  auto left = nullspace((RatMat::identity(a_top.rows()) - a_top).transpose());
  if (left.size() != 1)
    throw DomainError("classification: top-level fixed space is not one-dimensional");
  Rational total = 0;
  for (const auto& w : left[0]) total += w;
  if (total == 0) throw DomainError("classification: degenerate top-level fixed vector");
  SubsetTable top(n, n - 1);
  std::vector<Rational> beta_actual(top.size(), Rational(0));
  for (int idx = 0; idx < top.size(); ++idx) {
    std::vector<int> relabeled;
    for (int v : top.members(idx)) relabeled.push_back(report.renumbering[v - 1]);
    std::sort(relabeled.begin(), relabeled.end());
    beta_actual[subset_position(n, relabeled) - 1] = left[0][idx] / total;
  }
  if (beta_actual != report.beta)
    throw DomainError("classification: predicted beta disagrees with the exact fixed vector");

  std::vector<Rational> u2_actual =
      eigenprojection(level_average(cs, 2)) * std::vector<Rational>(pairs.size(), Rational(1));
  for (int idx = 0; idx < pairs.size(); ++idx) {
    const auto& p = pairs.members(idx);
    std::vector<int> relabeled = {report.renumbering[p[0] - 1], report.renumbering[p[1] - 1]};
    std::sort(relabeled.begin(), relabeled.end());
    if (report.u2[subset_position(n, relabeled) - 1] != u2_actual[idx])
      throw DomainError("classification: predicted u2 disagrees with the level-2 projection");
  }

  return report;
}

Field updown_beta(const Field& pi1, int rank) {
  if (pi1.level != 1) throw DomainError("updown_beta: needs a level-1 field");
  int n = pi1.n;
  if (rank != n - 1) throw DomainError("RankMismatch: up-down beta needs kernel rank n-1");
  RatMat m = RatMat::ones(n, n).scaled(Rational(1, n - 1));
  for (int i = 0; i < n; ++i) m(i, n - 1 - i) -= 1;
  return Field{n, n - 1, FieldKind::Pi, pi1.raw * m};
}

}  // namespace sgkernel
