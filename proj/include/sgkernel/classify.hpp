#pragma once

#include "sgkernel/fields.hpp"
#include "sgkernel/semigroup.hpp"

namespace sgkernel {

// Splitting constructions: grow a two-permutation doubly stochastic system on
// n-1 vertices into a two-color system on n vertices whose kernel has rank
// n-1. Labels are shifted up by one, the first column is duplicated, and one
// edge into the old vertex 1 is rewired onto the new vertex 1.

// Requires the precursor to carry exactly one loop, at vertex 1. The looped
// color keeps a permutation; the rewire creates the 2-cycle 1 <-> 2.
ColorSystem split_with_loop(const Transformation& red, const Transformation& blue);

// Requires a loop-free precursor; rewires the unique blue edge into the old
// vertex 1. Both output colors have rank n-1.
ColorSystem split_no_loop(const Transformation& red, const Transformation& blue);

enum class SplitCase { WithLoop, NoLoop, Neither };

struct ClassificationReport {
  SplitCase kind = SplitCase::Neither;
  int kernel_rank = 0;
  Rational q;                        // stationary weight of the renumbered vertex 2
  std::vector<int> renumbering;      // renumbering[old-1] = new label
  std::vector<Rational> pi;          // stationary distribution, renumbered
  std::vector<Rational> beta;        // normalized, over (n-1)-subsets, renumbered
  std::vector<std::vector<int>> ranges;  // predicted range classes, renumbered
  std::vector<Rational> u2;          // predicted level-2 field, renumbered
};

// Classifies a two-color system whose kernel has rank n-1 into the with-loop
// or no-loop splitting family; returns Neither when the rank differs. The
// emitted predictions are verified against the exact kernel structure and
// the fixed spaces of the averaged level matrices.
ClassificationReport classify_rank_n_minus_1(const ColorSystem& cs,
                                             std::size_t cap = kDefaultClosureCap);

// pi * (J/(n-1) - antidiagonal): the unnormalized top-level field of a
// rank-(n-1) kernel. rank must equal n-1.
Field updown_beta(const Field& pi1, int rank);

}  // namespace sgkernel
