#pragma once

#include <map>

#include "sgkernel/kernel.hpp"
#include "sgkernel/matrix.hpp"
#include "sgkernel/semigroup.hpp"

namespace sgkernel {

// Probability measure on the elements of a SemigroupTable: nonnegative
// rational weights by element index, summing to exactly 1. Sparse and
// ordered, so iteration order is deterministic.
struct Measure {
  std::map<int, Rational> weights;

  Rational at(int id) const {
    auto it = weights.find(id);
    return it == weights.end() ? Rational(0) : it->second;
  }
  Rational total() const;
  void trim();  // drop explicit zeros
};

// Distributes the color weights onto the generator elements (duplicate
// colors accumulate).
Measure generator_measure(const ColorSystem& cs, const SemigroupTable& st);

// (m1 * m2)(w) = sum over factorizations w = w1 w2 of m1(w1) m2(w2).
Measure convolve(const Measure& m1, const Measure& m2, const SemigroupTable& st);

// The unique probability measure on the kernel fixed by convolution with the
// generator measure, found by exact linear solve. Indexed by semigroup ids.
Measure limit_measure_exact(const ColorSystem& cs, const SemigroupTable& st,
                            const KernelStructure& ks);

struct LimitFactorization {
  std::vector<Rational> alpha;  // over partitions, kernel label order
  std::vector<Rational> beta;   // over ranges, kernel label order
  int group_order = 0;
};

// Row/column sums of the limit measure over the Rees cells. Verifies the
// product form lambda(k) = alpha(x) beta(y) / |G| cell by cell, including
// equal weights inside every cell (Haar).
LimitFactorization factorize_lambda(const Measure& lambda, const KernelStructure& ks);

// (1/N) sum of the first N convolution powers of the generator measure.
Measure cesaro_partial(const ColorSystem& cs, const SemigroupTable& st, int N);

Rational sup_distance(const Measure& a, const Measure& b);

// Total weight a measure puts outside the kernel.
Rational non_kernel_mass(const Measure& m, const KernelStructure& ks);

// Kernel average of level matrices: sum over kernel k of lambda(k) k^(level).
// The exact level-l limit projection.
RatMat omega_level(const KernelStructure& ks, const Measure& lambda, int level);

// Exact limit projection of a substochastic matrix onto its fixed spaces:
// with R spanning right fixed vectors and L left fixed vectors, returns
// R (L R)^{-1} L, or the zero matrix when there is no nontrivial fixed point.
RatMat eigenprojection(const RatMat& p);

// Q(s) = (1-s)(I - sP)^{-1} in floating point; diagnostic cross-check only.
Mat<double> abel_numeric(const RatMat& p, double s);

double max_abs_diff(const Mat<double>& a, const Mat<double>& b);

}  // namespace sgkernel
