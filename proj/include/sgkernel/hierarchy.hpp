#pragma once

#include <vector>

#include "sgkernel/matrix.hpp"
#include "sgkernel/subsets.hpp"
#include "sgkernel/transformation.hpp"

namespace sgkernel {

// Induced 0/1 action on level-subsets: entry (I,J) = 1 iff f maps I onto J
// with |f(I)| = level. Rows of collapsed subsets are zero.
RatMat level_matrix(const Transformation& f, int level);

// Independent route: entry (I,J) is the permanent of the submatrix of
// matrix_of(f) with rows I and columns J. Oracle for level_matrix; keep the
// two implementations apart.
RatMat level_matrix_via_permanents(const Transformation& f, int level);

// Permanent by Laplace expansion along the first row. Fine for k <= 8.
Rational permanent(const RatMat& m);

// Level matrix with one extra row/column for the collapsed state, appended
// last. Binary stochastic; the collapsed state is absorbing.
RatMat augmented_level_matrix(const Transformation& f, int level);

// True iff level_matrix(compose(f,g)) equals level_matrix(f)*level_matrix(g).
bool homomorphism_check(const Transformation& f, const Transformation& g, int level);

// E: C(n,from) x C(n,to); entry 1 iff I is contained in J (from < to) or
// contains J (from > to). Equal levels give the identity.
RatMat inclusion_operator(int n, int from_level, int to_level);

// Entry 1 iff I and J are disjoint.
RatMat exclusion_operator(int n, int from_level, int to_level);

// Rows I that are f-preserved but where row I of E^(l,l-1) F^(l-1) differs
// from row I of F^(l) E^(l,l-1). Always empty; returned for diagnostics.
std::vector<int> local_commuting_violations(const Transformation& f, int level);

// E^(b,b-1) E^(b-1,b-2) ... E^(a+1,a) == (b-a)! E^(b,a), exactly.
bool factorial_composition_check(int n, int a, int b);

// Exact inverse of E^(level, n-level) for 1 <= level <= n/2, computed by the
// alternating sum over exclusion/inclusion products; the i = 0 term reads the
// level-0 operators as all-ones row/column through the single empty set.
// Falls back to direct exact inversion if the sum fails to verify.
RatMat inclusion_inverse(int n, int level);

// Checks E^(1,n-1) == J - I' and its inverse == J/(n-1) - I', with I' the
// antidiagonal permutation matrix.
bool special_inverse_check(int n);

bool is_preserved(const Transformation& f, const std::vector<int>& members);

// v supported only on subsets preserved by every transformation in fs.
bool is_compatible(const std::vector<Rational>& v, int n, int level,
                   const std::vector<Transformation>& fs);

// Row vector at `level` times E^(level, level-1). When `check` is nonempty the
// input must be compatible with every listed transformation. No rescaling.
std::vector<Rational> descend_left_eigenvector(const std::vector<Rational>& v, int n, int level,
                                               const std::vector<Transformation>& check = {});

// Inclusion operator with entry (I,J) = prod of weights[j], j in J \ I, for
// I contained in J; weights must have n positive entries.
RatMat weighted_inclusion(const std::vector<Rational>& weights, int from_level, int to_level);

}  // namespace sgkernel
