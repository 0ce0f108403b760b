#pragma once

#include <string>
#include <vector>

#include "sgkernel/kernel.hpp"
#include "sgkernel/measures.hpp"

namespace sgkernel {

enum class FieldKind { Pi, U };

// A rational vector over the level-subsets in dictionary order. `raw` keeps
// whatever scale the producing computation yielded; normalized() applies the
// convention for the kind: pi-fields sum to 1, u-fields peak at 1.
struct Field {
  int n = 0;
  int level = 0;
  FieldKind kind = FieldKind::Pi;
  std::vector<Rational> raw;

  std::vector<Rational> normalized() const;
};

bool is_strongly_connected(const ColorSystem& cs);
bool is_aperiodic(const ColorSystem& cs);

// Exact stationary distribution of the weighted adjacency chain. Requires
// irreducibility and aperiodicity.
Field stationary(const ColorSystem& cs);

// pi_level = (all-ones row) * Omega_level; u_level = Omega_level * (all-ones
// column). Defined for 1 <= level <= kernel rank.
Field pi_field(const KernelStructure& ks, const Measure& lambda, int level);
Field u_field(const KernelStructure& ks, const Measure& lambda, int level);

// One step down the hierarchy with the plain inclusion operator. No rescale.
Field pi_descend(const Field& f);

// One step down with the stationary-weighted inclusion operator. No rescale:
// applied to the max-1 scaled u at level l+1 this yields (r-l)/r times the
// max-1 scaled u at level l.
Field u_descend(const Field& f, const std::vector<Rational>& pi);

// Symmetric n x n matrix with entry (i,j) = u2({i,j}) and zero diagonal,
// built from the max-1 scaling.
RatMat split_matrix(const Field& u2);

// J minus the split matrix; the kernel average of K K^T.
RatMat kk_average(const Field& u2);

// pi * kk_average must be an exactly constant vector 1/r; returns r.
int detect_rank(const std::vector<Rational>& pi, const Field& u2);

struct RightGroupResult {
  bool is_right_group = false;
  // Blocks recovered from the zero pattern of u2; empty unless detected.
  std::vector<std::vector<int>> partition;
};

// The kernel is a right group iff u2 only takes the values 0 and 1.
RightGroupResult right_group_test(const Field& u2);

struct FriedmanReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks pi(B) = 1/r for every block of every kernel partition and
// pi k = (1/r) * (range indicator of k) for every kernel element.
FriedmanReport friedman_check(const std::vector<Rational>& pi, const KernelStructure& ks);

}  // namespace sgkernel
