#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "sgkernel/transformation.hpp"

namespace sgkernel {

long long binomial(int n, int k);

// Bit v-1 set iff v is a member.
using SubsetMask = std::uint32_t;

SubsetMask mask_of(const std::vector<int>& members);
std::vector<int> members_of(SubsetMask mask, int n);

// All level-subsets of {1..n} in dictionary order. Level 0 is the single
// empty set. Ground sets stop at n = 12; beyond that the matrices this feeds
// stop being desk scale.
class SubsetTable {
 public:
  SubsetTable(int n, int level);

  int n() const { return n_; }
  int level() const { return level_; }
  int size() const { return static_cast<int>(subsets_.size()); }

  const std::vector<int>& members(int idx) const { return subsets_[idx]; }
  SubsetMask mask(int idx) const { return masks_[idx]; }

  // -1 when the mask is not a level-subset of {1..n}.
  int index_of(SubsetMask m) const;

  // Image mask under f; popcount shrinks when f collapses the subset.
  SubsetMask image_mask(int idx, const Transformation& f) const;

 private:
  int n_;
  int level_;
  std::vector<std::vector<int>> subsets_;
  std::vector<SubsetMask> masks_;
  std::unordered_map<SubsetMask, int> index_;
};

// 1-based dictionary-order position of a sorted member list.
int subset_position(int n, const std::vector<int>& members);

// Inverse of subset_position. pos is 1-based; throws when out of range.
std::vector<int> subset_unrank(int pos, int n, int level);

}  // namespace sgkernel
