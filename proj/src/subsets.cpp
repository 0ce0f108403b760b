#include "sgkernel/subsets.hpp"

#include <algorithm>

#include "sgkernel/errors.hpp"

namespace sgkernel {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long num = 1;
  for (int i = 1; i <= k; ++i) {
    num = num * (n - k + i) / i;  // exact at each step
  }
  return num;
}

SubsetMask mask_of(const std::vector<int>& members) {
  SubsetMask m = 0;
  for (int v : members) m |= SubsetMask{1} << (v - 1);
  return m;
}

std::vector<int> members_of(SubsetMask mask, int n) {
  std::vector<int> out;
  for (int v = 1; v <= n; ++v)
    if (mask & (SubsetMask{1} << (v - 1))) out.push_back(v);
  return out;
}

SubsetTable::SubsetTable(int n, int level) : n_(n), level_(level) {
  if (n < 1 || n > 12) throw DomainError("SubsetTable: n out of supported range 1..12");
  if (level < 0 || level > n) throw DomainError("SubsetTable: level out of range");
  if (level == 0) {
    subsets_.push_back({});
    masks_.push_back(0);
    index_[0] = 0;
    return;
  }
  std::vector<int> cur(level);
  for (int i = 0; i < level; ++i) cur[i] = i + 1;
  while (true) {
    subsets_.push_back(cur);
    SubsetMask m = mask_of(cur);
    index_[m] = static_cast<int>(masks_.size());
    masks_.push_back(m);
    // advance to the next subset in dictionary order
    int i = level - 1;
    while (i >= 0 && cur[i] == n - level + i + 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < level; ++j) cur[j] = cur[j - 1] + 1;
  }
}

int SubsetTable::index_of(SubsetMask m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

SubsetMask SubsetTable::image_mask(int idx, const Transformation& f) const {
  SubsetMask out = 0;
  for (int v : subsets_[idx]) out |= SubsetMask{1} << (f.apply(v) - 1);
  return out;
}

int subset_position(int n, const std::vector<int>& members) {
  int level = static_cast<int>(members.size());
  for (int i = 0; i < level; ++i) {
    if (members[i] < 1 || members[i] > n || (i > 0 && members[i] <= members[i - 1]))
      throw DomainError("subset_position: members must be strictly increasing in 1..n");
  }
  long long pos = 1;
  int prev = 0;
  for (int i = 0; i < level; ++i) {
    for (int v = prev + 1; v < members[i]; ++v) pos += binomial(n - v, level - 1 - i);
    prev = members[i];
  }
  return static_cast<int>(pos);
}

std::vector<int> subset_unrank(int pos, int n, int level) {
  if (level < 0 || level > n) throw DomainError("subset_unrank: level out of range");
  if (pos < 1 || pos > binomial(n, level))
    throw DomainError("subset_unrank: position " + std::to_string(pos) + " out of range 1..C(" +
                      std::to_string(n) + "," + std::to_string(level) + ")");
  std::vector<int> members;
  long long rest = pos - 1;
  int prev = 0;
  for (int i = 0; i < level; ++i) {
    for (int v = prev + 1; v <= n; ++v) {
      long long count = binomial(n - v, level - 1 - i);
      if (rest < count) {
        members.push_back(v);
        prev = v;
        break;
      }
      rest -= count;
    }
  }
  return members;
}

}  // namespace sgkernel
