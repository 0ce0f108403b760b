#include "sgkernel/kernel.hpp"

#include <algorithm>
#include <map>

#include "sgkernel/errors.hpp"

namespace sgkernel {

namespace {

// Deterministic sampler for the ideal spot-check on large semigroups.
struct Lcg {
  std::uint64_t state = 0x2545F4914F6CDD1DULL;
  std::uint64_t next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 16;
  }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

}  // namespace

int KernelStructure::index_of(const Transformation& t) const {
  auto it = index_.find(t.key());
  return it == index_.end() ? -1 : it->second;
}

int KernelStructure::index_of_semigroup_id(int sid) const {
  for (std::size_t i = 0; i < semigroup_ids_.size(); ++i)
    if (semigroup_ids_[i] == sid) return static_cast<int>(i);
  return -1;
}

const std::vector<int>& KernelStructure::cell(int x, int y) const {
  if (x < 0 || x >= static_cast<int>(partitions_.size()) || y < 0 ||
      y >= static_cast<int>(ranges_.size()))
    throw DomainError("kernel cell label out of range");
  return cells_[static_cast<std::size_t>(x) * ranges_.size() + y];
}

int KernelStructure::cell_idempotent(int x, int y) const {
  if (x < 0 || x >= static_cast<int>(partitions_.size()) || y < 0 ||
      y >= static_cast<int>(ranges_.size()))
    throw DomainError("kernel cell label out of range");
  return cell_idempotents_[static_cast<std::size_t>(x) * ranges_.size() + y];
}

const std::vector<int>& KernelStructure::group_elements() const {
  return cell(partition_of_elem_[base_idempotent_], range_of_elem_[base_idempotent_]);
}

int KernelStructure::product(int a, int b) const {
  int k = index_of(compose(elems_[a], elems_[b]));
  if (k < 0) throw DomainError("kernel product left the kernel; generation bug");
  return k;
}

KernelStructure kernel_of(const SemigroupTable& st) {
  KernelStructure ks;
  ks.rank_ = st.min_rank();
  for (int i = 0; i < st.size(); ++i) {
    if (rank_of(st.element(i)) != ks.rank_) continue;
    ks.index_.emplace(st.element(i).key(), ks.size());
    ks.elems_.push_back(st.element(i));
    ks.semigroup_ids_.push_back(i);
  }

  // Distinct labels, sorted lexicographically.
  std::map<std::vector<std::vector<int>>, int> pidx;
  std::map<std::vector<int>, int> ridx;
  for (const auto& t : ks.elems_) {
    pidx.emplace(partition_of(t), 0);
    ridx.emplace(image_of(t), 0);
  }
  for (auto& [p, i] : pidx) {
    i = static_cast<int>(ks.partitions_.size());
    ks.partitions_.push_back(p);
  }
  for (auto& [r, i] : ridx) {
    i = static_cast<int>(ks.ranges_.size());
    ks.ranges_.push_back(r);
  }

  int nx = static_cast<int>(ks.partitions_.size());
  int ny = static_cast<int>(ks.ranges_.size());
  ks.cells_.assign(static_cast<std::size_t>(nx) * ny, {});
  ks.cell_idempotents_.assign(static_cast<std::size_t>(nx) * ny, -1);
  for (int k = 0; k < ks.size(); ++k) {
    int x = pidx.at(partition_of(ks.elems_[k]));
    int y = ridx.at(image_of(ks.elems_[k]));
    ks.partition_of_elem_.push_back(x);
    ks.range_of_elem_.push_back(y);
    ks.cells_[static_cast<std::size_t>(x) * ny + y].push_back(k);
    if (is_idempotent(ks.elems_[k])) {
      if (ks.base_idempotent_ < 0) ks.base_idempotent_ = k;
      int& slot = ks.cell_idempotents_[static_cast<std::size_t>(x) * ny + y];
      if (slot >= 0) throw DomainError("kernel cell holds two idempotents; structure bug");
      slot = k;
    }
  }

  if (ks.size() % (nx * ny) != 0)
    throw DomainError("kernel size not divisible by |X| |Y|; structure bug");
  ks.group_order_ = ks.size() / (nx * ny);
  for (std::size_t c = 0; c < ks.cells_.size(); ++c) {
    if (static_cast<int>(ks.cells_[c].size()) != ks.group_order_)
      throw DomainError("kernel cell of unexpected size; structure bug");
    if (ks.cell_idempotents_[c] < 0)
      throw DomainError("kernel cell without idempotent; structure bug");
  }
  if (ks.base_idempotent_ < 0) throw DomainError("kernel holds no idempotent; structure bug");

  // Two-sided ideal check: exhaustive at desk scale, sampled beyond.
  auto check_pair = [&](int sid, int k) {
    const Transformation& s = st.element(sid);
    const Transformation& t = ks.elems_[k];
    if (ks.index_of(compose(s, t)) < 0 || ks.index_of(compose(t, s)) < 0)
      throw DomainError("kernel is not a two-sided ideal; generation bug");
  };
  if (static_cast<long long>(st.size()) * ks.size() <= 1000000LL) {
    for (int sid = 0; sid < st.size(); ++sid)
      for (int k = 0; k < ks.size(); ++k) check_pair(sid, k);
  } else {
    Lcg rng;
    for (int trial = 0; trial < 2000; ++trial) check_pair(rng.below(st.size()), rng.below(ks.size()));
  }

  return ks;
}

ReesCoordinates rees_coordinates(const KernelStructure& ks, int k) {
  if (k < 0 || k >= ks.size()) throw DomainError("rees_coordinates: not a kernel element");
  int x = ks.partition_index(k);
  int y = ks.range_index(k);
  int xi = frame_idempotent_x(ks, x);
  int yi = frame_idempotent_y(ks, y);
  const std::vector<int>& group = ks.group_elements();
  for (std::size_t pos = 0; pos < group.size(); ++pos) {
    if (ks.product(ks.product(xi, group[pos]), yi) == k)
      return ReesCoordinates{x, static_cast<int>(pos), y};
  }
  throw DomainError("rees_coordinates: no group element recombines; structure bug");
}

int frame_idempotent_x(const KernelStructure& ks, int x) {
  return ks.cell_idempotent(x, ks.range_index(ks.base_idempotent()));
}

int frame_idempotent_y(const KernelStructure& ks, int y) {
  return ks.cell_idempotent(ks.partition_index(ks.base_idempotent()), y);
}

int sandwich(const KernelStructure& ks, int y, int x) {
  int yi = frame_idempotent_y(ks, y);
  int xi = frame_idempotent_x(ks, x);
  int prod = ks.product(yi, xi);
  const std::vector<int>& group = ks.group_elements();
  for (std::size_t pos = 0; pos < group.size(); ++pos)
    if (group[pos] == prod) return static_cast<int>(pos);
  throw DomainError("SandwichEscape: product left the local group; structure bug");
}

bool structural_right_group(const KernelStructure& ks) { return ks.partitions().size() == 1; }

bool structural_left_group(const KernelStructure& ks) { return ks.ranges().size() == 1; }

LocalGroup local_group(const KernelStructure& ks, int x, int y) {
  const std::vector<int>& members = ks.cell(x, y);
  if (members.empty()) throw DomainError("EmptyCell: kernel cell has no elements");
  LocalGroup g;
  g.members = members;
  int idem = ks.cell_idempotent(x, y);
  g.identity = static_cast<int>(std::find(members.begin(), members.end(), idem) - members.begin());
  g.table.assign(members.size(), std::vector<int>(members.size(), -1));
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = 0; b < members.size(); ++b) {
      int prod = ks.product(members[a], members[b]);
      auto it = std::find(members.begin(), members.end(), prod);
      if (it == members.end()) throw DomainError("local group not closed; structure bug");
      g.table[a][b] = static_cast<int>(it - members.begin());
    }
  return g;
}

bool group_tables_isomorphic_by_transport(const KernelStructure& ks, int x1, int y1, int x2,
                                          int y2) {
  const std::vector<int>& c1 = ks.cell(x1, y1);
  const std::vector<int>& c2 = ks.cell(x2, y2);
  int e11 = ks.cell_idempotent(x1, y1);
  // a in cell (x2,y1); b in cell (x1,y2) with b a = e11. Then k -> a k b is a
  // group isomorphism cell(x1,y1) -> cell(x2,y2).
  int a = ks.cell_idempotent(x2, y1);
  int b = -1;
  for (int cand : ks.cell(x1, y2))
    if (ks.product(cand, a) == e11) {
      b = cand;
      break;
    }
  if (b < 0) return false;
  std::vector<int> image(c1.size());
  for (std::size_t i = 0; i < c1.size(); ++i) {
    int phi = ks.product(ks.product(a, c1[i]), b);
    auto it = std::find(c2.begin(), c2.end(), phi);
    if (it == c2.end()) return false;
    image[i] = static_cast<int>(it - c2.begin());
  }
  // bijective and multiplicative
  std::vector<int> seen(c2.size(), 0);
  for (int v : image)
    if (seen[v]++) return false;
  LocalGroup g1 = local_group(ks, x1, y1);
  LocalGroup g2 = local_group(ks, x2, y2);
  for (std::size_t i = 0; i < c1.size(); ++i)
    for (std::size_t j = 0; j < c1.size(); ++j)
      if (g2.table[image[i]][image[j]] != image[static_cast<std::size_t>(g1.table[i][j])])
        return false;
  return true;
}

}  // namespace sgkernel
