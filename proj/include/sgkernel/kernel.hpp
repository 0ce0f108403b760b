#pragma once

#include <vector>

#include "sgkernel/semigroup.hpp"

namespace sgkernel {

// The minimal two-sided ideal of a generated transformation semigroup: the
// elements of minimal rank, organized as a Rees product X x G x Y. Partition
// and range labels are sorted lexicographically, so tables are reproducible.
class KernelStructure {
 public:
  int rank() const { return rank_; }
  int size() const { return static_cast<int>(elems_.size()); }

  // Kernel elements in semigroup canonical order.
  const std::vector<Transformation>& elements() const { return elems_; }
  const Transformation& element(int k) const { return elems_[k]; }

  // Index into the owning SemigroupTable for each kernel element.
  const std::vector<int>& semigroup_ids() const { return semigroup_ids_; }

  // -1 when the transformation is not a kernel element.
  int index_of(const Transformation& t) const;
  int index_of_semigroup_id(int sid) const;

  const std::vector<std::vector<std::vector<int>>>& partitions() const { return partitions_; }
  const std::vector<std::vector<int>>& ranges() const { return ranges_; }

  int partition_index(int k) const { return partition_of_elem_[k]; }
  int range_index(int k) const { return range_of_elem_[k]; }

  // Kernel indices in cell (x, y), in canonical order.
  const std::vector<int>& cell(int x, int y) const;

  // The unique idempotent of cell (x, y), as a kernel index.
  int cell_idempotent(int x, int y) const;

  int group_order() const { return group_order_; }

  // Base idempotent e: the first idempotent in canonical kernel order.
  int base_idempotent() const { return base_idempotent_; }

  // The local group e K e, i.e. the cell of the base idempotent.
  const std::vector<int>& group_elements() const;

  // Kernel index of elems_[a] * elems_[b]; products of kernel elements stay
  // in the kernel.
  int product(int a, int b) const;

 private:
  friend KernelStructure kernel_of(const SemigroupTable& st);

  int rank_ = 0;
  std::vector<Transformation> elems_;
  std::vector<int> semigroup_ids_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<std::vector<std::vector<int>>> partitions_;
  std::vector<std::vector<int>> ranges_;
  std::vector<int> partition_of_elem_;
  std::vector<int> range_of_elem_;
  std::vector<std::vector<int>> cells_;       // (x * |Y| + y) -> kernel indices
  std::vector<int> cell_idempotents_;         // (x * |Y| + y) -> kernel index
  int group_order_ = 0;
  int base_idempotent_ = -1;
};

// Extracts the minimal-rank ideal and checks the Rees cell structure:
// every cell nonempty with exactly one idempotent and |K| = |X| |G| |Y|.
// Ideal-ness (s k, k s back in the kernel) is verified exhaustively for
// |S| * |K| up to 10^6 and on deterministic samples beyond that.
KernelStructure kernel_of(const SemigroupTable& st);

struct ReesCoordinates {
  int x;  // index into partitions
  int g;  // position within the local group list
  int y;  // index into ranges
};

// k = x_idem * g * y_idem with the factors read off the idempotent frame of
// the base idempotent. Throws when k is not a kernel index.
ReesCoordinates rees_coordinates(const KernelStructure& ks, int k);

// Kernel index of the idempotent with partition x and the base range.
int frame_idempotent_x(const KernelStructure& ks, int x);
// Kernel index of the idempotent with the base partition and range y.
int frame_idempotent_y(const KernelStructure& ks, int y);

// phi(y, x): product of the frame idempotents, always lands in the local
// group; returns its position there.
int sandwich(const KernelStructure& ks, int y, int x);

bool structural_right_group(const KernelStructure& ks);  // single partition
bool structural_left_group(const KernelStructure& ks);   // single range

struct LocalGroup {
  std::vector<int> members;             // kernel indices of the cell
  int identity;                         // position of the cell idempotent
  std::vector<std::vector<int>> table;  // table[a][b] = position of product
};

LocalGroup local_group(const KernelStructure& ks, int x, int y);

bool group_tables_isomorphic_by_transport(const KernelStructure& ks, int x1, int y1, int x2,
                                          int y2);

}  // namespace sgkernel
