#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgkernel/matrix.hpp"

namespace sgkernel {

// A total function on {1..n} in one-line notation. Immutable after
// construction; vertex labels are 1-based throughout the public interface.
class Transformation {
 public:
  Transformation() = default;

  int n() const { return static_cast<int>(images_.size()); }

  // f(i) for 1 <= i <= n.
  int apply(int i) const { return images_[i - 1]; }

  const std::vector<int>& images() const { return images_; }

  bool operator==(const Transformation& other) const = default;

  // Packed key for hashing; valid for n <= 16.
  std::uint64_t key() const;

  std::string to_string() const;  // "[2 3 4 4]"

 private:
  friend Transformation from_oneline(std::vector<int> images, int n);
  explicit Transformation(std::vector<int> images) : images_(std::move(images)) {}

  std::vector<int> images_;
};

// Validates lengths and the 1..n range; the only way to build a Transformation.
Transformation from_oneline(std::vector<int> images, int n);

Transformation identity_transformation(int n);

// h(i) = g(f(i)); matrices multiply in application order, H = F G.
Transformation compose(const Transformation& f, const Transformation& g);

int rank_of(const Transformation& f);

// Sorted image set.
std::vector<int> image_of(const Transformation& f);

// Preimage blocks of the image points. Each block sorted ascending; blocks
// ordered by smallest member. |partition| = rank.
std::vector<std::vector<int>> partition_of(const Transformation& f);

bool is_idempotent(const Transformation& f);

// 0/1 matrix with F(i,j) = 1 iff f(i) = j (1-based labels on 0-based storage).
RatMat matrix_of(const Transformation& f);

}  // namespace sgkernel
