#include "sgkernel/transformation.hpp"

#include <algorithm>
#include <map>

#include "sgkernel/errors.hpp"

namespace sgkernel {

std::uint64_t Transformation::key() const {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    k |= static_cast<std::uint64_t>(images_[i] - 1) << (4 * i);
  return k;
}

std::string Transformation::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(images_[i]);
  }
  out += ']';
  return out;
}

Transformation from_oneline(std::vector<int> images, int n) {
  if (static_cast<int>(images.size()) != n)
    throw DomainError("from_oneline: expected " + std::to_string(n) + " images, got " +
                      std::to_string(images.size()));
  for (int v : images)
    if (v < 1 || v > n)
      throw DomainError("from_oneline: image " + std::to_string(v) + " out of range 1.." +
                        std::to_string(n));
  return Transformation(std::move(images));
}

Transformation identity_transformation(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i + 1;
  return from_oneline(std::move(img), n);
}

Transformation compose(const Transformation& f, const Transformation& g) {
  if (f.n() != g.n()) throw DomainError("compose: size mismatch");
  std::vector<int> img(f.n());
  for (int i = 1; i <= f.n(); ++i) img[i - 1] = g.apply(f.apply(i));
  return from_oneline(std::move(img), f.n());
}

int rank_of(const Transformation& f) { return static_cast<int>(image_of(f).size()); }

std::vector<int> image_of(const Transformation& f) {
  std::vector<int> img = f.images();
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return img;
}

std::vector<std::vector<int>> partition_of(const Transformation& f) {
  std::map<int, std::vector<int>> blocks;  // image point -> preimage block
  for (int i = 1; i <= f.n(); ++i) blocks[f.apply(i)].push_back(i);
  std::vector<std::vector<int>> out;
  out.reserve(blocks.size());
  for (auto& [point, block] : blocks) out.push_back(std::move(block));
  std::sort(out.begin(), out.end());  // blocks ordered by smallest member
  return out;
}

bool is_idempotent(const Transformation& f) { return compose(f, f) == f; }

RatMat matrix_of(const Transformation& f) {
  RatMat m(f.n(), f.n());
  for (int i = 1; i <= f.n(); ++i) m(i - 1, f.apply(i) - 1) = 1;
  return m;
}

}  // namespace sgkernel
