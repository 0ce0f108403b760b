#pragma once

#include <cstdint>
#include <vector>

#include "sgkernel/classify.hpp"
#include "sgkernel/fields.hpp"
#include "sgkernel/hierarchy.hpp"
#include "sgkernel/io.hpp"
#include "sgkernel/measures.hpp"

namespace sgtest {

using namespace sgkernel;

inline Transformation T(std::vector<int> images) {
  int n = static_cast<int>(images.size());
  return from_oneline(std::move(images), n);
}

// The running n = 6 example system: a 48-element kernel of rank 3.
inline ColorSystem example_system() {
  return make_color_system({T({4, 5, 1, 3, 1, 4}), T({2, 4, 5, 6, 3, 1})});
}

// The rank-4 right-group system.
inline ColorSystem right_group_system() {
  return make_color_system({T({3, 1, 1, 6, 4, 4}), T({5, 4, 4, 1, 2, 3})});
}

// Every transformation on {1..n}; n^n of them, counter order.
inline std::vector<Transformation> all_transformations(int n) {
  std::vector<Transformation> out;
  std::vector<int> img(n, 1);
  while (true) {
    out.push_back(from_oneline(img, n));
    int i = n - 1;
    while (i >= 0 && img[i] == n) img[i--] = 1;
    if (i < 0) break;
    ++img[i];
  }
  return out;
}

// Deterministic RNG for sampled exhaustive checks.
struct Rng {
  std::uint64_t state = 0x9E3779B97F4A7C15ULL;
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
  Transformation transformation(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = below(n) + 1;
    return from_oneline(std::move(img), n);
  }
};

inline std::vector<Rational> vec(const std::string& text) { return parse_vector(text); }

}  // namespace sgtest
