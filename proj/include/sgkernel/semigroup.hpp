#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "sgkernel/matrix.hpp"
#include "sgkernel/rational.hpp"
#include "sgkernel/transformation.hpp"

namespace sgkernel {

// A d-out edge coloring: one transformation per color, with positive rational
// weights summing to one (uniform 1/d by default).
struct ColorSystem {
  int n = 0;
  std::vector<Transformation> colors;
  std::vector<Rational> weights;
};

// Validates sizes and weights; empty weights means uniform.
ColorSystem make_color_system(std::vector<Transformation> colors,
                              std::vector<Rational> weights = {});

// A = sum of weight_i * matrix_of(color_i); binary stochastic rows scaled.
RatMat adjacency(const ColorSystem& cs);

// Weighted average of the colors' level matrices. Substochastic in general.
RatMat level_average(const ColorSystem& cs, int level);

RatMat augmented_level_average(const ColorSystem& cs, int level);

constexpr std::size_t kDefaultClosureCap = 200000;

// The closure of the colors under composition. Elements are listed in
// breadth-first discovery order (generators first, color order breaking
// ties), which fixes every downstream table.
class SemigroupTable {
 public:
  const std::vector<Transformation>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const Transformation& element(int idx) const { return elements_[idx]; }

  // -1 when absent.
  int index_of(const Transformation& t) const;

  // Index of elements[i] * elements[j] (i applied first).
  int product(int i, int j) const;

  // One shortest generator word per element, 0-based color indices.
  const std::vector<int>& word_of(int idx) const { return words_[idx]; }

  // Element index of each color generator.
  const std::vector<int>& generator_ids() const { return generator_ids_; }

  int min_rank() const;

 private:
  friend SemigroupTable generate_semigroup(const ColorSystem& cs, std::size_t cap);

  std::vector<Transformation> elements_;
  std::vector<std::vector<int>> words_;
  std::vector<int> generator_ids_;
  std::unordered_map<std::uint64_t, int> index_;
};

// Breadth-first closure; throws DomainError once the element count passes cap.
SemigroupTable generate_semigroup(const ColorSystem& cs, std::size_t cap = kDefaultClosureCap);

}  // namespace sgkernel
