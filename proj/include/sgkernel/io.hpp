#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sgkernel/matrix.hpp"
#include "sgkernel/semigroup.hpp"

namespace sgkernel {

// Input document: '#' comments, blank lines, and "key = value" entries.
//   n = 6
//   colors = [451314], [245631]     # or [4,5,1,3,1,4] for two-digit labels
//   weights = 1/2, 1/2              # optional, defaults to uniform
//   levels = 1, 2, 3                # optional, used by the fields command
//   cap = 200000                    # optional closure guard
struct SystemSpec {
  int n = 0;
  std::vector<std::vector<int>> colors;
  std::vector<Rational> weights;
  std::vector<int> levels;
  std::size_t cap = kDefaultClosureCap;
};

SystemSpec parse_system_spec(std::istream& in);
SystemSpec parse_system_spec(const std::string& text);

ColorSystem to_color_system(const SystemSpec& spec);

// One-line notation: "[451314]" (single digits) or "[4,5,1,3,1,4]".
std::vector<int> parse_oneline(const std::string& text);

// --- report payload serialization ------------------------------------------
// Rationals print as "p/q" in lowest terms ("p" when integral); subsets as
// sorted lists "{1, 3, 4}"; vectors as "[a, b, c]"; the collapsed state as
// "X". parse(print(x)) == x for each payload type.

std::string print_vector(const std::vector<Rational>& v);
std::vector<Rational> parse_vector(const std::string& text);

std::string print_subset(const std::vector<int>& members);
std::vector<int> parse_subset(const std::string& text);

// One line per row.
std::string print_matrix(const RatMat& m);
RatMat parse_matrix(const std::string& text);

// Row/column labels for a level table: "12", "13", ... and "X" for the
// augmented collapsed state.
std::vector<std::string> level_labels(int n, int level, bool augmented);

// Human-readable table with row/column labels.
std::string format_labeled_matrix(const RatMat& m, const std::vector<std::string>& row_labels,
                                  const std::vector<std::string>& col_labels);

}  // namespace sgkernel
