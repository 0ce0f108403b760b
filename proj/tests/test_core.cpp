#include <map>

#include "doctest.h"
#include "helpers.hpp"
#include "sgkernel/errors.hpp"

using namespace sgkernel;
using sgtest::T;

TEST_CASE("rational formatting and parsing") {
  CHECK(format_rational(Rational(4, 9)) == "4/9");
  CHECK(format_rational(Rational(3)) == "3");
  CHECK(format_rational(Rational(-2, 6)) == "-1/3");
  CHECK(parse_rational("4/9") == Rational(4, 9));
  CHECK(parse_rational("-12") == Rational(-12));
  CHECK(parse_rational("2/4") == Rational(1, 2));  // canonicalized
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("from_oneline validates and builds") {
  Transformation f = T({2, 3, 4, 4});
  CHECK(f.apply(1) == 2);
  CHECK(f.apply(4) == 4);
  CHECK(T({1, 2, 3}) == identity_transformation(3));
  CHECK(T({2, 4, 5, 6, 3, 1}).apply(6) == 1);
  CHECK_THROWS_AS(from_oneline({1, 5}, 2), DomainError);  // image out of range
  CHECK_THROWS_AS(from_oneline({1, 2}, 3), DomainError);  // length mismatch
  CHECK_THROWS_AS(from_oneline({0, 1}, 2), DomainError);
}

TEST_CASE("compose applies the left factor first") {
  Transformation f = T({2, 3, 4, 4});
  Transformation g = T({2, 2, 4, 3});
  Transformation h = compose(f, g);
  CHECK(h == T({2, 4, 3, 3}));
  CHECK(matrix_of(h) == matrix_of(f) * matrix_of(g));

  CHECK(compose(identity_transformation(4), f) == f);
  CHECK(compose(f, identity_transformation(4)) == f);

  // frozen from pointwise evaluation of the n = 6 pair
  CHECK(compose(T({4, 5, 1, 3, 1, 4}), T({2, 4, 5, 6, 3, 1})) == T({6, 3, 2, 5, 2, 6}));

  CHECK_THROWS_AS(compose(f, identity_transformation(3)), DomainError);
}

TEST_CASE("rank, image and partition") {
  Transformation f = T({2, 3, 4, 4});
  CHECK(rank_of(f) == 3);
  CHECK(image_of(f) == std::vector<int>{2, 3, 4});
  CHECK(partition_of(f) == std::vector<std::vector<int>>{{1}, {2}, {3, 4}});

  CHECK(rank_of(identity_transformation(5)) == 5);
  CHECK(partition_of(identity_transformation(3)) ==
        std::vector<std::vector<int>>{{1}, {2}, {3}});

  Transformation e = T({1, 1, 3, 4, 3, 4});
  CHECK(is_idempotent(e));
  CHECK(partition_of(e) == std::vector<std::vector<int>>{{1, 2}, {3, 5}, {4, 6}});
  CHECK(image_of(e) == std::vector<int>{1, 3, 4});
}

TEST_CASE("subset position and unrank") {
  CHECK(subset_position(6, {2, 6}) == 9);
  CHECK(subset_position(6, {1, 2}) == 1);
  CHECK(subset_position(6, {1, 3, 4, 6}) == 8);  // enumerated by hand over C(6,4)
  CHECK(subset_unrank(9, 6, 2) == std::vector<int>{2, 6});
  CHECK(subset_unrank(1, 6, 2) == std::vector<int>{1, 2});
  CHECK_THROWS_AS(subset_unrank(16, 6, 2), DomainError);
  CHECK_THROWS_AS(subset_position(6, {2, 2}), DomainError);
}

TEST_CASE("subset round-trip is exhaustive for n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    for (int level = 0; level <= n; ++level) {
      SubsetTable table(n, level);
      CHECK(table.size() == binomial(n, level));
      for (int idx = 0; idx < table.size(); ++idx) {
        const auto& members = table.members(idx);
        if (level == 0) continue;
        CHECK(subset_position(n, members) == idx + 1);
        CHECK(subset_unrank(idx + 1, n, level) == members);
      }
    }
  }
}

TEST_CASE("composition is associative, exhaustive n <= 4") {
  for (int n = 2; n <= 4; ++n) {
    auto all = sgtest::all_transformations(n);
    int count = static_cast<int>(all.size());
    // composition table by index, then pure lookups over all triples
    std::map<std::uint64_t, int> index;
    for (int i = 0; i < count; ++i) index[all[i].key()] = i;
    std::vector<std::vector<int>> table(count, std::vector<int>(count));
    for (int i = 0; i < count; ++i)
      for (int j = 0; j < count; ++j) table[i][j] = index.at(compose(all[i], all[j]).key());
    bool associative = true;
    for (int i = 0; i < count && associative; ++i)
      for (int j = 0; j < count && associative; ++j)
        for (int k = 0; k < count; ++k)
          if (table[table[i][j]][k] != table[i][table[j][k]]) {
            associative = false;
            break;
          }
    CHECK(associative);
  }
  sgtest::Rng rng;
  for (int trial = 0; trial < 200; ++trial) {
    auto f = rng.transformation(6), g = rng.transformation(6), h = rng.transformation(6);
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
  }
}

TEST_CASE("rank of a product never exceeds either factor") {
  sgtest::Rng rng;
  for (int trial = 0; trial < 300; ++trial) {
    auto f = rng.transformation(7), g = rng.transformation(7);
    CHECK(rank_of(compose(f, g)) <= std::min(rank_of(f), rank_of(g)));
  }
}

TEST_CASE("partition blocks are nonempty, disjoint and cover the ground set") {
  sgtest::Rng rng;
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + rng.below(7);
    Transformation f = rng.transformation(n);
    auto blocks = partition_of(f);
    CHECK(static_cast<int>(blocks.size()) == rank_of(f));
    std::vector<int> seen(n + 1, 0);
    for (const auto& block : blocks) {
      CHECK(!block.empty());
      for (int v : block) ++seen[v];
    }
    for (int v = 1; v <= n; ++v) CHECK(seen[v] == 1);
  }
}

TEST_CASE("matrix correspondence is multiplicative, exhaustive n <= 4") {
  for (int n = 2; n <= 4; ++n) {
    auto all = sgtest::all_transformations(n);
    bool multiplicative = true;
    for (const auto& f : all) {
      for (const auto& g : all)
        if (matrix_of(compose(f, g)) != matrix_of(f) * matrix_of(g)) {
          multiplicative = false;
          break;
        }
      if (!multiplicative) break;
    }
    CHECK(multiplicative);
  }
}

TEST_CASE("exact linear algebra basics") {
  RatMat m(3, 3);
  m(0, 0) = 2; m(0, 1) = 1; m(0, 2) = 1;
  m(1, 0) = 1; m(1, 1) = 3; m(1, 2) = 2;
  m(2, 0) = 1; m(2, 1) = 0; m(2, 2) = 0;
  RatMat inv = inverse(m);
  CHECK(m * inv == RatMat::identity(3));
  CHECK(inv * m == RatMat::identity(3));
  CHECK(matrix_rank(m) == 3);

  RatMat singular(2, 2);
  singular(0, 0) = 1; singular(0, 1) = 2;
  singular(1, 0) = 2; singular(1, 1) = 4;
  CHECK_THROWS_AS(inverse(singular), DomainError);
  auto ns = nullspace(singular);
  REQUIRE(ns.size() == 1);
  CHECK(singular * ns[0] == std::vector<Rational>{0, 0});

  auto sol = solve_unique(m, {Rational(1), Rational(2), Rational(3)});
  REQUIRE(sol.has_value());
  CHECK(m * *sol == std::vector<Rational>{1, 2, 3});
}

TEST_CASE("nullspace vectors satisfy the defining equations on random matrices") {
  sgtest::Rng rng;
  for (int trial = 0; trial < 20; ++trial) {
    RatMat m(4, 6);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 6; ++j) m(i, j) = rng.below(5) - 2;
    auto basis = nullspace(m);
    CHECK(static_cast<int>(basis.size()) == 6 - matrix_rank(m));
    for (const auto& v : basis) CHECK(m * v == std::vector<Rational>(4, Rational(0)));
  }
}
