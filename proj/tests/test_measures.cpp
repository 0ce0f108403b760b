#include "doctest.h"
#include "helpers.hpp"
#include "sgkernel/errors.hpp"

using namespace sgkernel;
using sgtest::T;

TEST_CASE("convolution against direct word enumeration") {
  ColorSystem cs = sgtest::example_system();
  SemigroupTable st = generate_semigroup(cs);
  Measure mu = generator_measure(cs, st);
  CHECK(mu.total() == 1);

  Measure two = convolve(mu, mu, st);
  Measure expected;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      expected.weights[st.index_of(compose(cs.colors[i], cs.colors[j]))] += Rational(1, 4);
  expected.trim();
  CHECK(two.weights == expected.weights);

  // convolution against a point mass at an identity-like element
  ColorSystem perms = make_color_system({identity_transformation(3), T({2, 1, 3})});
  SemigroupTable pst = generate_semigroup(perms);
  Measure pmu = generator_measure(perms, pst);
  Measure delta;
  delta.weights[pst.index_of(identity_transformation(3))] = 1;
  CHECK(convolve(delta, pmu, pst).weights == pmu.weights);
  CHECK(convolve(pmu, delta, pst).weights == pmu.weights);

  // stochasticity is preserved through twenty powers
  Measure power = mu;
  for (int m = 2; m <= 20; ++m) {
    power = convolve(power, mu, st);
    CHECK(power.total() == 1);
  }
}

TEST_CASE("exact limit measure of the running example") {
  ColorSystem cs = sgtest::example_system();
  SemigroupTable st = generate_semigroup(cs);
  KernelStructure ks = kernel_of(st);
  Measure lambda = limit_measure_exact(cs, st, ks);

  CHECK(lambda.total() == 1);
  CHECK(non_kernel_mass(lambda, ks) == 0);
  CHECK(lambda.at(st.index_of(T({2, 2, 3, 6, 3, 6}))) == Rational(1, 162));

  // idempotent and two-sidedly invariant
  Measure mu = generator_measure(cs, st);
  CHECK(convolve(lambda, lambda, st).weights == lambda.weights);
  CHECK(convolve(mu, lambda, st).weights == lambda.weights);
  CHECK(convolve(lambda, mu, st).weights == lambda.weights);

  LimitFactorization fact = factorize_lambda(lambda, ks);
  CHECK(fact.alpha == sgtest::vec("[1/3, 2/3]"));
  CHECK(fact.beta == sgtest::vec("[4/9, 2/9, 1/9, 2/9]"));
  CHECK(fact.group_order == 6);

  // Haar: equal weights inside each cell
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 4; ++y) {
      const auto& cell = ks.cell(x, y);
      for (int k : cell)
        CHECK(lambda.at(ks.semigroup_ids()[k]) == lambda.at(ks.semigroup_ids()[cell[0]]));
    }
}

TEST_CASE("limit measure through the cell-aggregated path on a large kernel") {
  // 720 kernel elements, local groups of order 360
  ColorSystem cs = make_color_system({sgtest::T({2, 1, 7, 3, 4, 5, 6}),
                                      sgtest::T({4, 4, 5, 6, 7, 2, 3})});
  SemigroupTable st = generate_semigroup(cs);
  KernelStructure ks = kernel_of(st);
  CHECK(ks.size() == 720);
  CHECK(ks.group_order() == 360);
  Measure lambda = limit_measure_exact(cs, st, ks);
  CHECK(lambda.total() == 1);
  LimitFactorization fact = factorize_lambda(lambda, ks);
  CHECK(fact.alpha == std::vector<Rational>{1});
  CHECK(fact.beta == sgtest::vec("[1/3, 2/3]"));
  // idempotence spot-check through genuine convolution
  Measure mu = generator_measure(cs, st);
  CHECK(convolve(mu, lambda, st).weights == lambda.weights);
  CHECK(convolve(lambda, mu, st).weights == lambda.weights);
}

TEST_CASE("limit measure of a single cyclic generator is Haar") {
  ColorSystem cs = make_color_system({T({2, 3, 4, 1})});
  SemigroupTable st = generate_semigroup(cs);
  KernelStructure ks = kernel_of(st);
  CHECK(st.size() == 4);
  Measure lambda = limit_measure_exact(cs, st, ks);
  for (int i = 0; i < 4; ++i) CHECK(lambda.at(i) == Rational(1, 4));
}

TEST_CASE("weighted colors flow into the limit measure") {
  // two constant maps form a right-zero band, so the limit measure is the
  // generator measure itself
  ColorSystem cs = make_color_system({T({2, 2}), T({1, 1})},
                                     {Rational(2, 3), Rational(1, 3)});
  SemigroupTable st = generate_semigroup(cs);
  KernelStructure ks = kernel_of(st);
  CHECK(ks.rank() == 1);
  Measure lambda = limit_measure_exact(cs, st, ks);
  CHECK(lambda.at(st.index_of(T({2, 2}))) == Rational(2, 3));
  CHECK(lambda.at(st.index_of(T({1, 1}))) == Rational(1, 3));
  LimitFactorization fact = factorize_lambda(lambda, ks);
  CHECK(fact.alpha == std::vector<Rational>{1});
  CHECK(fact.beta == sgtest::vec("[1/3, 2/3]"));  // ranges {1}, {2} in order
}

TEST_CASE("duplicate generators accumulate their weights") {
  ColorSystem cs = make_color_system({T({2, 1}), T({2, 1})});
  SemigroupTable st = generate_semigroup(cs);
  CHECK(st.size() == 2);  // the swap and the identity
  Measure mu = generator_measure(cs, st);
  CHECK(mu.weights.size() == 1);
  CHECK(mu.at(st.index_of(T({2, 1}))) == 1);
  KernelStructure ks = kernel_of(st);
  CHECK(ks.rank() == 2);
  Measure lambda = limit_measure_exact(cs, st, ks);
  CHECK(lambda.at(0) == Rational(1, 2));  // Haar on the two-element group
  CHECK(lambda.at(1) == Rational(1, 2));
}

TEST_CASE("factorization rejects non-product measures") {
  ColorSystem cs = sgtest::example_system();
  SemigroupTable st = generate_semigroup(cs);
  KernelStructure ks = kernel_of(st);
  Measure lambda = limit_measure_exact(cs, st, ks);

  Measure bent = lambda;
  const auto& cell = ks.cell(0, 0);
  int a = ks.semigroup_ids()[cell[0]], b = ks.semigroup_ids()[cell[1]];
  Rational shift(1, 1000);
  bent.weights[a] += shift;
  bent.weights[b] -= shift;
  CHECK(bent.total() == 1);
  CHECK_THROWS_AS(factorize_lambda(bent, ks), DomainError);

  Measure off;  // supported off the kernel
  off.weights[st.generator_ids()[0]] = 1;
  CHECK_THROWS_AS(factorize_lambda(off, ks), DomainError);

  // right-group kernel: alpha collapses to [1]
  SemigroupTable st2 = generate_semigroup(sgtest::right_group_system());
  KernelStructure ks2 = kernel_of(st2);
  Measure lambda2 = limit_measure_exact(sgtest::right_group_system(), st2, ks2);
  LimitFactorization fact2 = factorize_lambda(lambda2, ks2);
  CHECK(fact2.alpha == std::vector<Rational>{1});
  CHECK(fact2.beta == sgtest::vec("[1/4, 1/4, 2/4]"));
}

TEST_CASE("Cesaro partial averages approach the limit measure") {
  ColorSystem cs = sgtest::example_system();
  SemigroupTable st = generate_semigroup(cs);
  KernelStructure ks = kernel_of(st);
  Measure lambda = limit_measure_exact(cs, st, ks);
  Measure mu = generator_measure(cs, st);

  CHECK(cesaro_partial(cs, st, 1).weights == mu.weights);

  // sup distance decreases along a doubling ladder and crosses 1/100 at
  // N = 57 (frozen constant)
  Rational prev = sup_distance(cesaro_partial(cs, st, 1), lambda);
  for (int N : {2, 4, 8, 16, 32, 56}) {
    Rational d = sup_distance(cesaro_partial(cs, st, N), lambda);
    CHECK(d < prev);
    prev = d;
  }
  CHECK(sup_distance(cesaro_partial(cs, st, 56), lambda) > Rational(1, 100));
  CHECK(sup_distance(cesaro_partial(cs, st, 57), lambda) <= Rational(1, 100));

  // mass off the kernel decays monotonically under Cesaro averaging
  Rational prev_mass = 1;
  for (int N = 1; N <= 20; ++N) {
    Rational mass = non_kernel_mass(cesaro_partial(cs, st, N), ks);
    CHECK(mass <= prev_mass);
    prev_mass = mass;
  }
  CHECK(prev_mass < Rational(1, 4));
}

TEST_CASE("kernel-average projections and their identities") {
  ColorSystem cs = sgtest::example_system();
  SemigroupTable st = generate_semigroup(cs);
  KernelStructure ks = kernel_of(st);
  Measure lambda = limit_measure_exact(cs, st, ks);

  // level 1: the projection is ones-column times the stationary row
  RatMat omega1 = omega_level(ks, lambda, 1);
  std::vector<Rational> pi = sgtest::vec("[2/9, 1/9, 5/27, 2/9, 4/27, 1/9]");
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(omega1(i, j) == pi[j]);

  for (int level = 1; level <= 3; ++level) {
    RatMat omega = omega_level(ks, lambda, level);
    RatMat a = level_average(cs, level);
    CHECK(omega * omega == omega);
    CHECK(a * omega == omega);
    CHECK(omega * a == omega);
  }

  // vanishes above the kernel rank
  CHECK(omega_level(ks, lambda, 4).is_zero());

  // trace counts the invariant directions (frozen: one at level 2)
  RatMat omega2 = omega_level(ks, lambda, 2);
  RatMat a2 = level_average(cs, 2);
  auto right_basis = nullspace(RatMat::identity(15) - a2);
  auto left_basis = nullspace((RatMat::identity(15) - a2).transpose());
  CHECK(omega2.trace() == 1);
  CHECK(right_basis.size() == 1);
  CHECK(left_basis.size() == 1);

  // rows of omega span the left fixed space and conversely
  for (int level = 1; level <= 3; ++level) {
    RatMat omega = omega_level(ks, lambda, level);
    RatMat a = level_average(cs, level);
    int dim = omega.rows();
    auto lefts = nullspace((RatMat::identity(dim) - a).transpose());
    int omega_rank = matrix_rank(omega);
    CHECK(omega_rank == static_cast<int>(lefts.size()));
    // stacking the fixed vectors on the rows of omega adds no rank
    RatMat stacked(dim + static_cast<int>(lefts.size()), dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) stacked(i, j) = omega(i, j);
    for (std::size_t v = 0; v < lefts.size(); ++v)
      for (int j = 0; j < dim; ++j) stacked(dim + static_cast<int>(v), j) = lefts[v][j];
    CHECK(matrix_rank(stacked) == omega_rank);
    // and each row of omega is itself fixed
    for (int i = 0; i < dim; ++i) CHECK(omega.row(i) * a == omega.row(i));
    for (int j = 0; j < dim; ++j) CHECK(a * omega.col(j) == omega.col(j));
  }
}

TEST_CASE("eigenprojection: the exact Abel limit") {
  CHECK(eigenprojection(RatMat::identity(5)) == RatMat::identity(5));

  ColorSystem cs = sgtest::example_system();
  SemigroupTable st = generate_semigroup(cs);
  KernelStructure ks = kernel_of(st);
  Measure lambda = limit_measure_exact(cs, st, ks);

  // two independent routes to the same projection, at every level
  CHECK(eigenprojection(adjacency(cs)) == omega_level(ks, lambda, 1));
  for (int level = 1; level <= 3; ++level)
    CHECK(eigenprojection(level_average(cs, level)) == omega_level(ks, lambda, level));
  CHECK(eigenprojection(level_average(cs, 4)).is_zero());
  CHECK(eigenprojection(level_average(cs, 5)).is_zero());

  // same agreement on the right-group system
  ColorSystem rg = sgtest::right_group_system();
  SemigroupTable st2 = generate_semigroup(rg);
  KernelStructure ks2 = kernel_of(st2);
  Measure lambda2 = limit_measure_exact(rg, st2, ks2);
  for (int level = 1; level <= 4; ++level)
    CHECK(eigenprojection(level_average(rg, level)) == omega_level(ks2, lambda2, level));

  RatMat negative(2, 2);
  negative(0, 0) = -1;
  CHECK_THROWS_AS(eigenprojection(negative), DomainError);
  RatMat heavy(2, 2);
  heavy(0, 0) = 1;
  heavy(0, 1) = 1;
  CHECK_THROWS_AS(eigenprojection(heavy), DomainError);
}

TEST_CASE("numeric Abel limit approaches the exact projection") {
  ColorSystem cs = sgtest::example_system();
  RatMat a = adjacency(cs);

  Mat<double> q0 = abel_numeric(a, 0.0);
  CHECK(max_abs_diff(q0, Mat<double>::identity(6)) == 0.0);

  SemigroupTable st = generate_semigroup(cs);
  KernelStructure ks = kernel_of(st);
  Measure lambda = limit_measure_exact(cs, st, ks);

  Mat<double> exact1 = to_double(omega_level(ks, lambda, 1));
  CHECK(max_abs_diff(abel_numeric(a, 1 - 1e-6), exact1) <= 1e-4);

  Mat<double> exact2 = to_double(omega_level(ks, lambda, 2));
  CHECK(max_abs_diff(abel_numeric(level_average(cs, 2), 1 - 1e-6), exact2) <= 1e-4);

  // monotone convergence along s -> 1
  double prev = 1e30;
  for (double s : {0.9, 0.99, 0.999, 0.9999, 0.99999}) {
    double err = max_abs_diff(abel_numeric(a, s), exact1);
    CHECK(err < prev);
    prev = err;
  }

  CHECK_THROWS_AS(abel_numeric(a, 1.0), DomainError);
  CHECK_THROWS_AS(abel_numeric(a, 1 - 1e-14), DomainError);  // NearSingular
}
