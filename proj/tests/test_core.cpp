#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "degseq/adjacency.hpp"
#include "degseq/degree_sequence.hpp"
#include "degseq/errors.hpp"
#include "degseq/probability.hpp"
#include "degseq/rational.hpp"
#include "degseq/rng.hpp"
#include "degseq/shape.hpp"

using namespace degseq;

namespace {

BipartiteAdjacency random_matrix(const Shape& shape, Xoshiro256StarStar& rng,
                                 double p) {
  std::vector<std::uint8_t> bits(
      static_cast<std::size_t>(shape.m) * shape.n, 0);
  for (int i = 0; i < shape.m; ++i) {
    for (int j = 0; j < shape.n; ++j) {
      if (shape.cell_allowed(i, j) && rng.next_bernoulli(p))
        bits[static_cast<std::size_t>(i) * shape.n + j] = 1;
    }
  }
  return BipartiteAdjacency(shape, std::move(bits));
}

}  // namespace

TEST_CASE("shape invariants") {
  Shape s(3, 4);
  CHECK(s.cell_count() == 12);
  CHECK(s.row_capacity() == 4);
  CHECK(s.col_capacity() == 3);
  Shape dig(3, 3, true);
  CHECK(dig.cell_count() == 6);
  CHECK(dig.row_capacity() == 2);
  CHECK(!dig.cell_allowed(1, 1));
  CHECK(dig.cell_allowed(1, 2));
  CHECK_THROWS_AS(Shape(0, 2), DomainError);
  CHECK_THROWS_AS(Shape(2, 3, true), DomainError);
}

TEST_CASE("degrees_of identity and full matrices") {
  BipartiteAdjacency identity(Shape(2, 2), {1, 0, 0, 1});
  DegreeSequence ds = degrees_of(identity);
  CHECK(ds.s() == std::vector<int>{1, 1});
  CHECK(ds.t() == std::vector<int>{1, 1});
  CHECK(ds.joint_valid());

  BipartiteAdjacency full(Shape(2, 3), {1, 1, 1, 1, 1, 1});
  DegreeSequence full_ds = degrees_of(full);
  CHECK(full_ds.s() == std::vector<int>{3, 3});
  CHECK(full_ds.t() == std::vector<int>{2, 2, 2});

  BipartiteAdjacency zero(Shape(3, 3), std::vector<std::uint8_t>(9, 0));
  DegreeSequence zero_ds = degrees_of(zero);
  CHECK(zero_ds.s() == std::vector<int>{0, 0, 0});
  CHECK(zero_ds.t() == std::vector<int>{0, 0, 0});
}

TEST_CASE("adjacency rejects a set diagonal in loop-free mode") {
  CHECK_THROWS_AS(
      BipartiteAdjacency(Shape(2, 2, true), {1, 0, 0, 0}), DomainError);
  BipartiteAdjacency ok(Shape(2, 2, true), {0, 1, 1, 0});
  CHECK(ok.ones_count() == 2);
}

TEST_CASE("degree sums equal the number of ones on random matrices") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Xoshiro256StarStar rng(RngStream{seed, 0});
    Shape shape(3 + static_cast<int>(seed % 3), 4, false);
    BipartiteAdjacency matrix = random_matrix(shape, rng, 0.4);
    DegreeSequence ds = degrees_of(matrix);
    CHECK(ds.total_s() == matrix.ones_count());
    CHECK(ds.total_t() == matrix.ones_count());
  }
}

TEST_CASE("degrees_of commutes with row permutations") {
  Xoshiro256StarStar rng(RngStream{99, 0});
  Shape shape(4, 5);
  BipartiteAdjacency matrix = random_matrix(shape, rng, 0.5);
  DegreeSequence ds = degrees_of(matrix);

  std::vector<int> perm(4);
  std::iota(perm.begin(), perm.end(), 0);
  std::rotate(perm.begin(), perm.begin() + 1, perm.end());

  std::vector<std::uint8_t> permuted(20, 0);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 5; ++j) {
      permuted[static_cast<std::size_t>(i) * 5 + j] =
          matrix.at(perm[static_cast<std::size_t>(i)], j) ? 1 : 0;
    }
  }
  DegreeSequence permuted_ds =
      degrees_of(BipartiteAdjacency(shape, std::move(permuted)));
  for (int i = 0; i < 4; ++i) {
    CHECK(permuted_ds.s()[static_cast<std::size_t>(i)] ==
          ds.s()[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
  }
  CHECK(permuted_ds.t() == ds.t());
}

TEST_CASE("loop-free degrees never reach n") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Xoshiro256StarStar rng(RngStream{seed, 5});
    Shape shape(4, 4, true);
    DegreeSequence ds = degrees_of(random_matrix(shape, rng, 0.9));
    for (int v : ds.s()) CHECK(v < 4);
    for (int v : ds.t()) CHECK(v < 4);
  }
}

TEST_CASE("degree sequence construction rules") {
  Shape shape(2, 3);
  // Sum mismatch is allowed at construction...
  DegreeSequence ds(shape, {1, 1}, {1, 1, 1});
  CHECK(!ds.joint_valid());
  // ...but joint queries reject it.
  CHECK_THROWS_AS(ds.edge_count(), DomainError);
  CHECK_THROWS_AS(density_lambda(ds), DomainError);
  CHECK_THROWS_AS(DegreeSequence(shape, {4, 0}, {1, 1, 1}), DomainError);
  CHECK_THROWS_AS(DegreeSequence(shape, {1, -1}, {0, 0, 0}), DomainError);
  CHECK_THROWS_AS(DegreeSequence(Shape(2, 2, true), {2, 0}, {1, 1}),
                  DomainError);
}

TEST_CASE("density examples") {
  CHECK(lambda_from_t(Shape(2, 2), {1, 1}) == Rational(1, 2));
  CHECK(lambda_from_t(Shape(4, 3), {2, 1, 1}) == Rational(1, 3));
  DegreeSequence full(Shape(2, 3), {3, 3}, {2, 2, 2});
  CHECK(density_lambda(full) == 1);
}

TEST_CASE("rational parsing and logs") {
  CHECK(rational_from_string("1/3") == Rational(1, 3));
  CHECK(rational_from_string("0.25") == Rational(1, 4));
  CHECK(rational_from_string("2.5e-3") == Rational(1, 400));
  CHECK(rational_from_string("-0.5") == Rational(-1, 2));
  CHECK_THROWS_AS(rational_from_string("abc"), DomainError);
  CHECK_THROWS_AS(rational_from_string("1/0"), DomainError);

  Int big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 500);
  CHECK(log_to_double(big) == doctest::Approx(500 * std::log(10.0)));
  CHECK(log_to_double(Rational(1, 2)) == doctest::Approx(-std::log(2.0)));
  CHECK(rational_pow(Rational(2, 3), 3) == Rational(8, 27));
}

TEST_CASE("probability carrier") {
  Probability half = Probability::exact(Rational(1, 2));
  Probability third = Probability::exact(Rational(1, 3));
  CHECK((half + third).rational() == Rational(5, 6));
  CHECK((half * third).rational() == Rational(1, 6));
  CHECK(half.log_value() == doctest::Approx(-std::log(2.0)));

  Probability log_half = Probability::from_log(-std::log(2.0));
  Probability sum = log_half + log_half;
  CHECK(!sum.is_exact());
  CHECK(sum.value() == doctest::Approx(1.0));
  CHECK_THROWS_AS(sum.rational(), DomainError);

  CHECK(Probability::zero().log_value() ==
        -std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(Probability::exact(Rational(3, 2)), DomainError);
  CHECK_THROWS_AS(Probability::from_log(0.5), DomainError);
  // Mixed-path addition falls back to log space.
  CHECK((half + log_half).value() == doctest::Approx(1.0));
}
