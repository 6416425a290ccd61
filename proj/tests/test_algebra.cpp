#include <doctest.h>

#include <random>

#include "gmalie/gmalie.hpp"
#include "oracles/oracles.hpp"

using namespace gmalie;

TEST_CASE("matrix algebras match explicit matrix products") {
  Rationals q;
  for (std::size_t r = 1; r <= 3; ++r) {
    auto alg = matrix_algebra(q, r);
    auto cube = oracle::cube_of(alg);
    auto ref = oracle::matrix_cube(q, r);
    CHECK(cube.c == ref.c);
    CHECK(validate_algebra(alg.table()).passed());
  }
}

TEST_CASE("validate_algebra reports each law") {
  PrimeField f(7);
  auto t = matrix_algebra(f, 2).table();
  auto report = validate_algebra(t);
  CHECK(report.passed());
  REQUIRE(report.find("associativity"));
  REQUIRE(report.find("unit"));

  auto bad_unit = t;
  bad_unit.unit = unit_vector(f, 4, 0);
  auto r1 = validate_algebra(bad_unit);
  CHECK_FALSE(r1.passed());
  CHECK(r1.find("unit")->status == Status::Fail);
  CHECK_FALSE(r1.find("unit")->witness.empty());

  auto bad_shape = t;
  bad_shape.unit.pop_back();
  CHECK(validate_algebra(bad_shape).find("shape")->status == Status::Fail);

  CHECK_THROWS_AS(StructureAlgebra<PrimeField>{bad_unit}, ValidationError);
}

TEST_CASE("every single-constant perturbation of M2 is rejected") {
  Rationals q;
  const auto base = matrix_algebra(q, 2).table();
  const std::size_t d = base.dim();
  int rejected = 0, total = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        auto t = base;
        t.product.accumulate(q, i, j, k, q.one());
        ++total;
        if (!validate_algebra(t).passed()) ++rejected;
      }
  CHECK(rejected == total);
}

TEST_CASE("brackets, commutators and commutativity") {
  Rationals q;
  auto m2 = matrix_algebra(q, 2);
  // [E11, E12] = E12
  auto b = m2.basis_bracket(0, 1);
  CHECK(b == std::vector<mpq_class>{0, 1, 0, 0});
  CHECK(commutator_span(m2).dim() == oracle::commutator_dim(oracle::cube_of(m2)));
  CHECK(commutator_span(m2).dim() == 3);
  CHECK(is_commutative(dual_numbers(q)));
  CHECK(is_commutative(field_algebra(q)));
  CHECK_FALSE(is_commutative(m2));
  auto up = upper_triangular_matrices(q, 2);
  CHECK(up.dim() == 3);
  CHECK(commutator_span(up).dim() == 1);
}

TEST_CASE("multiplication operators") {
  PrimeField f(7);
  auto m2 = matrix_algebra(f, 2);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    Vector<PrimeField> x(4), y(4);
    for (auto& v : x) v = f.random(rng);
    for (auto& v : y) v = f.random(rng);
    auto xy = m2.multiply(x, y);
    CHECK(gmalie::apply(m2.left_multiplication(x), std::span<const std::uint32_t>(y)) == xy);
    CHECK(gmalie::apply(m2.right_multiplication(y), std::span<const std::uint32_t>(x)) == xy);
  }
  CHECK_THROWS_AS(m2.check_element(std::vector<std::uint32_t>{1, 2, 3}), DimensionError);
  CHECK_THROWS_AS(matrix_algebra(f, 0), DimensionError);
}
