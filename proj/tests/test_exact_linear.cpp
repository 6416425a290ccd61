#include <doctest.h>

#include <random>

#include "gmalie/gmalie.hpp"
#include "oracles/oracles.hpp"

using namespace gmalie;

namespace {

template <class F>
Matrix<F> from_ints(const F& f, std::size_t rows, std::size_t cols, std::initializer_list<long long> v) {
  Matrix<F> m(f, rows, cols);
  std::size_t i = 0;
  for (auto x : v) {
    m(i / cols, i % cols) = f.from_int(x);
    ++i;
  }
  return m;
}

template <class F, class Rng>
Matrix<F> random_matrix(const F& f, std::size_t rows, std::size_t cols, Rng& rng, int zero_bias = 0) {
  Matrix<F> m(f, rows, cols);
  std::uniform_int_distribution<int> coin(0, 9);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = coin(rng) < zero_bias ? f.zero() : f.random(rng);
  return m;
}

template <class F>
std::vector<Vector<F>> rows_of(const Matrix<F>& m) {
  std::vector<Vector<F>> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row_vector(r));
  return out;
}

}  // namespace

TEST_CASE("field descriptors") {
  CHECK(FieldSpec::parse("q").kind == FieldKind::Rationals);
  CHECK(FieldSpec::parse("gf:7").p == 7);
  CHECK(FieldSpec::parse("gf:101").to_string() == "gf:101");
  CHECK_THROWS_AS(FieldSpec::parse("gf:2"), Error);
  CHECK_THROWS_AS(FieldSpec::parse("gf:9"), Error);
  CHECK_THROWS_AS(FieldSpec::parse("r"), ParseError);
  CHECK_THROWS_AS(PrimeField(2), Error);
  CHECK_THROWS_AS(PrimeField(15), Error);
}

TEST_CASE("scalar parsing is canonical") {
  Rationals q;
  CHECK(q.format(q.parse("6/4")) == "3/2");
  CHECK(q.format(q.parse("-2/-4")) == "1/2");
  CHECK(q.format(q.parse(" 7 ")) == "7");
  CHECK_THROWS_AS(q.parse("1/0"), ParseError);
  CHECK_THROWS_AS(q.parse("abc"), ParseError);
  PrimeField f(7);
  CHECK(f.parse("-1") == 6);
  CHECK(f.parse("1/2") == 4);
  CHECK(f.parse("15") == 1);
  CHECK_THROWS_AS(f.parse("1/7"), ParseError);
  for (std::uint32_t a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
}

TEST_CASE("kernel_of examples") {
  Rationals q;
  CHECK(kernel_of(Matrix<Rationals>::identity(q, 2)).dim() == 0);
  auto k = kernel_of(from_ints(q, 2, 2, {1, 1, 1, 1}));
  REQUIRE(k.dim() == 1);
  CHECK(k.contains(std::vector<mpq_class>{1, -1}));
  PrimeField f(7);
  CHECK(kernel_of(from_ints(f, 1, 1, {2})).dim() == 0);
  CHECK(kernel_of(from_ints(f, 1, 1, {7})).dim() == 1);
}

TEST_CASE("solve_particular examples") {
  Rationals q;
  auto id = Matrix<Rationals>::identity(q, 3);
  std::vector<mpq_class> b{mpq_class(1, 2), 3, -4};
  auto x = solve_particular(id, std::span<const mpq_class>(b));
  REQUIRE(x);
  CHECK(*x == b);
  auto m = from_ints(q, 1, 2, {1, 1});
  std::vector<mpq_class> two{2};
  auto y = solve_particular(m, std::span<const mpq_class>(two));
  REQUIRE(y);
  CHECK(*y == std::vector<mpq_class>{2, 0});
  auto col = from_ints(q, 2, 1, {1, 1});
  std::vector<mpq_class> inc{1, 2};
  CHECK_FALSE(solve_particular(col, std::span<const mpq_class>(inc)));
  CHECK_THROWS_AS(solve_particular(col, std::span<const mpq_class>(two)), DimensionError);
}

TEST_CASE("subspace operation examples") {
  PrimeField f(7);
  std::mt19937_64 rng(1);
  auto s = Subspace<PrimeField>::span(random_matrix(f, 3, 6, rng));
  CHECK(intersect(s, s) == s);
  CHECK(sum(s, Subspace<PrimeField>::zero(f, 6)) == s);
  CHECK(equal(s, s));
  CHECK_THROWS_AS(sum(s, Subspace<PrimeField>::zero(f, 5)), DimensionError);
  CHECK_THROWS_AS(intersect(s, Subspace<PrimeField>::zero(f, 5)), DimensionError);
  PrimeField g(5);
  CHECK_THROWS_AS(sum(s, Subspace<PrimeField>::zero(g, 6)), FieldMismatchError);
}

TEST_CASE("random properties over GF(7)") {
  PrimeField f(7);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 7);
    const std::size_t rows = dim(rng), cols = dim(rng);
    auto m = random_matrix(f, rows, cols, rng, 5);

    // rank-nullity, exact kernel, agreement with the independent oracle
    auto k = kernel_of(m);
    CHECK(rank(m) + k.dim() == cols);
    for (std::size_t i = 0; i < k.dim(); ++i) {
      const auto image = gmalie::apply(m, k.basis().row(i));
      const bool killed = is_zero_vector(f, std::span<const std::uint32_t>(image));
      CHECK(killed);
    }
    CHECK(k == oracle::as_subspace(f, cols, oracle::nullspace(f, rows_of(m), cols)));

    // Grassmann formula
    auto s = Subspace<PrimeField>::span(random_matrix(f, dim(rng), cols, rng, 4));
    auto t = Subspace<PrimeField>::span(random_matrix(f, dim(rng), cols, rng, 4));
    CHECK(s.dim() + t.dim() == sum(s, t).dim() + intersect(s, t).dim());
    CHECK(is_subspace_of(intersect(s, t), s));
    CHECK(is_subspace_of(s, sum(s, t)));

    // canonical form survives random invertible row operations
    if (s.dim() > 0) {
      auto basis = s.basis();
      Matrix<PrimeField> shuffled(f, basis.rows() + 1, cols);
      for (std::size_t r = 0; r < basis.rows(); ++r)
        for (std::size_t c = 0; c < cols; ++c) shuffled(r, c) = basis(r, c);
      for (int op = 0; op < 10; ++op) {
        std::uniform_int_distribution<std::size_t> pick(0, basis.rows() - 1);
        auto a = pick(rng), b = pick(rng);
        if (a == b) continue;
        auto c = f.random(rng);
        for (std::size_t j = 0; j < cols; ++j) shuffled(a, j) = f.add(shuffled(a, j), f.mul(c, shuffled(b, j)));
      }
      CHECK(Subspace<PrimeField>::span(shuffled) == s);
    }

    // solve_particular returns an exact solution when b is in the image
    Vector<PrimeField> x(cols);
    for (auto& e : x) e = f.random(rng);
    auto b = gmalie::apply(m, std::span<const std::uint32_t>(x));
    auto sol = solve_particular(m, std::span<const std::uint32_t>(b));
    REQUIRE(sol);
    CHECK(gmalie::apply(m, std::span<const std::uint32_t>(*sol)) == b);
  }
}

TEST_CASE("fraction-free elimination agrees with plain Gauss-Jordan over Q") {
  Rationals q;
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 7);
    auto m = random_matrix(q, dim(rng), dim(rng), rng, 4);
    auto ff = rref(m);
    auto gj = detail::gauss_jordan(m);
    CHECK(ff.pivots == gj.pivots);
    CHECK(ff.reduced == gj.reduced);
    CHECK(kernel_of(m) == oracle::as_subspace(q, m.cols(), oracle::nullspace(q, rows_of(m), m.cols())));
  }
}

TEST_CASE("row reducer matches dense elimination") {
  PrimeField f(7);
  Rationals q;
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    auto m = random_matrix(f, 12, 8, rng, 7);
    RowReducer<PrimeField> red(f, 8);
    for (std::size_t r = 0; r < m.rows(); ++r) red.add_row(to_sparse(f, m.row(r)));
    CHECK(red.rank() == rank(m));
    CHECK(red.kernel() == kernel_of(m));
    CHECK(red.row_space() == Subspace<PrimeField>::span(m));

    auto mq = random_matrix(q, 9, 6, rng, 6);
    RowReducer<Rationals> rq(q, 6);
    for (std::size_t r = 0; r < mq.rows(); ++r) rq.add_row(to_sparse(q, mq.row(r)));
    CHECK(rq.kernel() == kernel_of(mq));
  }
}

TEST_CASE("subspace coordinates and membership") {
  Rationals q;
  auto s = Subspace<Rationals>::span(from_ints(q, 2, 3, {1, 2, 3, 0, 1, 1}));
  std::vector<mpq_class> v{2, 5, 7};
  auto c = s.coordinates(std::span<const mpq_class>(v));
  REQUIRE(c);
  CHECK(s.combine(*c) == v);
  std::vector<mpq_class> w{0, 0, 1};
  CHECK_FALSE(s.contains(std::span<const mpq_class>(w)));
  CHECK_THROWS_AS(s.coordinates(std::span<const mpq_class>(c->data(), 2)), DimensionError);
}

TEST_CASE("matrix shape errors") {
  PrimeField f(7);
  Matrix<PrimeField> a(f, 2, 3), b(f, 2, 3);
  CHECK_THROWS_AS(multiply(a, b), DimensionError);
  Matrix<PrimeField> c(PrimeField(5), 3, 2);
  CHECK_THROWS_AS(multiply(a, c), FieldMismatchError);
  CHECK(transpose(transpose(a)) == a);
}
