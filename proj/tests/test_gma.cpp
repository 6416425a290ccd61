#include <doctest.h>

#include <random>

#include "gmalie/gmalie.hpp"
#include "oracles/oracles.hpp"
#include "support/corpus.hpp"

using namespace gmalie;
using Blk = BlockLayout::Block;

namespace {

// Global index of full_matrix(r) -> matrix unit index a*r + b.
std::size_t matrix_unit_of(std::size_t idx, std::size_t r) {
  const std::size_t k = r - 1;
  if (idx == 0) return 0;
  if (idx <= k) return idx;                    // M: E_{1, j+1}
  if (idx <= 2 * k) return (idx - k) * r;      // N: E_{i+1, 1}
  const std::size_t b = idx - 1 - 2 * k;       // B: E_{i+1, j+1}
  return (b / k + 1) * r + (b % k + 1);
}

// k x k, basis e1, e2.
template <class F>
AlgebraTable<F> split_pair(const F& f) {
  AlgebraTable<F> t{f, BilinearTable<F>(2, 2, 2), std::vector<typename F::value_type>{f.one(), f.one()}};
  t.product.accumulate(f, 0, 0, 0, f.one());
  t.product.accumulate(f, 1, 1, 1, f.one());
  return t;
}

}  // namespace

TEST_CASE("full-matrix context assembles to M_r") {
  Rationals q;
  for (std::size_t r = 2; r <= 3; ++r) {
    auto g = corpus::full_matrix(q, r);
    REQUIRE(g.dim() == r * r);
    auto cube = oracle::cube_of(g.algebra());
    auto ref = oracle::matrix_cube(q, r);
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (std::size_t j = 0; j < g.dim(); ++j)
        for (std::size_t k = 0; k < g.dim(); ++k)
          CHECK(cube.at(i, j, k) == ref.at(matrix_unit_of(i, r), matrix_unit_of(j, r), matrix_unit_of(k, r)));
  }
}

TEST_CASE("validate_context on builtins and perturbations") {
  PrimeField f(7);
  auto ctx = generate_builtin(BuiltinParams{BuiltinKind::FullMatrix, 3}, f);
  CHECK(validate_context(ctx).passed());

  auto neg = ctx;
  for (auto& e : neg.phi.entries)
    for (auto& [k, v] : e) v = f.neg(v);
  auto rep = validate_context(neg);
  CHECK_FALSE(rep.passed());
  REQUIRE(rep.find("morita.mnm"));
  CHECK(rep.find("morita.mnm")->status == Status::Fail);
  CHECK_FALSE(rep.find("morita.mnm")->witness.empty());
  CHECK_THROWS_AS(assemble(neg), ValidationError);

  auto tri = generate_builtin(BuiltinParams{BuiltinKind::UpperTriangular, 0, 2, 1}, f);
  CHECK(validate_context(tri).passed());
  CHECK(assemble(tri).dim() == 7);

  auto lower = generate_builtin(BuiltinParams{BuiltinKind::LowerTriangular, 0, 1, 2}, f);
  CHECK(validate_context(lower).passed());
  CHECK(lower.dim_m == 2);
  CHECK(lower.dim_n == 0);

  CHECK(assemble(generate_builtin(BuiltinParams{BuiltinKind::UpperTriangular, 0, 1, 1}, Rationals{})).dim() == 3);
  CHECK_THROWS_AS(generate_builtin(BuiltinParams{BuiltinKind::FullMatrix, 1}, f), DimensionError);
  CHECK_THROWS_AS(parse_builtin_kind("circulant"), ParseError);
  CHECK(parse_builtin_kind("zero-pairing") == BuiltinKind::ZeroPairing);
}

TEST_CASE("faithfulness and nonzero M are enforced") {
  Rationals q;
  // A = k x k acting on M = k through e1 only: e2 annihilates M.
  auto ctx = MoritaContext<Rationals>::blank(q, split_pair(q), field_algebra(q).table(), 1, 0);
  ctx.left_m.accumulate(q, 0, 0, 0, q.one());
  ctx.right_m.accumulate(q, 0, 0, 0, q.one());
  auto rep = validate_context(ctx);
  CHECK(rep.find("M.left_unit")->status == Status::Pass);
  CHECK(rep.find("M.faithful_left")->status == Status::Fail);
  CHECK(rep.find("M.faithful_right")->status == Status::Pass);

  auto empty = MoritaContext<Rationals>::blank(q, field_algebra(q).table(), field_algebra(q).table(), 0, 1);
  empty.left_n.accumulate(q, 0, 0, 0, q.one());
  empty.right_n.accumulate(q, 0, 0, 0, q.one());
  CHECK(validate_context(empty).find("M.nonzero")->status == Status::Fail);
}

TEST_CASE("block product law and Pierce structure") {
  Rationals q;
  std::mt19937_64 rng(17);
  for (auto& [name, g] : corpus::five(q)) {
    CAPTURE(name);
    const auto& alg = g.algebra();
    const auto& e = g.e();
    const auto& fi = g.f();
    CHECK(alg.multiply(e, e) == e);
    CHECK(alg.multiply(fi, fi) == fi);
    CHECK(is_zero_vector(q, std::span<const mpq_class>(alg.multiply(e, fi))));
    CHECK(is_zero_vector(q, std::span<const mpq_class>(alg.multiply(fi, e))));
    CHECK(add(q, std::span<const mpq_class>(e), std::span<const mpq_class>(fi)) == alg.unit());

    auto pe = pierce_project(g, e);
    CHECK(pe.a == g.context().a.unit);
    CHECK(is_zero_vector(q, std::span<const mpq_class>(pe.b)));
    auto pu = pierce_project(g, alg.unit());
    CHECK(pu.a == g.context().a.unit);
    CHECK(pu.b == g.context().b.unit);
    CHECK(is_zero_vector(q, std::span<const mpq_class>(pu.m)));

    const auto& c = g.context();
    for (int trial = 0; trial < 5; ++trial) {
      auto x = corpus::random_vector(q, g.dim(), rng);
      auto y = corpus::random_vector(q, g.dim(), rng);
      auto p = pierce_project(g, x);
      Vector<Rationals> back = p.exe;
      for (const auto* part : {&p.exf, &p.fxe, &p.fxf}) add_scaled(q, back, q.one(), std::span<const mpq_class>(*part));
      CHECK(back == x);
      CHECK(g.embed(Blk::M, p.m) == p.exf);

      // (a,m,n,b)(a',m',n',b') computed block-wise from the context tables.
      auto px = pierce_project(g, x), py = pierce_project(g, y);
      using S = std::span<const mpq_class>;
      auto A = c.a.product.apply(q, S(px.a), S(py.a));
      add_scaled(q, A, q.one(), S(c.phi.apply(q, S(px.m), S(py.n))));
      auto M = c.left_m.apply(q, S(px.a), S(py.m));
      add_scaled(q, M, q.one(), S(c.right_m.apply(q, S(px.m), S(py.b))));
      auto N = c.right_n.apply(q, S(px.n), S(py.a));
      add_scaled(q, N, q.one(), S(c.left_n.apply(q, S(px.b), S(py.n))));
      auto B = c.b.product.apply(q, S(px.b), S(py.b));
      add_scaled(q, B, q.one(), S(c.psi.apply(q, S(px.n), S(py.m))));
      Vector<Rationals> expect = g.embed(Blk::A, A);
      for (auto [blk, v] : {std::pair{Blk::M, &M}, std::pair{Blk::N, &N}, std::pair{Blk::B, &B}})
        add_scaled(q, expect, q.one(), S(g.embed(blk, *v)));
      CHECK(alg.multiply(x, y) == expect);
    }
  }
}

TEST_CASE("zero-pairing generator has vanishing pairings") {
  Rationals q;
  auto g = corpus::zero_pairing(q);
  CHECK(mn_span(g.context()).is_zero());
  CHECK(nm_span(g.context()).is_zero());
  CHECK(g.dim() == 4 + 2 + 2 + 1);
  CHECK(mn_span(corpus::full_matrix(q, 3).context()).dim() == 1);
}
