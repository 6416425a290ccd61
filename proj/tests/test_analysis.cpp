#include <doctest.h>

#include "gmalie/gmalie.hpp"
#include "oracles/oracles.hpp"
#include "support/corpus.hpp"

using namespace gmalie;

namespace {

// k[x]/(x^2 + 1), basis 1, x.
template <class F>
StructureAlgebra<F> gaussian(const F& f) {
  AlgebraTable<F> t{f, BilinearTable<F>(2, 2, 2), unit_vector(f, 2, 0)};
  t.product.accumulate(f, 0, 0, 0, f.one());
  t.product.accumulate(f, 0, 1, 1, f.one());
  t.product.accumulate(f, 1, 0, 1, f.one());
  t.product.accumulate(f, 1, 1, 0, f.neg(f.one()));
  return StructureAlgebra<F>(std::move(t));
}

template <class F>
Subspace<F> oracle_center(const StructureAlgebra<F>& alg) {
  return oracle::as_subspace(alg.field(), alg.dim(), oracle::center(oracle::cube_of(alg)));
}

}  // namespace

TEST_CASE("center examples") {
  Rationals q;
  auto m3 = corpus::full_matrix(q, 3);
  auto z = center(m3.algebra());
  REQUIRE(z.dim() == 1);
  CHECK(z.contains(m3.algebra().unit()));
  CHECK(center(dual_numbers(q)).dim() == 2);
  auto t2 = corpus::t2(q);
  auto zt = center(t2.algebra());
  CHECK(zt.dim() == 1);
  CHECK(zt.contains(t2.algebra().unit()));
  for (auto& [name, g] : corpus::five(q)) {
    CAPTURE(name);
    CHECK(center(g.algebra()) == oracle_center(g.algebra()));
  }
}

TEST_CASE("center data and eta") {
  Rationals q;
  auto m3 = corpus::full_matrix(q, 3);
  auto cd = center_data(m3);
  CHECK(cd.checks.passed());
  REQUIRE(cd.eta);
  CHECK(cd.eta->row_vector(0) == std::vector<mpq_class>{1, 0, 0, 1});

  auto tri = corpus::upper(q, 2, 1);
  auto ct = center_data(tri);
  CHECK(ct.checks.passed());
  CHECK(ct.z_g.dim() == 1);
  CHECK(ct.pi_a_image == ct.z_a);
  CHECK(ct.pi_a_image.contains(std::vector<mpq_class>{1, 0, 0, 1}));
  CHECK_FALSE(ct.z_g.contains(tri.e()));

  for (auto& [name, g] : corpus::five(PrimeField(7))) {
    CAPTURE(name);
    auto c = center_data(g);
    CHECK(c.checks.passed());
    CHECK(c.pi_a_image.dim() == c.z_g.dim());
  }
}

TEST_CASE("central ideals") {
  Rationals q;
  CHECK_FALSE(has_nonzero_central_ideal(matrix_algebra(q, 2)).answer);
  auto dn = has_nonzero_central_ideal(dual_numbers(q));
  CHECK(dn.answer);
  REQUIRE(dn.witness);
  CHECK(*dn.witness == std::vector<mpq_class>{1, 0});
  CHECK(has_nonzero_central_ideal(field_algebra(q)).answer);
  CHECK_FALSE(has_nonzero_central_ideal(upper_triangular_matrices(q, 2)).answer);
}

TEST_CASE("central torsion check") {
  Rationals q;
  auto m3 = corpus::full_matrix(q, 3);
  CHECK(torsion_action_check(m3, center(m3.algebra())).status == Status::Pass);

  auto nil = assemble(triangular_over(dual_numbers(q)));
  auto tn = torsion_action_check(nil, center(nil.algebra()));
  CHECK(tn.status == Status::Fail);
  REQUIRE(tn.alpha);
  REQUIRE(tn.annihilated);
  auto prod = nil.algebra().multiply(*tn.alpha, *tn.annihilated);
  CHECK(is_zero_vector(q, std::span<const mpq_class>(prod)));

  auto gq = assemble(triangular_over(gaussian(q)));
  REQUIRE(center(gq.algebra()).dim() == 2);
  CHECK(torsion_action_check(gq, center(gq.algebra())).status == Status::Unknown);

  // x^2 + 1 is irreducible mod 7, so all 48 nonzero central elements are units.
  PrimeField f7(7);
  auto g7 = assemble(triangular_over(gaussian(f7)));
  CHECK(torsion_action_check(g7, center(g7.algebra())).status == Status::Pass);
  // ... but splits mod 5.
  PrimeField f5(5);
  auto g5 = assemble(triangular_over(gaussian(f5)));
  CHECK(torsion_action_check(g5, center(g5.algebra())).status == Status::Fail);
}

TEST_CASE("derivation spaces against the raw-equation oracle") {
  Rationals q;
  PrimeField f7(7);
  CHECK(derivation_space(matrix_algebra(q, 2)).dim() == 3);
  CHECK(derivation_space(matrix_algebra(f7, 3)).dim() == 8);
  CHECK(derivation_space(field_algebra(q)).dim() == 0);
  CHECK(lie_derivation_space(matrix_algebra(q, 3)).dim() == 9);
  CHECK(lie_derivation_space(dual_numbers(q)).dim() == 4);
  CHECK(all_derivations_inner(matrix_algebra(q, 2)));
  CHECK(all_derivations_inner(matrix_algebra(f7, 3)));
  CHECK(inner_derivation_space(dual_numbers(q)).is_zero());
  CHECK_FALSE(all_derivations_inner(dual_numbers(q)));

  auto run = [](const auto& named) {
    for (auto& [name, g] : named) {
      CAPTURE(name);
      const auto& alg = g.algebra();
      const auto fld = alg.field();
      const std::size_t d = alg.dim();
      auto cube = oracle::cube_of(alg);
      auto der = derivation_space(alg);
      auto lie = lie_derivation_space(alg);
      auto inner = inner_derivation_space(alg);
      CHECK(der == oracle::as_subspace(fld, d * d, oracle::derivations(cube, false)));
      CHECK(lie == oracle::as_subspace(fld, d * d, oracle::derivations(cube, true)));
      CHECK(inner.dim() == oracle::inner_dim(cube));
      CHECK(inner.dim() == d - center(alg).dim());
      CHECK(is_subspace_of(inner, der));
      CHECK(is_subspace_of(der, lie));
    }
  };
  run(corpus::five(q));
  run(corpus::five(f7));

  auto tri = corpus::upper(q, 2, 1);
  CHECK(inner_derivation_space(tri.algebra()).dim() == 6);
}

TEST_CASE("bimodule homomorphisms and special pairs") {
  Rationals q;
  auto m3 = corpus::full_matrix(q, 3);
  auto ps = pair_spaces(m3);
  CHECK(ps.hom_m.dim() == 1);
  CHECK(ps.standard_within_special);
  CHECK(ps.all_standard());

  auto tri = corpus::upper(q, 2, 1);
  auto pt = pair_spaces(tri);
  CHECK(pt.hom_n.ambient_dim() == 0);
  CHECK(pt.special_pairs == pt.hom_m);
  CHECK(pt.all_standard());

  auto sm = assemble(scalar_module_context(q, 2));
  auto pp = pair_spaces(sm);
  CHECK(pp.hom_m.dim() == 4);
  CHECK(pp.standard_pairs.dim() == 1);
  CHECK_FALSE(pp.all_standard());
  auto rep = check_hypotheses(sm, HypothesisSet::CentralTorsion);
  CHECK(rep.conditions[4].status == Status::Fail);
}

TEST_CASE("hypothesis checker") {
  Rationals q;
  auto m3 = corpus::full_matrix(q, 3);
  CHECK(check_hypotheses(m3, HypothesisSet::CentralTorsion).all_pass());
  CHECK(check_hypotheses(m3, HypothesisSet::ModuleAnnihilator).all_pass());

  auto t2 = check_hypotheses(corpus::t2(q), HypothesisSet::CentralTorsion);
  CHECK(t2.conditions[1].status == Status::Fail);
  CHECK(t2.conditions[1].witness.find("central ideal") != std::string::npos);
  CHECK_FALSE(t2.all_pass());

  auto tri = corpus::upper(q, 2, 1);
  CHECK(check_hypotheses(tri, HypothesisSet::CentralTorsion).all_pass());
  auto tri43 = check_hypotheses(tri, HypothesisSet::ModuleAnnihilator);
  CHECK(tri43.conditions[2].status == Status::Pass);  // N = 0
  CHECK(tri43.conditions[3].status == Status::Fail);  // every m is killed by N = 0

  auto zp = check_hypotheses(corpus::zero_pairing(q), HypothesisSet::CentralTorsion);
  CHECK(zp.conditions[3].status == Status::Pass);  // A = M_2 is noncommutative
  auto zp43 = check_hypotheses(corpus::zero_pairing(q), HypothesisSet::ModuleAnnihilator);
  CHECK(zp43.conditions[2].status == Status::Fail);

  // Commutative corners with zero pairings violate the fallback.
  auto flat = check_hypotheses(assemble(generate_builtin(BuiltinParams{BuiltinKind::ZeroPairing, 0, 1, 1}, q)),
                               HypothesisSet::CentralTorsion);
  CHECK(flat.conditions[3].status == Status::Fail);

  CHECK(to_string(HypothesisSet::CentralTorsion) == "central-torsion");
  CHECK(to_string(HypothesisSet::ModuleAnnihilator) == "module-annihilator");
}
