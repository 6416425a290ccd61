// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails,
// except that `--known-failure ACk` expects exactly the named criteria to fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "gmalie/gmalie.hpp"
#include "oracles/oracles.hpp"
#include "support/corpus.hpp"

using namespace gmalie;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

template <class F>
using Span = std::span<const typename F::value_type>;

// AC1 ---------------------------------------------------------------------

template <class F>
std::vector<BilinearTable<F>*> tables_of(MoritaContext<F>& c) {
  std::vector<BilinearTable<F>*> out;
  for (auto* t : {&c.a.product, &c.b.product, &c.left_m, &c.right_m, &c.left_n, &c.right_n, &c.phi, &c.psi})
    if (t->left_dim * t->right_dim * t->out_dim > 0) out.push_back(t);
  return out;
}

Outcome morita_fuzz() {
  Outcome o;
  Rationals q;
  std::mt19937_64 rng(0x5eed);
  for (auto& [name, g] : corpus::five(q)) {
    const auto& base = g.context();
    o.require(validate_context(base).passed(), name + " fails validation");
    int rejected = 0;
    for (int trial = 0; trial < 50; ++trial) {
      auto c = base;
      auto tabs = tables_of(c);
      auto* t = tabs[rng() % tabs.size()];
      const std::size_t i = rng() % t->left_dim, j = rng() % t->right_dim, k = rng() % t->out_dim;
      t->accumulate(q, i, j, k, q.one());
      auto rep = validate_context(c);
      const Check* bad = rep.first_failure();
      if (!rep.passed() && bad && !bad->witness.empty()) ++rejected;
    }
    o.require(rejected == 50, name + ": " + std::to_string(50 - rejected) + " perturbations accepted");
  }
  return o;
}

// AC2 ---------------------------------------------------------------------

template <class F>
std::size_t oracle_center_dim(const StructureAlgebra<F>& alg) {
  return oracle::as_subspace(alg.field(), alg.dim(), oracle::center(oracle::cube_of(alg))).dim();
}

template <class F>
std::size_t oracle_der_dim(const StructureAlgebra<F>& alg) {
  const std::size_t d = alg.dim();
  return oracle::as_subspace(alg.field(), d * d, oracle::derivations(oracle::cube_of(alg), false)).dim();
}

Outcome structure_dims() {
  Outcome o;
  Rationals q;
  PrimeField f7(7);
  auto m3 = matrix_algebra(q, 3);
  auto m2 = matrix_algebra(q, 2);
  auto m3g = matrix_algebra(f7, 3);
  auto tri = corpus::upper(q, 2, 1);

  o.require(center(m3).dim() == 1 && oracle_center_dim(m3) == 1, "dim Z(M3) != 1");
  o.require(derivation_space(m2).dim() == 3 && oracle_der_dim(m2) == 3, "dim Der(M2(Q)) != 3");
  o.require(derivation_space(m3g).dim() == 8 && oracle_der_dim(m3g) == 8, "dim Der(M3(GF7)) != 8");
  o.require(all_derivations_inner(m2), "M2 has an outer derivation");
  o.require(all_derivations_inner(m3), "M3 has an outer derivation");
  o.require(center(tri.algebra()).dim() == 1 && oracle_center_dim(tri.algebra()) == 1, "dim Z(tri7) != 1");
  return o;
}

// AC3 ---------------------------------------------------------------------

Outcome hypotheses() {
  Outcome o;
  Rationals q;
  auto m3 = corpus::full_matrix(q, 3);
  auto ct = check_hypotheses(m3, HypothesisSet::CentralTorsion);
  auto ma = check_hypotheses(m3, HypothesisSet::ModuleAnnihilator);
  o.require(ct.conditions.size() == 5 && ct.all_pass(), "M3 fails central-torsion set");
  o.require(ma.conditions.size() == 5 && ma.all_pass(), "M3 fails module-annihilator set");
  o.require(check_hypotheses(corpus::upper(q, 2, 1), HypothesisSet::CentralTorsion).all_pass(),
            "tri7 fails central-torsion set");
  auto t2 = check_hypotheses(corpus::t2(q), HypothesisSet::CentralTorsion);
  const auto& c2 = t2.conditions.at(1);
  o.require(c2.status == Status::Fail, "T2 passes condition (2)");
  o.require(c2.witness.find("A has central ideal") != std::string::npos &&
                c2.witness.find("B has central ideal") != std::string::npos,
            "T2 condition (2) witness is one-sided: " + c2.witness);
  return o;
}

// AC4 ---------------------------------------------------------------------

template <class F>
void check_verdict(Outcome& o, const std::string& name, const CorpusVerdict<F>& v, bool triangular) {
  o.require(v.theorem_applies, name + ": hypotheses do not hold");
  o.require(v.space_dim > 0, name + ": empty 3-Lie-derivation space");
  if (const Check* bad = v.checks.first_failure()) o.require(false, name + ": " + bad->name + " " + bad->witness);
  for (const auto& e : v.elements) {
    o.require(e.exact_sum, name + ": kappa + psi != phi");
    o.require(e.x0_annihilates_commutators, name + ": [[G,G],X0] != 0");
    o.require(e.psi_centrally_valued.answer, name + ": psi not centrally valued");
    if (triangular) o.require(e.triangular_form.value_or(false), name + ": X0 != e phi(e,e,e) f");
  }
}

Outcome end_to_end() {
  Outcome o;
  Rationals q;
  check_verdict(o, "tri7/Q", verify_theorem_corpus(corpus::upper(q, 2, 1), 3, Budget{}), true);
  check_verdict(o, "M3/GF7", verify_theorem_corpus(corpus::full_matrix(PrimeField(7), 3), 3, Budget{}), false);
  return o;
}

// AC5 ---------------------------------------------------------------------

Outcome slot_restriction() {
  Outcome o;
  Rationals q;
  auto t2 = corpus::t2(q);
  const auto& alg = t2.algebra();
  for (std::size_t n : {2, 3}) {
    auto space = n_lie_derivation_space(alg, n);
    auto direct = oracle::as_subspace(q, space.coordinates.ambient_dim(), oracle::n_lie_direct(oracle::cube_of(alg), n));
    o.require(space.coordinates == direct, "T2 n=" + std::to_string(n) + ": spaces differ");
  }
  return o;
}

// AC6 ---------------------------------------------------------------------

Outcome extremal_equivalence() {
  Outcome o;
  Rationals q;
  for (auto& [name, g] : corpus::five(q)) {
    auto ext = extremal_exists(g);
    o.require(ext.equivalence, name + ": linear conditions disagree with the annihilator");
    auto brute = oracle::as_subspace(q, g.dim(), oracle::double_commutator_annihilator(oracle::cube_of(g.algebra())));
    o.require(ext.oracle_annihilator == brute, name + ": annihilator disagrees with the oracle");
    const bool nonzero = !ext.oracle_offdiagonal.is_zero();
    if (name == "T2") {
      auto e12 = Subspace<Rationals>::span(q, 1, {Vector<Rationals>{1}});
      o.require(nonzero && ext.oracle_offdiagonal == e12, "T2: witness is not the E12 span");
      o.require(ext.exists, "T2: no extremal map");
    }
    if (name == "M3" || name == "zero_pairing") o.require(!nonzero && !ext.exists, name + ": nonzero witness");
  }
  return o;
}

// AC7 ---------------------------------------------------------------------

template <class F>
MultilinearMap<F> random_central_map(const GMAlgebra<F>& g, const Subspace<F>& lambdas, const Subspace<F>& z,
                                     std::size_t n, std::mt19937_64& rng) {
  std::vector<Vector<F>> ls;
  for (std::size_t k = 0; k < n; ++k) ls.push_back(corpus::random_in(lambdas, rng));
  return corpus::product_of_functionals(g.field(), ls, corpus::random_in(z, rng));
}

Outcome round_trip() {
  Outcome o;
  PrimeField f(101);
  std::mt19937_64 rng(101);
  std::vector<corpus::Named<PrimeField>> gs;
  gs.push_back({"T2", corpus::t2(f)});
  gs.push_back({"tri7", corpus::upper(f, 2, 1)});
  int degenerate = 0, nondegenerate = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto& [name, g] = gs[trial % 2];
    const auto& alg = g.algebra();
    const auto& L = g.layout();
    auto ext = extremal_exists(g);
    auto z = center(alg);
    auto lambdas = annihilator(commutator_span(alg));

    // Off-diagonal admissible X0, zero in every fifth trial.
    Vector<PrimeField> x0 = zero_vector(f, g.dim());
    if (trial % 5 != 4) {
      auto mn = corpus::random_in(ext.oracle_offdiagonal, rng);
      for (std::size_t i = 0; i < L.dim_m; ++i) x0[L.offset_m() + i] = mn[i];
      for (std::size_t i = 0; i < L.dim_n; ++i) x0[L.offset_n() + i] = mn[L.dim_m + i];
    }
    auto phi = build_extremal(g, Span<PrimeField>(x0), 3) + random_central_map(g, lambdas, z, 3, rng);
    auto r = decompose(g, phi, Budget{}, &z);
    const std::string tag = name + " trial " + std::to_string(trial);
    o.require(r.exact_sum, tag + ": kappa + psi != phi");
    o.require(r.psi_centrally_valued.answer, tag + ": psi not centrally valued");
    if (is_zero_vector(f, Span<PrimeField>(x0))) {
      ++degenerate;
      o.require(r.x0_central_degenerate, tag + ": degeneracy not flagged");
    } else {
      ++nondegenerate;
      o.require(r.x0 == x0, tag + ": X0 not recovered");
      o.require(!r.x0_central_degenerate, tag + ": spurious degeneracy");
    }
  }
  o.require(degenerate > 0 && nondegenerate > 0, "trial mix is one-sided");
  return o;
}

// AC8 ---------------------------------------------------------------------

template <class F>
void biderivation_identity(Outcome& o, const std::string& name, const StructureAlgebra<F>& alg) {
  auto space = n_lie_derivation_space(alg, 2);
  o.require(!space.basis.empty(), name + ": empty 2-Lie-derivation space");
  for (std::size_t k = 0; k < space.basis.size(); ++k) {
    auto r = lemma32_identity_check(alg, space.basis[k]);
    o.require(r.answer, name + " element " + std::to_string(k) + ": " + r.witness);
  }
}

Outcome lemma_identity() {
  Outcome o;
  biderivation_identity(o, "T2/Q", corpus::t2(Rationals{}).algebra());
  biderivation_identity(o, "M2/GF7", corpus::full_matrix(PrimeField(7), 2).algebra());
  return o;
}

// AC9 ---------------------------------------------------------------------

template <class F>
void invariants_of(Outcome& o, const std::string& name, const GMAlgebra<F>& g) {
  const F& f = g.field();
  const auto& alg = g.algebra();
  const auto& e = g.e();
  const auto& ff = g.f();
  o.require(add(f, Span<F>(e), Span<F>(ff)) == alg.unit(), name + ": e + f != 1");
  o.require(alg.multiply(e, e) == e && alg.multiply(ff, ff) == ff, name + ": e or f not idempotent");
  o.require(is_zero_vector(f, Span<F>(alg.multiply(e, ff))) && is_zero_vector(f, Span<F>(alg.multiply(ff, e))),
            name + ": ef or fe nonzero");

  auto cd = center_data(g);
  o.require(cd.checks.passed(), name + ": center data check failed");
  o.require(cd.pi_a_image.dim() == cd.z_g.dim(), name + ": pi_A not injective on Z(G)");
  if (cd.eta) {
    const auto& za = cd.pi_a_image.basis();
    const auto& A = g.algebra_a();
    const auto& B = g.algebra_b();
    for (std::size_t i = 0; i < za.rows(); ++i)
      for (std::size_t j = 0; j < za.rows(); ++j) {
        auto a1 = za.row_vector(i), a2 = za.row_vector(j);
        auto lhs = cd.apply_eta(Span<F>(A.multiply(a1, a2)));
        auto rhs = B.multiply(cd.apply_eta(Span<F>(a1)), cd.apply_eta(Span<F>(a2)));
        o.require(lhs == rhs, name + ": eta not multiplicative");
      }
  } else {
    o.require(false, name + ": eta undefined");
  }

  auto inner = inner_derivation_space(alg);
  auto der = derivation_space(alg);
  auto lie = lie_derivation_space(alg);
  o.require(is_subspace_of(inner, der) && is_subspace_of(der, lie), name + ": Inner < Der < LieDer fails");
  o.require(inner.dim() == alg.dim() - cd.z_g.dim(), name + ": dim Inner != dim G - dim Z(G)");
}

Outcome invariants() {
  Outcome o;
  for (auto& [name, g] : corpus::five(Rationals{})) invariants_of(o, name + "/Q", g);
  for (auto& [name, g] : corpus::five(PrimeField(7))) invariants_of(o, name + "/GF7", g);
  return o;
}

struct Criterion {
  const char* label;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::set<std::string> known;
  for (int i = 1; i + 1 < argc; i += 2)
    if (std::string(argv[i]) == "--known-failure") known.insert(argv[i + 1]);

  const std::vector<Criterion> criteria{
      {"AC1 morita validation and perturbation fuzz", 5, morita_fuzz},
      {"AC2 structure dimensions vs oracle", 10, structure_dims},
      {"AC3 hypothesis checker", 10, hypotheses},
      {"AC4 3-Lie decomposition end to end", 300, end_to_end},
      {"AC5 slot restriction vs direct kernel", 30, slot_restriction},
      {"AC6 extremal existence equivalence", 10, extremal_equivalence},
      {"AC7 decomposition round trip over GF(101)", 60, round_trip},
      {"AC8 biderivation identity", 30, lemma_identity},
      {"AC9 eta and Pierce invariants", 5, invariants},
  };
  int unexpected = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o.ok = false;
      o.note = std::string("exception: ") + ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs > c.limit_s) {
      o.ok = false;
      std::ostringstream s;
      s << "exceeded " << c.limit_s << " s";
      o.note = s.str();
    }
    const std::string id = std::string(c.label).substr(0, 3);
    if (o.ok == known.contains(id)) ++unexpected;
    std::printf("%s  %s  (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.label, secs, o.ok ? "" : "  ", o.note.c_str());
  }
  std::fflush(stdout);
  return unexpected == 0 ? 0 : 1;
}
