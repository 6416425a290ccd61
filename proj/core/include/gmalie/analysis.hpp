#pragma once

// Structural invariants of algebras and generalized matrix algebras:
// centers, the isomorphism eta between the diagonal projections of Z(G),
// central ideals, derivation spaces, bimodule endomorphisms, special pairs,
// and the hypothesis checker for the n-Lie decomposition theorems.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "gmalie/budget.hpp"
#include "gmalie/context.hpp"

namespace gmalie {

// ---------------------------------------------------------------------------
// Centers

/// Z(alg) as the kernel of x -> ([x, b_i])_i.
template <class F>
Subspace<F> center(const StructureAlgebra<F>& alg) {
  const F& f = alg.field();
  const std::size_t d = alg.dim();
  Matrix<F> m(f, d * d, d);
  // Column x = b_k: [b_k, b_i] at rows i*d + t.
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i) {
      auto br = alg.basis_bracket(k, i);
      for (std::size_t t = 0; t < d; ++t) m(i * d + t, k) = br[t];
    }
  return kernel_of(m);
}

template <class F>
struct CenterData {
  Subspace<F> z_g;
  Subspace<F> z_a;
  Subspace<F> z_b;
  Subspace<F> pi_a_image;
  Subspace<F> pi_b_image;
  /// Row r is eta applied to canonical basis row r of pi_a_image, in B
  /// coordinates. Absent when pi_A restricted to Z(G) is not injective.
  std::optional<Matrix<F>> eta;
  CheckReport checks;

  /// eta(a) for a in pi_A(Z(G)); throws PreconditionError outside the image.
  Vector<F> apply_eta(std::span<const typename F::value_type> a) const {
    if (!eta) throw PreconditionError("eta is undefined", "pi_A restricted to Z(G) is not injective");
    auto coeffs = pi_a_image.coordinates(a);
    if (!coeffs) throw PreconditionError("eta applied outside pi_A(Z(G))", format_vector(pi_a_image.field(), a));
    Vector<F> out = zero_vector(pi_a_image.field(), eta->cols());
    for (std::size_t r = 0; r < coeffs->size(); ++r) add_scaled(pi_a_image.field(), out, (*coeffs)[r], eta->row(r));
    return out;
  }
};

/// Computes Z(G), Z(A), Z(B), both projections of Z(G) and eta, and checks
/// that eta is a well-defined multiplicative bijection with a m = m eta(a)
/// and n a = eta(a) n. A failed injectivity check leaves `eta` empty.
template <class F>
CenterData<F> center_data(const GMAlgebra<F>& g) {
  using Blk = BlockLayout::Block;
  using V = std::span<const typename F::value_type>;
  const F& f = g.field();
  const auto& ctx = g.context();
  const auto& L = g.layout();

  CenterData<F> out{center(g.algebra()),
                    center(g.algebra_a()),
                    center(g.algebra_b()),
                    Subspace<F>::zero(f, L.dim_a),
                    Subspace<F>::zero(f, L.dim_b),
                    std::nullopt,
                    {}};
  const auto& zg = out.z_g;
  const std::size_t k = zg.dim();

  std::vector<Vector<F>> a_parts, b_parts;
  std::string offdiag;
  for (std::size_t r = 0; r < k; ++r) {
    auto z = zg.basis_vector(r);
    a_parts.push_back(g.slice(Blk::A, z));
    b_parts.push_back(g.slice(Blk::B, z));
    auto m = g.slice(Blk::M, z);
    auto n = g.slice(Blk::N, z);
    if (offdiag.empty() && (!is_zero_vector(f, V(m)) || !is_zero_vector(f, V(n)))) offdiag = format_vector(f, V(z));
  }
  out.checks.add(Check::from_bool("center.diagonal", offdiag.empty(), "central element with off-diagonal part " + offdiag));
  out.pi_a_image = Subspace<F>::span(f, L.dim_a, a_parts);
  out.pi_b_image = Subspace<F>::span(f, L.dim_b, b_parts);

  const bool inj_a = out.pi_a_image.dim() == k;
  const bool inj_b = out.pi_b_image.dim() == k;
  out.checks.add(Check::from_bool("pi_a.injective", inj_a,
                                  "dim pi_A(Z(G)) = " + std::to_string(out.pi_a_image.dim()) + " < dim Z(G) = " +
                                      std::to_string(k)));
  out.checks.add(Check::from_bool("pi_b.injective", inj_b,
                                  "dim pi_B(Z(G)) = " + std::to_string(out.pi_b_image.dim()) + " < dim Z(G) = " +
                                      std::to_string(k)));
  if (!inj_a) return out;

  // Express each canonical basis row u_r of pi_A(Z(G)) through the a_parts,
  // then carry the same combination over to the b_parts.
  Matrix<F> a_cols(f, L.dim_a, k);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t t = 0; t < L.dim_a; ++t) a_cols(t, c) = a_parts[c][t];
  Matrix<F> eta(f, k, L.dim_b);
  for (std::size_t r = 0; r < k; ++r) {
    auto coeffs = solve_particular(a_cols, out.pi_a_image.basis().row(r));
    for (std::size_t c = 0; c < k; ++c) {
      for (std::size_t t = 0; t < L.dim_b; ++t) eta(r, t) = f.add(eta(r, t), f.mul((*coeffs)[c], b_parts[c][t]));
    }
  }
  out.eta = std::move(eta);
  out.checks.add(Check::from_bool("eta.invertible", inj_b && rank(*out.eta) == k, "eta has a nontrivial kernel"));

  const auto& A = g.algebra_a();
  const auto& B = g.algebra_b();
  std::string mult_witness;
  for (std::size_t r = 0; r < k && mult_witness.empty(); ++r)
    for (std::size_t s = 0; s < k; ++s) {
      auto ur = out.pi_a_image.basis_vector(r);
      auto us = out.pi_a_image.basis_vector(s);
      auto prod = A.multiply(ur, us);
      if (!out.pi_a_image.contains(prod)) {
        mult_witness = "product of basis rows " + format_tuple({r, s}) + " leaves pi_A(Z(G))";
        break;
      }
      auto lhs = out.apply_eta(prod);
      auto rhs = B.multiply(out.eta->row(r), out.eta->row(s));
      if (!vectors_equal(f, V(lhs), V(rhs))) {
        mult_witness = "eta(u_r u_s) != eta(u_r) eta(u_s) at " + format_tuple({r, s});
        break;
      }
    }
  out.checks.add(Check::from_bool("eta.multiplicative", mult_witness.empty(), mult_witness));

  std::string tw;
  for (std::size_t r = 0; r < k && tw.empty(); ++r) {
    auto u = out.pi_a_image.basis_vector(r);
    auto ev = out.eta->row_vector(r);
    for (std::size_t j = 0; j < L.dim_m && tw.empty(); ++j) {
      auto am = ctx.left_m.apply_left_dense(f, u, j);
      auto me = ctx.right_m.apply_right_dense(f, j, ev);
      if (!vectors_equal(f, V(am), V(me))) tw = "a m_" + std::to_string(j) + " != m_" + std::to_string(j) + " eta(a), a = row " + std::to_string(r);
    }
    for (std::size_t j = 0; j < L.dim_n && tw.empty(); ++j) {
      auto na = ctx.right_n.apply_right_dense(f, j, u);
      auto en = ctx.left_n.apply_left_dense(f, ev, j);
      if (!vectors_equal(f, V(na), V(en))) tw = "n_" + std::to_string(j) + " a != eta(a) n_" + std::to_string(j) + ", a = row " + std::to_string(r);
    }
  }
  out.checks.add(Check::from_bool("eta.intertwines", tw.empty(), tw));
  return out;
}

// ---------------------------------------------------------------------------
// Central ideals and torsion

template <class F>
struct CentralIdealResult {
  bool answer = false;
  /// Nonzero z in Z with alg * z inside Z; alg * z is then a central ideal.
  std::optional<Vector<F>> witness;
  /// {z in Z(alg) : b_i z in Z(alg) for all i}.
  Subspace<F> generators;
};

/// Decides whether alg has a nonzero central ideal. For central z the ideal
/// generated by z is alg * z, so one exists iff some nonzero central z has
/// b_i z central for every basis element.
template <class F>
CentralIdealResult<F> has_nonzero_central_ideal(const StructureAlgebra<F>& alg) {
  const F& f = alg.field();
  const std::size_t d = alg.dim();
  auto z = center(alg);
  const std::size_t k = z.dim();
  Matrix<F> m(f, d * d * d, k);
  for (std::size_t l = 0; l < k; ++l) {
    auto zl = z.basis_vector(l);
    for (std::size_t i = 0; i < d; ++i) {
      auto bz = alg.multiply(alg.basis(i), zl);
      for (std::size_t j = 0; j < d; ++j) {
        auto br = alg.bracket(bz, alg.basis(j));
        for (std::size_t t = 0; t < d; ++t) m((i * d + j) * d + t, l) = br[t];
      }
    }
  }
  auto coeff_space = kernel_of(m);
  std::vector<Vector<F>> gens;
  for (std::size_t r = 0; r < coeff_space.dim(); ++r) gens.push_back(z.combine(coeff_space.basis().row(r)));
  CentralIdealResult<F> out{!gens.empty(), std::nullopt, Subspace<F>::span(f, d, gens)};
  if (out.answer) out.witness = out.generators.basis_vector(0);
  return out;
}

template <class F>
struct TorsionResult {
  Status status = Status::Pass;
  std::optional<Vector<F>> alpha;      // singular central element
  std::optional<Vector<F>> annihilated;  // nonzero a with alpha a = 0
  std::string note;
};

/// Deterministic seed for the random central combinations probed below.
inline constexpr std::uint64_t kTorsionProbeSeed = 0x9e3779b97f4a7c15ULL;
inline constexpr std::size_t kTorsionProbeCount = 64;
inline constexpr std::uint64_t kTorsionEnumerationLimit = 1'000'000;

/// Condition "alpha a = 0 with alpha central and a != 0 forces alpha = 0",
/// i.e. every nonzero central alpha has injective left multiplication.
/// dim Z(G) = 1 is decided exactly. Otherwise basis elements and 64 seeded
/// combinations are probed; a singular one is a witnessed failure. With no
/// failure the answer is pass only over GF(p) when all p^dim Z(G) <= 10^6
/// central elements were enumerated, and unknown otherwise.
template <class F>
TorsionResult<F> torsion_action_check(const GMAlgebra<F>& g, const Subspace<F>& z_g) {
  const F& f = g.field();
  const auto& alg = g.algebra();
  const std::size_t k = z_g.dim();
  TorsionResult<F> out;

  auto singular = [&](const Vector<F>& alpha) -> bool {
    auto ker = kernel_of(alg.left_multiplication(alpha));
    if (ker.is_zero()) return false;
    out.status = Status::Fail;
    out.alpha = alpha;
    out.annihilated = ker.basis_vector(0);
    return true;
  };

  if (k == 0) {
    out.note = "Z(G) = 0";
    return out;
  }
  for (std::size_t r = 0; r < k; ++r) {
    if (singular(z_g.basis_vector(r))) return out;
  }
  if (k == 1) {
    out.note = "dim Z(G) = 1, decided exactly";
    return out;
  }

  std::mt19937_64 rng(kTorsionProbeSeed);
  for (std::size_t probe = 0; probe < kTorsionProbeCount; ++probe) {
    Vector<F> coeffs(k);
    for (auto& c : coeffs) c = f.random(rng);
    if (is_zero_vector(f, std::span<const typename F::value_type>(coeffs))) continue;
    if (singular(z_g.combine(coeffs))) return out;
  }

  if constexpr (std::is_same_v<F, PrimeField>) {
    const std::uint64_t p = f.modulus();
    if (saturating_pow(p, k) <= kTorsionEnumerationLimit) {
      // One representative per line: leading nonzero coefficient equal to 1.
      Vector<F> coeffs(k, 0);
      for (std::size_t lead = 0; lead < k; ++lead) {
        std::fill(coeffs.begin(), coeffs.end(), 0);
        coeffs[lead] = 1;
        const std::uint64_t tail = saturating_pow(p, k - lead - 1);
        for (std::uint64_t code = 0; code < tail; ++code) {
          std::uint64_t x = code;
          for (std::size_t i = lead + 1; i < k; ++i) {
            coeffs[i] = static_cast<std::uint32_t>(x % p);
            x /= p;
          }
          if (singular(z_g.combine(coeffs))) return out;
        }
      }
      out.note = "all central elements enumerated";
      return out;
    }
  }
  out.status = Status::Unknown;
  out.note = "dim Z(G) = " + std::to_string(k) + ": no singular central element among basis and " +
             std::to_string(kTorsionProbeCount) + " seeded probes; exhaustive check not available";
  return out;
}

// ---------------------------------------------------------------------------
// Derivation spaces. A linear map D on a d-dimensional algebra is stored as a
// vector of length d*d with D[o][m] (coordinate o of D(b_m)) at o*d + m.

template <class F>
Matrix<F> linear_map_matrix(const F& f, std::size_t d, std::span<const typename F::value_type> v) {
  if (v.size() != d * d) throw DimensionError("linear map vector has wrong length");
  Matrix<F> m(f, d, d);
  for (std::size_t o = 0; o < d; ++o)
    for (std::size_t c = 0; c < d; ++c) m(o, c) = v[o * d + c];
  return m;
}

namespace detail {

// Rows of D(P(b_i, b_j)) - P(D b_i, b_j) - P(b_i, D b_j) = 0 over all i, j
// for the bilinear law P (product or bracket) with constants `table`.
template <class F>
RowReducer<F> leibniz_system(const F& f, const BilinearTable<F>& table) {
  const std::size_t d = table.out_dim;
  RowReducer<F> red(f, d * d);
  Vector<F> row = zero_vector(f, d * d);
  const auto minus_one = f.neg(f.one());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t t = 0; t < d; ++t) {
        std::fill(row.begin(), row.end(), f.zero());
        for (const auto& [k, c] : table.at(i, j)) row[t * d + k] = f.add(row[t * d + k], c);
        for (std::size_t s = 0; s < d; ++s) {
          for (const auto& [o, c] : table.at(s, j))
            if (o == t) row[s * d + i] = f.add(row[s * d + i], f.mul(minus_one, c));
          for (const auto& [o, c] : table.at(i, s))
            if (o == t) row[s * d + j] = f.add(row[s * d + j], f.mul(minus_one, c));
        }
        red.add_row(to_sparse(f, std::span<const typename F::value_type>(row)));
      }
  return red;
}

template <class F>
BilinearTable<F> bracket_table(const StructureAlgebra<F>& alg) {
  const F& f = alg.field();
  const std::size_t d = alg.dim();
  BilinearTable<F> t(d, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) t.at(i, j) = to_sparse(f, std::span<const typename F::value_type>(alg.basis_bracket(i, j)));
  return t;
}

}  // namespace detail

/// Der(alg) inside End(alg), as a subspace of F^(d*d).
template <class F>
Subspace<F> derivation_space(const StructureAlgebra<F>& alg) {
  return detail::leibniz_system(alg.field(), alg.table().product).kernel();
}

/// Lie derivations: D([x, y]) = [D x, y] + [x, D y].
template <class F>
Subspace<F> lie_derivation_space(const StructureAlgebra<F>& alg) {
  return detail::leibniz_system(alg.field(), detail::bracket_table(alg)).kernel();
}

/// Row space of the Lie-Leibniz constraints: a map lies in LieDer(alg) iff
/// it is orthogonal to every row.
template <class F>
Subspace<F> lie_derivation_constraints(const StructureAlgebra<F>& alg) {
  return detail::leibniz_system(alg.field(), detail::bracket_table(alg)).row_space();
}

template <class F>
Subspace<F> derivation_constraints(const StructureAlgebra<F>& alg) {
  return detail::leibniz_system(alg.field(), alg.table().product).row_space();
}

/// span{ad_{b_i}} with ad_x(y) = [x, y].
template <class F>
Subspace<F> inner_derivation_space(const StructureAlgebra<F>& alg) {
  const F& f = alg.field();
  const std::size_t d = alg.dim();
  std::vector<Vector<F>> maps;
  for (std::size_t i = 0; i < d; ++i) {
    Vector<F> v = zero_vector(f, d * d);
    for (std::size_t m = 0; m < d; ++m) {
      auto br = alg.basis_bracket(i, m);
      for (std::size_t o = 0; o < d; ++o) v[o * d + m] = br[o];
    }
    maps.push_back(std::move(v));
  }
  return Subspace<F>::span(f, d * d, maps);
}

template <class F>
bool all_derivations_inner(const StructureAlgebra<F>& alg) {
  return inner_derivation_space(alg) == derivation_space(alg);
}

// ---------------------------------------------------------------------------
// Bimodule endomorphisms and special pairs. F in End(M) is stored as
// F[o][m] at o*dim_m + m; a pair (F, E) is the concatenation F ++ E.

template <class F>
struct PairSpaces {
  Subspace<F> hom_m;           // (A, B)-bimodule endomorphisms of M
  Subspace<F> hom_n;           // (B, A)-bimodule endomorphisms of N
  Subspace<F> special_pairs;   // in End(M) + End(N)
  Subspace<F> standard_pairs;  // image of Z(A) + Z(B)
  bool standard_within_special = false;
  bool all_standard() const { return standard_pairs == special_pairs; }
};

namespace detail {

// Rows expressing X(u v) = u X(v) for a left action table (U x V -> V) on
// unknowns X[o][v] stored at offset + o*dv + v.
template <class F>
void add_left_linearity(RowReducer<F>& red, const F& f, const BilinearTable<F>& act, std::size_t offset) {
  const std::size_t du = act.left_dim, dv = act.right_dim;
  Vector<F> row = zero_vector(f, red.cols());
  for (std::size_t i = 0; i < du; ++i)
    for (std::size_t j = 0; j < dv; ++j)
      for (std::size_t t = 0; t < dv; ++t) {
        std::fill(row.begin(), row.end(), f.zero());
        // X(u_i v_j)_t = sum_k act(i, j)_k X[t][k]
        for (const auto& [k, c] : act.at(i, j)) row[offset + t * dv + k] = f.add(row[offset + t * dv + k], c);
        // (u_i X(v_j))_t = sum_s X[s][j] act(i, s)_t
        for (std::size_t s = 0; s < dv; ++s)
          for (const auto& [o, c] : act.at(i, s))
            if (o == t) row[offset + s * dv + j] = f.sub(row[offset + s * dv + j], c);
        red.add_row(to_sparse(f, std::span<const typename F::value_type>(row)));
      }
}

// Rows expressing X(v u) = X(v) u for a right action table (V x U -> V).
template <class F>
void add_right_linearity(RowReducer<F>& red, const F& f, const BilinearTable<F>& act, std::size_t offset) {
  const std::size_t dv = act.left_dim, du = act.right_dim;
  Vector<F> row = zero_vector(f, red.cols());
  for (std::size_t j = 0; j < dv; ++j)
    for (std::size_t i = 0; i < du; ++i)
      for (std::size_t t = 0; t < dv; ++t) {
        std::fill(row.begin(), row.end(), f.zero());
        for (const auto& [k, c] : act.at(j, i)) row[offset + t * dv + k] = f.add(row[offset + t * dv + k], c);
        for (std::size_t s = 0; s < dv; ++s)
          for (const auto& [o, c] : act.at(s, i))
            if (o == t) row[offset + s * dv + j] = f.sub(row[offset + s * dv + j], c);
        red.add_row(to_sparse(f, std::span<const typename F::value_type>(row)));
      }
}

}  // namespace detail

template <class F>
PairSpaces<F> pair_spaces(const GMAlgebra<F>& g) {
  const F& f = g.field();
  const auto& c = g.context();
  const std::size_t dm = c.dim_m, dn = c.dim_n;
  const std::size_t fm = dm * dm, fn = dn * dn;

  RowReducer<F> hm(f, fm);
  detail::add_left_linearity(hm, f, c.left_m, 0);
  detail::add_right_linearity(hm, f, c.right_m, 0);
  RowReducer<F> hn(f, fn);
  detail::add_left_linearity(hn, f, c.left_n, 0);
  detail::add_right_linearity(hn, f, c.right_n, 0);

  RowReducer<F> sp(f, fm + fn);
  detail::add_left_linearity(sp, f, c.left_m, 0);
  detail::add_right_linearity(sp, f, c.right_m, 0);
  detail::add_left_linearity(sp, f, c.left_n, fm);
  detail::add_right_linearity(sp, f, c.right_n, fm);
  Vector<F> row = zero_vector(f, fm + fn);
  // phi(F(m_i), n_j) + phi(m_i, E(n_j)) = 0, coordinate t of A.
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t j = 0; j < dn; ++j)
      for (std::size_t t = 0; t < c.dim_a(); ++t) {
        std::fill(row.begin(), row.end(), f.zero());
        for (std::size_t s = 0; s < dm; ++s)
          for (const auto& [o, v] : c.phi.at(s, j))
            if (o == t) row[s * dm + i] = f.add(row[s * dm + i], v);
        for (std::size_t s = 0; s < dn; ++s)
          for (const auto& [o, v] : c.phi.at(i, s))
            if (o == t) row[fm + s * dn + j] = f.add(row[fm + s * dn + j], v);
        sp.add_row(to_sparse(f, std::span<const typename F::value_type>(row)));
      }
  // psi(n_j, F(m_i)) + psi(E(n_j), m_i) = 0, coordinate t of B.
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t j = 0; j < dn; ++j)
      for (std::size_t t = 0; t < c.dim_b(); ++t) {
        std::fill(row.begin(), row.end(), f.zero());
        for (std::size_t s = 0; s < dm; ++s)
          for (const auto& [o, v] : c.psi.at(j, s))
            if (o == t) row[s * dm + i] = f.add(row[s * dm + i], v);
        for (std::size_t s = 0; s < dn; ++s)
          for (const auto& [o, v] : c.psi.at(s, i))
            if (o == t) row[fm + s * dn + j] = f.add(row[fm + s * dn + j], v);
        sp.add_row(to_sparse(f, std::span<const typename F::value_type>(row)));
      }

  // Standard pairs: m -> w0 m + m w1, n -> -n w0 - w1 n.
  std::vector<Vector<F>> std_pairs;
  auto za = center(g.algebra_a());
  auto zb = center(g.algebra_b());
  for (std::size_t r = 0; r < za.dim(); ++r) {
    auto w = za.basis_vector(r);
    Vector<F> v = zero_vector(f, fm + fn);
    for (std::size_t j = 0; j < dm; ++j) {
      auto img = c.left_m.apply_left_dense(f, w, j);
      for (std::size_t t = 0; t < dm; ++t) v[t * dm + j] = img[t];
    }
    for (std::size_t j = 0; j < dn; ++j) {
      auto img = c.right_n.apply_right_dense(f, j, w);
      for (std::size_t t = 0; t < dn; ++t) v[fm + t * dn + j] = f.neg(img[t]);
    }
    std_pairs.push_back(std::move(v));
  }
  for (std::size_t r = 0; r < zb.dim(); ++r) {
    auto w = zb.basis_vector(r);
    Vector<F> v = zero_vector(f, fm + fn);
    for (std::size_t j = 0; j < dm; ++j) {
      auto img = c.right_m.apply_right_dense(f, j, w);
      for (std::size_t t = 0; t < dm; ++t) v[t * dm + j] = img[t];
    }
    for (std::size_t j = 0; j < dn; ++j) {
      auto img = c.left_n.apply_left_dense(f, w, j);
      for (std::size_t t = 0; t < dn; ++t) v[fm + t * dn + j] = f.neg(img[t]);
    }
    std_pairs.push_back(std::move(v));
  }

  PairSpaces<F> out{hm.kernel(), hn.kernel(), sp.kernel(), Subspace<F>::span(f, fm + fn, std_pairs), false};
  out.standard_within_special = is_subspace_of(out.standard_pairs, out.special_pairs);
  return out;
}

// ---------------------------------------------------------------------------
// Hypotheses

/// The two hypothesis sets of the decomposition theorems. They share
/// conditions (1), (2) and (5); CentralTorsion uses the torsion-freeness of
/// the center and the noncommutativity fallback as (3) and (4), while
/// ModuleAnnihilator asks that no nonzero n (resp. m) is killed by M (resp. N)
/// from both sides.
enum class HypothesisSet { CentralTorsion, ModuleAnnihilator };

std::string_view to_string(HypothesisSet s);

struct HypothesisReport {
  HypothesisSet set = HypothesisSet::CentralTorsion;
  std::array<Check, 5> conditions;
  bool all_pass() const {
    for (const auto& c : conditions)
      if (c.status != Status::Pass) return false;
    return true;
  }
};

/// span{phi(m_i, n_j)} inside A.
template <class F>
Subspace<F> mn_span(const MoritaContext<F>& c) {
  std::vector<Vector<F>> v;
  for (std::size_t i = 0; i < c.dim_m; ++i)
    for (std::size_t j = 0; j < c.dim_n; ++j) v.push_back(c.phi.apply_basis(c.field, i, j));
  return Subspace<F>::span(c.field, c.dim_a(), v);
}

/// span{psi(n_j, m_i)} inside B.
template <class F>
Subspace<F> nm_span(const MoritaContext<F>& c) {
  std::vector<Vector<F>> v;
  for (std::size_t j = 0; j < c.dim_n; ++j)
    for (std::size_t i = 0; i < c.dim_m; ++i) v.push_back(c.psi.apply_basis(c.field, j, i));
  return Subspace<F>::span(c.field, c.dim_b(), v);
}

/// {n in N : phi(m, n) = 0 and psi(n, m) = 0 for all m}.
template <class F>
Subspace<F> n_killed_by_m(const MoritaContext<F>& c) {
  const F& f = c.field;
  Matrix<F> m(f, c.dim_m * (c.dim_a() + c.dim_b()), c.dim_n);
  for (std::size_t i = 0; i < c.dim_m; ++i)
    for (std::size_t s = 0; s < c.dim_n; ++s) {
      for (const auto& [t, v] : c.phi.at(i, s)) m(i * (c.dim_a() + c.dim_b()) + t, s) = v;
      for (const auto& [t, v] : c.psi.at(s, i)) m(i * (c.dim_a() + c.dim_b()) + c.dim_a() + t, s) = v;
    }
  return kernel_of(m);
}

/// {m in M : psi(n, m) = 0 and phi(m, n) = 0 for all n}.
template <class F>
Subspace<F> m_killed_by_n(const MoritaContext<F>& c) {
  const F& f = c.field;
  Matrix<F> m(f, c.dim_n * (c.dim_a() + c.dim_b()), c.dim_m);
  for (std::size_t j = 0; j < c.dim_n; ++j)
    for (std::size_t s = 0; s < c.dim_m; ++s) {
      for (const auto& [t, v] : c.phi.at(s, j)) m(j * (c.dim_a() + c.dim_b()) + t, s) = v;
      for (const auto& [t, v] : c.psi.at(j, s)) m(j * (c.dim_a() + c.dim_b()) + c.dim_a() + t, s) = v;
    }
  return kernel_of(m);
}

template <class F>
HypothesisReport check_hypotheses(const GMAlgebra<F>& g, HypothesisSet set) {
  const F& f = g.field();
  const auto& c = g.context();
  HypothesisReport rep;
  rep.set = set;
  auto cd = center_data(g);

  // (1) pi_A(Z(G)) = Z(A) and pi_B(Z(G)) = Z(B)
  {
    std::string w;
    if (!(cd.pi_a_image == cd.z_a))
      w = "dim pi_A(Z(G)) = " + std::to_string(cd.pi_a_image.dim()) + ", dim Z(A) = " + std::to_string(cd.z_a.dim());
    if (!(cd.pi_b_image == cd.z_b)) {
      if (!w.empty()) w += "; ";
      w += "dim pi_B(Z(G)) = " + std::to_string(cd.pi_b_image.dim()) + ", dim Z(B) = " + std::to_string(cd.z_b.dim());
    }
    rep.conditions[0] = Check::from_bool("(1) center projections", w.empty(), w);
  }

  // (2) A or B has no nonzero central ideal
  {
    auto ia = has_nonzero_central_ideal(g.algebra_a());
    auto ib = has_nonzero_central_ideal(g.algebra_b());
    const bool ok = !ia.answer || !ib.answer;
    std::string w;
    if (!ok) {
      w = "A has central ideal A*z, z = " + format_vector(f, std::span<const typename F::value_type>(*ia.witness)) +
          "; B has central ideal B*z, z = " + format_vector(f, std::span<const typename F::value_type>(*ib.witness));
    }
    rep.conditions[1] = Check::from_bool("(2) central ideals", ok, w);
  }

  if (set == HypothesisSet::CentralTorsion) {
    auto t = torsion_action_check(g, cd.z_g);
    std::string w = t.note;
    if (t.status == Status::Fail) {
      w = "alpha = " + format_vector(f, std::span<const typename F::value_type>(*t.alpha)) +
          " annihilates a = " + format_vector(f, std::span<const typename F::value_type>(*t.annihilated));
    }
    rep.conditions[2] = Check{"(3) central torsion", t.status, w};

    const bool mn_zero = mn_span(c).is_zero() && nm_span(c).is_zero();
    const bool noncomm = !is_commutative(g.algebra_a()) || !is_commutative(g.algebra_b());
    rep.conditions[3] = Check::from_bool("(4) noncommutativity when MN = 0 = NM", !mn_zero || noncomm,
                                         "MN = 0 = NM and both A and B are commutative");
  } else {
    auto kn = n_killed_by_m(c);
    rep.conditions[2] = Check::from_bool(
        "(3) Mn = 0 = nM implies n = 0", kn.is_zero(),
        kn.is_zero() ? "" : "n = " + format_vector(f, kn.basis().row(0)));
    auto km = m_killed_by_n(c);
    rep.conditions[3] = Check::from_bool(
        "(4) Nm = 0 = mN implies m = 0", km.is_zero(),
        km.is_zero() ? "" : "m = " + format_vector(f, km.basis().row(0)));
  }

  // (5) every special pair has standard form
  {
    auto ps = pair_spaces(g);
    const bool ok = ps.standard_within_special && ps.all_standard();
    std::string w;
    if (!ps.standard_within_special) {
      w = "a standard pair violates the special-pair equations";
    } else if (!ok) {
      w = "dim special = " + std::to_string(ps.special_pairs.dim()) + " > dim standard = " +
          std::to_string(ps.standard_pairs.dim());
    }
    rep.conditions[4] = Check::from_bool("(5) special pairs standard", ok, w);
  }
  return rep;
}

}  // namespace gmalie
