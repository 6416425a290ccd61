#pragma once

// Named test instances. Block-ordered global bases throughout.

#include <random>
#include <string>
#include <vector>

#include "gmalie/gmalie.hpp"

namespace corpus {

using namespace gmalie;

template <class F>
GMAlgebra<F> full_matrix(const F& f, std::size_t r) {
  return assemble(generate_builtin(BuiltinParams{BuiltinKind::FullMatrix, r}, f));
}

/// [[M_p, M_{p x q}], [0, M_q]]
template <class F>
GMAlgebra<F> upper(const F& f, std::size_t p, std::size_t q) {
  return assemble(generate_builtin(BuiltinParams{BuiltinKind::UpperTriangular, 0, p, q}, f));
}

/// T_2 = [[k, k], [0, k]], basis E11, E12, E22.
template <class F>
GMAlgebra<F> t2(const F& f) {
  return upper(f, 1, 1);
}

/// [[M_2, k^2], [k^2, k]] with both pairings zero.
template <class F>
GMAlgebra<F> zero_pairing(const F& f) {
  return assemble(generate_builtin(BuiltinParams{BuiltinKind::ZeroPairing, 0, 2, 1}, f));
}

template <class F>
struct Named {
  std::string name;
  GMAlgebra<F> g;
};

/// full_matrix(3), full_matrix(2), upper(M_2, k^2, k), T_2, zero_pairing.
template <class F>
std::vector<Named<F>> five(const F& f) {
  std::vector<Named<F>> out;
  out.push_back({"M3", full_matrix(f, 3)});
  out.push_back({"M2", full_matrix(f, 2)});
  out.push_back({"tri7", upper(f, 2, 1)});
  out.push_back({"T2", t2(f)});
  out.push_back({"zero_pairing", zero_pairing(f)});
  return out;
}

template <class F, class Rng>
Vector<F> random_vector(const F& f, std::size_t n, Rng& rng) {
  Vector<F> v(n);
  for (auto& x : v) x = f.random(rng);
  return v;
}

/// Random element of a subspace.
template <class F, class Rng>
Vector<F> random_in(const Subspace<F>& s, Rng& rng) {
  return s.combine(random_vector(s.field(), s.dim(), rng));
}

/// (x1, ..., xn) -> prod_k lambda_k(x_k) z
template <class F>
MultilinearMap<F> product_of_functionals(const F& f, const std::vector<Vector<F>>& lambdas, const Vector<F>& z) {
  const std::size_t d = z.size(), n = lambdas.size();
  MultilinearMap<F> out(f, d, n);
  for (std::uint64_t t = 0; t < out.tuple_count(); ++t) {
    auto tup = out.tuple_of(t);
    auto c = f.one();
    for (std::size_t k = 0; k < n && !f.is_zero(c); ++k) c = f.mul(c, lambdas[k][tup[k]]);
    if (f.is_zero(c)) continue;
    out.set(t, scaled(f, c, std::span<const typename F::value_type>(z)));
  }
  return out;
}

}  // namespace corpus
