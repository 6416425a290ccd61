#pragma once

// Builtin Morita contexts: full matrix algebras, block triangular algebras,
// and zero-pairing contexts, all with matrix-unit bases.

#include <string>
#include <string_view>

#include "gmalie/context.hpp"

namespace gmalie {

enum class BuiltinKind { FullMatrix, UpperTriangular, LowerTriangular, ZeroPairing };

std::string_view to_string(BuiltinKind k);
BuiltinKind parse_builtin_kind(std::string_view text);

struct BuiltinParams {
  BuiltinKind kind = BuiltinKind::FullMatrix;
  std::size_t r = 0;        // full matrix order
  std::size_t a_order = 1;  // A = M_{a_order}
  std::size_t b_order = 1;  // B = M_{b_order}
};

/// Context with A = M_p, B = M_q, M = p x q matrices and (optionally)
/// N = q x p matrices, all acting by matrix multiplication. With `pairing`
/// the pairings are matrix products, otherwise identically zero. Basis of
/// each block is its matrix units in row-major order.
template <class F>
MoritaContext<F> matrix_block_context(const F& f, std::size_t p, std::size_t q, bool with_n, bool pairing) {
  if (p == 0 || q == 0) throw DimensionError("matrix block orders must be positive");
  auto ctx = MoritaContext<F>::blank(f, matrix_algebra(f, p).table(), matrix_algebra(f, q).table(), p * q,
                                     with_n ? q * p : 0);
  const auto one = f.one();
  // M: E_ij (i < p, j < q) at i*q + j; N: E_ij (i < q, j < p) at i*p + j.
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t k = 0; k < p; ++k)
      for (std::size_t j = 0; j < q; ++j) ctx.left_m.accumulate(f, i * p + k, k * q + j, i * q + j, one);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t k = 0; k < q; ++k)
      for (std::size_t j = 0; j < q; ++j) ctx.right_m.accumulate(f, i * q + k, k * q + j, i * q + j, one);
  if (with_n) {
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t k = 0; k < q; ++k)
        for (std::size_t j = 0; j < p; ++j) ctx.left_n.accumulate(f, i * q + k, k * p + j, i * p + j, one);
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t k = 0; k < p; ++k)
        for (std::size_t j = 0; j < p; ++j) ctx.right_n.accumulate(f, i * p + k, k * p + j, i * p + j, one);
    if (pairing) {
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t k = 0; k < q; ++k)
          for (std::size_t j = 0; j < p; ++j) ctx.phi.accumulate(f, i * q + k, k * p + j, i * p + j, one);
      for (std::size_t i = 0; i < q; ++i)
        for (std::size_t k = 0; k < p; ++k)
          for (std::size_t j = 0; j < q; ++j) ctx.psi.accumulate(f, i * p + k, k * q + j, i * q + j, one);
    }
  }
  return ctx;
}

/// Builtin generator. Lower triangular algebras [[A, 0], [N, B]] are emitted
/// in the isomorphic upper orientation [[B, N], [0, A]] so that the nonzero
/// off-diagonal bimodule sits in the M slot, which must be faithful.
template <class F>
MoritaContext<F> generate_builtin(const BuiltinParams& params, const F& f) {
  switch (params.kind) {
    case BuiltinKind::FullMatrix:
      if (params.r < 2) throw DimensionError("full-matrix requires r >= 2, got " + std::to_string(params.r));
      return matrix_block_context(f, 1, params.r - 1, true, true);
    case BuiltinKind::UpperTriangular:
      return matrix_block_context(f, params.a_order, params.b_order, false, false);
    case BuiltinKind::LowerTriangular:
      return matrix_block_context(f, params.b_order, params.a_order, false, false);
    case BuiltinKind::ZeroPairing:
      return matrix_block_context(f, params.a_order, params.b_order, true, false);
  }
  throw Error("unknown builtin kind");
}

/// T(D, D, D): A = B = M = D acting on itself by multiplication, N = 0.
template <class F>
MoritaContext<F> triangular_over(const StructureAlgebra<F>& d) {
  const F& f = d.field();
  const std::size_t n = d.dim();
  auto ctx = MoritaContext<F>::blank(f, d.table(), d.table(), n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, v] : d.basis_product(i, j)) {
        ctx.left_m.accumulate(f, i, j, k, v);
        ctx.right_m.accumulate(f, i, j, k, v);
      }
  return ctx;
}

/// A = B = field, M = F^k with both actions by scalars, N = 0.
template <class F>
MoritaContext<F> scalar_module_context(const F& f, std::size_t k) {
  auto ctx = MoritaContext<F>::blank(f, field_algebra(f).table(), field_algebra(f).table(), k, 0);
  for (std::size_t j = 0; j < k; ++j) {
    ctx.left_m.accumulate(f, 0, j, j, f.one());
    ctx.right_m.accumulate(f, j, 0, j, f.one());
  }
  return ctx;
}

}  // namespace gmalie
