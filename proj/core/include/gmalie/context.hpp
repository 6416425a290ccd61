#pragma once

// Morita contexts (A, B, M, N, phi, psi) and the generalized matrix algebra
//
//     G = [ A  M ]
//         [ N  B ]
//
// they assemble into. Global basis order is always A-block, M-block,
// N-block, B-block.

#include <optional>
#include <string>

#include "gmalie/algebra.hpp"

namespace gmalie {

template <class F>
struct MoritaContext {
  F field;
  AlgebraTable<F> a;
  AlgebraTable<F> b;
  std::size_t dim_m = 0;
  std::size_t dim_n = 0;
  BilinearTable<F> left_m;   // A x M -> M
  BilinearTable<F> right_m;  // M x B -> M
  BilinearTable<F> left_n;   // B x N -> N
  BilinearTable<F> right_n;  // N x A -> N
  BilinearTable<F> phi;      // M x N -> A
  BilinearTable<F> psi;      // N x M -> B

  std::size_t dim_a() const { return a.dim(); }
  std::size_t dim_b() const { return b.dim(); }

  /// Empty tables of the right shapes for the given block dimensions.
  static MoritaContext blank(const F& f, AlgebraTable<F> a, AlgebraTable<F> b, std::size_t dim_m, std::size_t dim_n) {
    const std::size_t da = a.dim(), db = b.dim();
    return MoritaContext{f,
                         std::move(a),
                         std::move(b),
                         dim_m,
                         dim_n,
                         BilinearTable<F>(da, dim_m, dim_m),
                         BilinearTable<F>(dim_m, db, dim_m),
                         BilinearTable<F>(db, dim_n, dim_n),
                         BilinearTable<F>(dim_n, da, dim_n),
                         BilinearTable<F>(dim_m, dim_n, da),
                         BilinearTable<F>(dim_n, dim_m, db)};
  }
};

/// Offsets of the four blocks inside the global basis.
struct BlockLayout {
  std::size_t dim_a = 0, dim_m = 0, dim_n = 0, dim_b = 0;

  std::size_t offset_a() const { return 0; }
  std::size_t offset_m() const { return dim_a; }
  std::size_t offset_n() const { return dim_a + dim_m; }
  std::size_t offset_b() const { return dim_a + dim_m + dim_n; }
  std::size_t total() const { return dim_a + dim_m + dim_n + dim_b; }

  enum class Block { A, M, N, B };
  Block block_of(std::size_t i) const {
    if (i < offset_m()) return Block::A;
    if (i < offset_n()) return Block::M;
    if (i < offset_b()) return Block::N;
    return Block::B;
  }
};

namespace detail {

template <class F>
bool same(const F& f, const Vector<F>& x, const Vector<F>& y) {
  return vectors_equal(f, std::span<const typename F::value_type>(x), std::span<const typename F::value_type>(y));
}

// Runs `body(i, j, k)` over a 3-d index box until it returns a witness.
template <class Body>
std::string first_witness(std::size_t n0, std::size_t n1, std::size_t n2, Body&& body) {
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n1; ++j)
      for (std::size_t k = 0; k < n2; ++k)
        if (!body(i, j, k)) return format_tuple({i, j, k});
  return {};
}

template <class F>
bool tables_shaped(const MoritaContext<F>& c) {
  const std::size_t da = c.dim_a(), db = c.dim_b(), dm = c.dim_m, dn = c.dim_n;
  auto shaped = [](const BilinearTable<F>& t, std::size_t l, std::size_t r, std::size_t o) {
    return t.left_dim == l && t.right_dim == r && t.out_dim == o && t.well_formed();
  };
  return shaped(c.left_m, da, dm, dm) && shaped(c.right_m, dm, db, dm) && shaped(c.left_n, db, dn, dn) &&
         shaped(c.right_n, dn, da, dn) && shaped(c.phi, dm, dn, da) && shaped(c.psi, dn, dm, db) &&
         c.a.unit.size() == da && c.b.unit.size() == db;
}

}  // namespace detail

/// Kernel of a -> (a m_j)_j; zero iff M is faithful as a left A-module.
template <class F>
Subspace<F> left_annihilator_of_m(const MoritaContext<F>& c) {
  const F& f = c.field;
  Matrix<F> m(f, c.dim_m * c.dim_m, c.dim_a());
  for (std::size_t j = 0; j < c.dim_m; ++j)
    for (std::size_t i = 0; i < c.dim_a(); ++i)
      for (const auto& [k, v] : c.left_m.at(i, j)) m(j * c.dim_m + k, i) = v;
  return kernel_of(m);
}

/// Kernel of b -> (m_i b)_i; zero iff M is faithful as a right B-module.
template <class F>
Subspace<F> right_annihilator_of_m(const MoritaContext<F>& c) {
  const F& f = c.field;
  Matrix<F> m(f, c.dim_m * c.dim_m, c.dim_b());
  for (std::size_t i = 0; i < c.dim_m; ++i)
    for (std::size_t j = 0; j < c.dim_b(); ++j)
      for (const auto& [k, v] : c.right_m.at(i, j)) m(i * c.dim_m + k, j) = v;
  return kernel_of(m);
}

/// Every Morita-context axiom on basis tuples: both algebras, bimodule laws
/// for M and N, linearity and balance of the pairings, the two associativity
/// diagrams, M nonzero and faithful on both sides.
template <class F>
CheckReport validate_context(const MoritaContext<F>& c) {
  using detail::first_witness;
  using detail::same;
  CheckReport report;
  const F& f = c.field;

  auto ra = validate_algebra(c.a);
  auto rb = validate_algebra(c.b);
  for (const auto& chk : ra.checks()) report.add({"A." + chk.name, chk.status, chk.witness});
  for (const auto& chk : rb.checks()) report.add({"B." + chk.name, chk.status, chk.witness});
  const bool fields_ok = c.a.field == f && c.b.field == f;
  report.add(Check::from_bool("field", fields_ok, "A, B and the context disagree on the scalar field"));
  const bool shaped = ra.find("shape")->status == Status::Pass && rb.find("shape")->status == Status::Pass &&
                      detail::tables_shaped(c);
  report.add(Check::from_bool("shape", shaped, "action or pairing table dimensions out of range"));
  if (!shaped || !fields_ok) return report;

  const std::size_t da = c.dim_a(), db = c.dim_b(), dm = c.dim_m, dn = c.dim_n;
  auto A = [&](std::size_t i, std::size_t j) { return c.a.product.apply_basis(f, i, j); };
  auto B = [&](std::size_t i, std::size_t j) { return c.b.product.apply_basis(f, i, j); };

  // M as an (A, B)-bimodule.
  CheckReport laws;
  auto law = [&](std::string name, std::string witness) {
    laws.add(Check::from_bool(std::move(name), witness.empty(), witness.empty() ? "" : "basis tuple " + witness));
  };
  law("M.left_assoc", first_witness(da, da, dm, [&](auto i, auto j, auto k) {
        return same(f, c.left_m.apply_left_dense(f, A(i, j), k), c.left_m.apply_right_dense(f, i, c.left_m.apply_basis(f, j, k)));
      }));
  law("M.right_assoc", first_witness(dm, db, db, [&](auto i, auto j, auto k) {
        return same(f, c.right_m.apply_right_dense(f, i, B(j, k)), c.right_m.apply_left_dense(f, c.right_m.apply_basis(f, i, j), k));
      }));
  law("M.middle_assoc", first_witness(da, dm, db, [&](auto i, auto j, auto k) {
        return same(f, c.right_m.apply_left_dense(f, c.left_m.apply_basis(f, i, j), k),
                    c.left_m.apply_right_dense(f, i, c.right_m.apply_basis(f, j, k)));
      }));
  law("M.left_unit", first_witness(dm, 1, 1, [&](auto j, auto, auto) {
        return same(f, c.left_m.apply_left_dense(f, c.a.unit, j), unit_vector(f, dm, j));
      }));
  law("M.right_unit", first_witness(dm, 1, 1, [&](auto j, auto, auto) {
        return same(f, c.right_m.apply_right_dense(f, j, c.b.unit), unit_vector(f, dm, j));
      }));

  // N as a (B, A)-bimodule.
  law("N.left_assoc", first_witness(db, db, dn, [&](auto i, auto j, auto k) {
        return same(f, c.left_n.apply_left_dense(f, B(i, j), k), c.left_n.apply_right_dense(f, i, c.left_n.apply_basis(f, j, k)));
      }));
  law("N.right_assoc", first_witness(dn, da, da, [&](auto i, auto j, auto k) {
        return same(f, c.right_n.apply_right_dense(f, i, A(j, k)), c.right_n.apply_left_dense(f, c.right_n.apply_basis(f, i, j), k));
      }));
  law("N.middle_assoc", first_witness(db, dn, da, [&](auto i, auto j, auto k) {
        return same(f, c.right_n.apply_left_dense(f, c.left_n.apply_basis(f, i, j), k),
                    c.left_n.apply_right_dense(f, i, c.right_n.apply_basis(f, j, k)));
      }));
  law("N.left_unit", first_witness(dn, 1, 1, [&](auto j, auto, auto) {
        return same(f, c.left_n.apply_left_dense(f, c.b.unit, j), unit_vector(f, dn, j));
      }));
  law("N.right_unit", first_witness(dn, 1, 1, [&](auto j, auto, auto) {
        return same(f, c.right_n.apply_right_dense(f, j, c.a.unit), unit_vector(f, dn, j));
      }));

  // phi : M (x)_B N -> A is an A-bimodule map and B-balanced.
  law("phi.left_linear", first_witness(da, dm, dn, [&](auto i, auto j, auto k) {
        return same(f, c.phi.apply_left_dense(f, c.left_m.apply_basis(f, i, j), k),
                    c.a.product.apply_right_dense(f, i, c.phi.apply_basis(f, j, k)));
      }));
  law("phi.right_linear", first_witness(dm, dn, da, [&](auto i, auto j, auto k) {
        return same(f, c.phi.apply_right_dense(f, i, c.right_n.apply_basis(f, j, k)),
                    c.a.product.apply_left_dense(f, c.phi.apply_basis(f, i, j), k));
      }));
  law("phi.balanced", first_witness(dm, db, dn, [&](auto i, auto j, auto k) {
        return same(f, c.phi.apply_left_dense(f, c.right_m.apply_basis(f, i, j), k),
                    c.phi.apply_right_dense(f, i, c.left_n.apply_basis(f, j, k)));
      }));

  // psi : N (x)_A M -> B is a B-bimodule map and A-balanced.
  law("psi.left_linear", first_witness(db, dn, dm, [&](auto i, auto j, auto k) {
        return same(f, c.psi.apply_left_dense(f, c.left_n.apply_basis(f, i, j), k),
                    c.b.product.apply_right_dense(f, i, c.psi.apply_basis(f, j, k)));
      }));
  law("psi.right_linear", first_witness(dn, dm, db, [&](auto i, auto j, auto k) {
        return same(f, c.psi.apply_right_dense(f, i, c.right_m.apply_basis(f, j, k)),
                    c.b.product.apply_left_dense(f, c.psi.apply_basis(f, i, j), k));
      }));
  law("psi.balanced", first_witness(dn, da, dm, [&](auto i, auto j, auto k) {
        return same(f, c.psi.apply_left_dense(f, c.right_n.apply_basis(f, i, j), k),
                    c.psi.apply_right_dense(f, i, c.left_m.apply_basis(f, j, k)));
      }));

  // phi(m (x) n) m' = m psi(n (x) m') and psi(n (x) m) n' = n phi(m (x) n').
  law("morita.mnm", first_witness(dm, dn, dm, [&](auto i, auto j, auto k) {
        return same(f, c.left_m.apply_left_dense(f, c.phi.apply_basis(f, i, j), k),
                    c.right_m.apply_right_dense(f, i, c.psi.apply_basis(f, j, k)));
      }));
  law("morita.nmn", first_witness(dn, dm, dn, [&](auto i, auto j, auto k) {
        return same(f, c.left_n.apply_left_dense(f, c.psi.apply_basis(f, i, j), k),
                    c.right_n.apply_right_dense(f, i, c.phi.apply_basis(f, j, k)));
      }));
  report.append(laws);

  report.add(Check::from_bool("M.nonzero", dm > 0, "dim M = 0; M must be a faithful nonzero bimodule"));
  if (dm > 0) {
    auto la = left_annihilator_of_m(c);
    report.add(Check::from_bool("M.faithful_left", la.is_zero(),
                                "a = " + (la.is_zero() ? std::string() : format_vector(f, la.basis().row(0))) +
                                    " annihilates M"));
    auto rb_ann = right_annihilator_of_m(c);
    report.add(Check::from_bool("M.faithful_right", rb_ann.is_zero(),
                                "b = " + (rb_ann.is_zero() ? std::string() : format_vector(f, rb_ann.basis().row(0))) +
                                    " annihilates M"));
  }
  return report;
}

/// The assembled block algebra together with its Pierce idempotents.
template <class F>
class GMAlgebra {
 public:
  using value_type = typename F::value_type;

  GMAlgebra(MoritaContext<F> ctx, StructureAlgebra<F> g, StructureAlgebra<F> a, StructureAlgebra<F> b)
      : context_(std::move(ctx)), algebra_(std::move(g)), a_(std::move(a)), b_(std::move(b)) {
    layout_ = BlockLayout{context_.dim_a(), context_.dim_m, context_.dim_n, context_.dim_b()};
    e_ = zero_vector(field(), layout_.total());
    f_ = zero_vector(field(), layout_.total());
    for (std::size_t i = 0; i < layout_.dim_a; ++i) e_[layout_.offset_a() + i] = context_.a.unit[i];
    for (std::size_t i = 0; i < layout_.dim_b; ++i) f_[layout_.offset_b() + i] = context_.b.unit[i];
  }

  const F& field() const { return context_.field; }
  const MoritaContext<F>& context() const { return context_; }
  const StructureAlgebra<F>& algebra() const { return algebra_; }
  const StructureAlgebra<F>& algebra_a() const { return a_; }
  const StructureAlgebra<F>& algebra_b() const { return b_; }
  const BlockLayout& layout() const { return layout_; }
  std::size_t dim() const { return layout_.total(); }
  const Vector<F>& e() const { return e_; }
  const Vector<F>& f() const { return f_; }

  /// Global vector with `block` written at the offset of the given block.
  Vector<F> embed(BlockLayout::Block which, std::span<const value_type> block) const {
    Vector<F> out = zero_vector(field(), dim());
    std::size_t off = 0, len = 0;
    switch (which) {
      case BlockLayout::Block::A: off = layout_.offset_a(); len = layout_.dim_a; break;
      case BlockLayout::Block::M: off = layout_.offset_m(); len = layout_.dim_m; break;
      case BlockLayout::Block::N: off = layout_.offset_n(); len = layout_.dim_n; break;
      case BlockLayout::Block::B: off = layout_.offset_b(); len = layout_.dim_b; break;
    }
    if (block.size() != len) throw DimensionError("embed: block length mismatch");
    std::copy(block.begin(), block.end(), out.begin() + static_cast<std::ptrdiff_t>(off));
    return out;
  }

  Vector<F> slice(BlockLayout::Block which, std::span<const value_type> x) const {
    std::size_t off = 0, len = 0;
    switch (which) {
      case BlockLayout::Block::A: off = layout_.offset_a(); len = layout_.dim_a; break;
      case BlockLayout::Block::M: off = layout_.offset_m(); len = layout_.dim_m; break;
      case BlockLayout::Block::N: off = layout_.offset_n(); len = layout_.dim_n; break;
      case BlockLayout::Block::B: off = layout_.offset_b(); len = layout_.dim_b; break;
    }
    algebra_.check_element(x);
    return Vector<F>(x.begin() + static_cast<std::ptrdiff_t>(off), x.begin() + static_cast<std::ptrdiff_t>(off + len));
  }

 private:
  MoritaContext<F> context_;
  StructureAlgebra<F> algebra_;
  StructureAlgebra<F> a_;
  StructureAlgebra<F> b_;
  BlockLayout layout_;
  Vector<F> e_;
  Vector<F> f_;
};

/// Multiplication table of the block algebra, built from the matrix-like law
/// (a,m,n,b)(a',m',n',b') = (aa' + phi(m n'), am' + mb', na' + bn', psi(n m') + bb').
template <class F>
AlgebraTable<F> block_product_table(const MoritaContext<F>& c) {
  const F& f = c.field;
  BlockLayout L{c.dim_a(), c.dim_m, c.dim_n, c.dim_b()};
  const std::size_t d = L.total();
  AlgebraTable<F> t{f, BilinearTable<F>(d, d, d), zero_vector(f, d)};
  auto put = [&](std::size_t gi, std::size_t gj, std::size_t out_off, const SparseVector<F>& v) {
    for (const auto& [k, x] : v) t.product.accumulate(f, gi, gj, out_off + k, x);
  };
  for (std::size_t i = 0; i < L.dim_a; ++i) {
    for (std::size_t j = 0; j < L.dim_a; ++j) put(L.offset_a() + i, L.offset_a() + j, L.offset_a(), c.a.product.at(i, j));
    for (std::size_t j = 0; j < L.dim_m; ++j) put(L.offset_a() + i, L.offset_m() + j, L.offset_m(), c.left_m.at(i, j));
  }
  for (std::size_t i = 0; i < L.dim_m; ++i) {
    for (std::size_t j = 0; j < L.dim_n; ++j) put(L.offset_m() + i, L.offset_n() + j, L.offset_a(), c.phi.at(i, j));
    for (std::size_t j = 0; j < L.dim_b; ++j) put(L.offset_m() + i, L.offset_b() + j, L.offset_m(), c.right_m.at(i, j));
  }
  for (std::size_t i = 0; i < L.dim_n; ++i) {
    for (std::size_t j = 0; j < L.dim_a; ++j) put(L.offset_n() + i, L.offset_a() + j, L.offset_n(), c.right_n.at(i, j));
    for (std::size_t j = 0; j < L.dim_m; ++j) put(L.offset_n() + i, L.offset_m() + j, L.offset_b(), c.psi.at(i, j));
  }
  for (std::size_t i = 0; i < L.dim_b; ++i) {
    for (std::size_t j = 0; j < L.dim_n; ++j) put(L.offset_b() + i, L.offset_n() + j, L.offset_n(), c.left_n.at(i, j));
    for (std::size_t j = 0; j < L.dim_b; ++j) put(L.offset_b() + i, L.offset_b() + j, L.offset_b(), c.b.product.at(i, j));
  }
  for (std::size_t i = 0; i < L.dim_a; ++i) t.unit[L.offset_a() + i] = c.a.unit[i];
  for (std::size_t i = 0; i < L.dim_b; ++i) t.unit[L.offset_b() + i] = c.b.unit[i];
  return t;
}

/// Validates the context and assembles G. Throws ValidationError when the
/// context (or, defensively, the assembled table) fails validation.
template <class F>
GMAlgebra<F> assemble(MoritaContext<F> ctx) {
  auto report = validate_context(ctx);
  if (!report.passed()) throw ValidationError("invalid Morita context", std::move(report));
  StructureAlgebra<F> g(block_product_table(ctx));
  StructureAlgebra<F> a(ctx.a);
  StructureAlgebra<F> b(ctx.b);
  return GMAlgebra<F>(std::move(ctx), std::move(g), std::move(a), std::move(b));
}

/// Pierce components of x: a = exe, m = exf, n = fxe, b = fxf, each as a
/// global vector and as block coordinates.
template <class F>
struct PierceParts {
  Vector<F> exe, exf, fxe, fxf;
  Vector<F> a, m, n, b;
};

template <class F>
PierceParts<F> pierce_project(const GMAlgebra<F>& g, std::span<const typename F::value_type> x) {
  using B = BlockLayout::Block;
  const auto& alg = g.algebra();
  auto ex = alg.multiply(g.e(), x);
  auto fx = alg.multiply(g.f(), x);
  PierceParts<F> p;
  p.exe = alg.multiply(ex, g.e());
  p.exf = alg.multiply(ex, g.f());
  p.fxe = alg.multiply(fx, g.e());
  p.fxf = alg.multiply(fx, g.f());
  p.a = g.slice(B::A, p.exe);
  p.m = g.slice(B::M, p.exf);
  p.n = g.slice(B::N, p.fxe);
  p.b = g.slice(B::B, p.fxf);
  return p;
}

}  // namespace gmalie
