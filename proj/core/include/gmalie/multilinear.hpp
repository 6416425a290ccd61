#pragma once

// n-linear maps G x ... x G -> G on basis tuples, the (Lie) Leibniz
// predicates, and the n-Lie-derivation space by slot restriction.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gmalie/analysis.hpp"
#include "gmalie/budget.hpp"

namespace gmalie {

/// phi(b_{i1}, ..., b_{in}) = sum_j T[(i1..in)][j] b_j, stored sparsely by
/// tuple index ((i1*d + i2)*d + ...). Coordinate j of tuple t sits at
/// t*d + j in the flattened "full" vector of length d^(n+1).
template <class F>
class MultilinearMap {
 public:
  using value_type = typename F::value_type;
  using Tuple = std::vector<std::size_t>;

  MultilinearMap(F field, std::size_t dim, std::size_t arity) : field_(std::move(field)), dim_(dim), arity_(arity) {
    if (arity == 0) throw DimensionError("multilinear map arity must be at least 1");
    tuples_ = saturating_pow(dim, arity);
    if (tuples_ == UINT64_MAX || saturating_pow(dim, arity + 1) == UINT64_MAX)
      throw BudgetExceededError("multilinear map index space overflows");
  }

  static MultilinearMap from_full(const F& f, std::size_t dim, std::size_t arity, std::span<const value_type> full) {
    MultilinearMap m(f, dim, arity);
    if (full.size() != m.tuples_ * dim) throw DimensionError("full coefficient vector has wrong length");
    for (std::uint64_t t = 0; t < m.tuples_; ++t) {
      auto s = full.subspan(t * dim, dim);
      if (!is_zero_vector(f, s)) m.values_.emplace(t, Vector<F>(s.begin(), s.end()));
    }
    return m;
  }

  const F& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  std::size_t arity() const { return arity_; }
  std::uint64_t tuple_count() const { return tuples_; }
  const std::map<std::uint64_t, Vector<F>>& entries() const { return values_; }
  bool is_zero() const { return values_.empty(); }

  std::uint64_t index_of(const Tuple& t) const {
    if (t.size() != arity_) throw DimensionError("tuple length does not match arity");
    std::uint64_t idx = 0;
    for (auto i : t) {
      if (i >= dim_) throw DimensionError("tuple index out of range");
      idx = idx * dim_ + i;
    }
    return idx;
  }

  Tuple tuple_of(std::uint64_t idx) const {
    Tuple t(arity_);
    for (std::size_t k = arity_; k-- > 0;) {
      t[k] = static_cast<std::size_t>(idx % dim_);
      idx /= dim_;
    }
    return t;
  }

  Vector<F> value(std::uint64_t idx) const {
    auto it = values_.find(idx);
    return it == values_.end() ? zero_vector(field_, dim_) : it->second;
  }
  Vector<F> value(const Tuple& t) const { return value(index_of(t)); }

  void set(std::uint64_t idx, Vector<F> v) {
    if (v.size() != dim_) throw DimensionError("value has wrong length");
    if (idx >= tuples_) throw DimensionError("tuple index out of range");
    if (is_zero_vector(field_, std::span<const value_type>(v)))
      values_.erase(idx);
    else
      values_[idx] = std::move(v);
  }

  void add_to(std::uint64_t idx, std::size_t j, const value_type& c) {
    if (field_.is_zero(c)) return;
    auto v = value(idx);
    v.at(j) = field_.add(v[j], c);
    set(idx, std::move(v));
  }

  Vector<F> full() const {
    Vector<F> out = zero_vector(field_, static_cast<std::size_t>(tuples_ * dim_));
    for (const auto& [t, v] : values_) std::copy(v.begin(), v.end(), out.begin() + static_cast<std::ptrdiff_t>(t * dim_));
    return out;
  }

  /// Multilinear extension to arbitrary arguments.
  Vector<F> evaluate(const std::vector<Vector<F>>& args) const {
    if (args.size() != arity_) throw DimensionError("argument count does not match arity");
    for (const auto& a : args)
      if (a.size() != dim_) throw DimensionError("argument has wrong dimension");
    Vector<F> out = zero_vector(field_, dim_);
    for (const auto& [idx, v] : values_) {
      auto t = tuple_of(idx);
      value_type c = field_.one();
      for (std::size_t k = 0; k < arity_ && !field_.is_zero(c); ++k) c = field_.mul(c, args[k][t[k]]);
      add_scaled(field_, out, c, std::span<const value_type>(v));
    }
    return out;
  }

  /// phi(b_{t1}, ..., x, ..., b_{tn}) with x in `slot` and basis elsewhere.
  Vector<F> evaluate_slot(Tuple t, std::size_t slot, std::span<const value_type> x) const {
    Vector<F> out = zero_vector(field_, dim_);
    for (std::size_t s = 0; s < dim_; ++s) {
      if (field_.is_zero(x[s])) continue;
      t[slot] = s;
      auto it = values_.find(index_of(t));
      if (it != values_.end()) add_scaled(field_, out, x[s], std::span<const value_type>(it->second));
    }
    return out;
  }

  friend bool operator==(const MultilinearMap& a, const MultilinearMap& b) {
    if (!(a.field_ == b.field_) || a.dim_ != b.dim_ || a.arity_ != b.arity_ || a.values_.size() != b.values_.size())
      return false;
    for (const auto& [t, v] : a.values_) {
      auto it = b.values_.find(t);
      if (it == b.values_.end() ||
          !vectors_equal(a.field_, std::span<const value_type>(v), std::span<const value_type>(it->second)))
        return false;
    }
    return true;
  }

 private:
  F field_;
  std::size_t dim_;
  std::size_t arity_;
  std::uint64_t tuples_ = 0;
  std::map<std::uint64_t, Vector<F>> values_;
};

template <class F>
void require_compatible(const MultilinearMap<F>& a, const MultilinearMap<F>& b) {
  require_same_field(a.field(), b.field());
  if (a.dim() != b.dim() || a.arity() != b.arity()) throw DimensionError("multilinear maps have different shapes");
}

/// a + s * b
template <class F>
MultilinearMap<F> add_scaled(const MultilinearMap<F>& a, const typename F::value_type& s, const MultilinearMap<F>& b) {
  require_compatible(a, b);
  const F& f = a.field();
  MultilinearMap<F> out = a;
  for (const auto& [t, v] : b.entries()) {
    auto cur = out.value(t);
    add_scaled(f, cur, s, std::span<const typename F::value_type>(v));
    out.set(t, std::move(cur));
  }
  return out;
}

template <class F>
MultilinearMap<F> operator+(const MultilinearMap<F>& a, const MultilinearMap<F>& b) {
  return add_scaled(a, a.field().one(), b);
}

template <class F>
MultilinearMap<F> operator-(const MultilinearMap<F>& a, const MultilinearMap<F>& b) {
  return add_scaled(a, a.field().neg(a.field().one()), b);
}

/// Outcome of an exhaustive basis-tuple predicate. The witness names the
/// first failing (slot, tuple, i, j) in canonical tuple order.
struct PredicateResult {
  bool answer = true;
  std::string witness;
};

namespace detail {

// Runs `body(slot, others, i, j)` over every slot and basis tuple in
// canonical order; `others` carries the full tuple with the slot entry free.
template <class Body>
PredicateResult leibniz_scan(std::size_t d, std::size_t n, Body&& body) {
  const std::uint64_t others = saturating_pow(d, n - 1);
  std::vector<std::size_t> t(n);
  for (std::size_t slot = 0; slot < n; ++slot) {
    for (std::uint64_t code = 0; code < others; ++code) {
      std::uint64_t x = code;
      for (std::size_t k = n; k-- > 0;) {
        if (k == slot) continue;
        t[k] = static_cast<std::size_t>(x % d);
        x /= d;
      }
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          if (!body(slot, t, i, j)) {
            auto shown = t;
            shown[slot] = static_cast<std::size_t>(-1);
            std::string ts = "(";
            for (std::size_t k = 0; k < n; ++k) {
              if (k) ts += ", ";
              ts += k == slot ? std::string("*") : std::to_string(shown[k]);
            }
            ts += ")";
            return {false, "slot " + std::to_string(slot + 1) + ", tuple " + ts + ", i = " + std::to_string(i) +
                               ", j = " + std::to_string(j)};
          }
        }
    }
  }
  return {};
}

template <class F>
void require_shape(const StructureAlgebra<F>& alg, const MultilinearMap<F>& phi) {
  require_same_field(alg.field(), phi.field());
  if (phi.dim() != alg.dim()) throw DimensionError("map dimension does not match the algebra");
}

}  // namespace detail

/// Lie-Leibniz law in every slot on all basis tuples.
template <class F>
PredicateResult is_n_lie_derivation(const StructureAlgebra<F>& alg, const MultilinearMap<F>& phi,
                                    const Budget& budget = Budget::from_environment()) {
  using V = std::span<const typename F::value_type>;
  detail::require_shape(alg, phi);
  const std::size_t d = alg.dim(), n = phi.arity();
  budget.require_tuples(saturating_pow(d, n), "n-Lie derivation check");
  const F& f = alg.field();
  std::vector<Vector<F>> br(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) br[i * d + j] = alg.basis_bracket(i, j);
  return detail::leibniz_scan(d, n, [&](std::size_t slot, std::vector<std::size_t>& t, std::size_t i, std::size_t j) {
    auto lhs = phi.evaluate_slot(t, slot, br[i * d + j]);
    t[slot] = i;
    auto pi = phi.value(t);
    t[slot] = j;
    auto pj = phi.value(t);
    auto r1 = alg.bracket(pi, alg.basis(j));
    auto r2 = alg.bracket(alg.basis(i), pj);
    auto rhs = add(f, V(r1), V(r2));
    return vectors_equal(f, V(lhs), V(rhs));
  });
}

/// Associative Leibniz law in every slot on all basis tuples.
template <class F>
PredicateResult is_n_derivation(const StructureAlgebra<F>& alg, const MultilinearMap<F>& phi,
                                const Budget& budget = Budget::from_environment()) {
  using V = std::span<const typename F::value_type>;
  detail::require_shape(alg, phi);
  const std::size_t d = alg.dim(), n = phi.arity();
  budget.require_tuples(saturating_pow(d, n), "n-derivation check");
  const F& f = alg.field();
  return detail::leibniz_scan(d, n, [&](std::size_t slot, std::vector<std::size_t>& t, std::size_t i, std::size_t j) {
    auto prod = to_dense(f, alg.basis_product(i, j), d);
    auto lhs = phi.evaluate_slot(t, slot, prod);
    t[slot] = i;
    auto pi = phi.value(t);
    t[slot] = j;
    auto pj = phi.value(t);
    auto r1 = alg.multiply(pi, alg.basis(j));
    auto r2 = alg.multiply(alg.basis(i), pj);
    auto rhs = add(f, V(r1), V(r2));
    return vectors_equal(f, V(lhs), V(rhs));
  });
}

/// Invariance of the coefficient tensor under every permutation of the
/// argument tuple.
template <class F>
bool is_permuting(const MultilinearMap<F>& phi) {
  using V = std::span<const typename F::value_type>;
  const F& f = phi.field();
  for (const auto& [idx, v] : phi.entries()) {
    auto t = phi.tuple_of(idx);
    std::sort(t.begin(), t.end());
    do {
      auto w = phi.value(t);
      if (!vectors_equal(f, V(v), V(w))) return false;
    } while (std::next_permutation(t.begin(), t.end()));
  }
  return true;
}

/// Every value on a basis tuple lies in Z(alg).
template <class F>
PredicateResult is_centrally_valued(const Subspace<F>& center_space, const MultilinearMap<F>& phi) {
  for (const auto& [idx, v] : phi.entries()) {
    if (!center_space.contains(v)) return {false, "tuple " + format_tuple(phi.tuple_of(idx))};
  }
  return {};
}

template <class F>
PredicateResult is_centrally_valued(const StructureAlgebra<F>& alg, const MultilinearMap<F>& phi) {
  detail::require_shape(alg, phi);
  return is_centrally_valued(center(alg), phi);
}

/// [phi(x,y),[v,u]] + [phi(x,v),[u,y]] = [phi(u,y),[x,v]] + [phi(u,v),[x,y]]
/// on all basis 4-tuples (x, y, u, v).
template <class F>
PredicateResult lemma32_identity_check(const StructureAlgebra<F>& alg, const MultilinearMap<F>& phi) {
  using V = std::span<const typename F::value_type>;
  detail::require_shape(alg, phi);
  if (phi.arity() != 2) throw DimensionError("the biderivation identity needs an arity-2 map");
  const F& f = alg.field();
  const std::size_t d = alg.dim();
  std::vector<Vector<F>> br(d * d), val(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      br[i * d + j] = alg.basis_bracket(i, j);
      val[i * d + j] = phi.value({i, j});
    }
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = 0; v < d; ++v) {
          auto l1 = alg.bracket(val[x * d + y], br[v * d + u]);
          auto l2 = alg.bracket(val[x * d + v], br[u * d + y]);
          auto r1 = alg.bracket(val[u * d + y], br[x * d + v]);
          auto r2 = alg.bracket(val[u * d + v], br[x * d + y]);
          if (!vectors_equal(f, V(add(f, V(l1), V(l2))), V(add(f, V(r1), V(r2)))))
            return {false, "basis tuple " + format_tuple({x, y, u, v})};
        }
  return {};
}

/// A basis of a multilinear map space together with its canonical form as a
/// subspace of the full coordinate space F^(d^(n+1)).
template <class F>
struct MultilinearSpace {
  std::vector<MultilinearMap<F>> basis;
  Subspace<F> coordinates;
  std::size_t unknowns = 0;  // size of the reduced linear system
};

namespace detail {

// Maps phi with slot 1 ranging over a basis {D_l} of `slot_space` (a space
// of linear maps) and slots 2..n over basis tuples: phi(b_i, b_t) =
// sum_l c[l, t] D_l(b_i). Each further slot k must also land in the space,
// which is imposed through the annihilator rows of that space.
template <class F>
MultilinearSpace<F> slot_restricted_space(const F& f, std::size_t d, std::size_t n, const Subspace<F>& slot_space,
                                          const Subspace<F>& slot_constraints, const Budget& budget) {
  const std::size_t ell = slot_space.dim();
  const std::uint64_t T = saturating_pow(d, n - 1);
  budget.require_tuples(saturating_pow(d, n), "n-Lie derivation space");
  budget.require_unknowns(saturating_pow(d, n - 1) * ell, "n-Lie derivation space");
  const std::size_t unknowns = static_cast<std::size_t>(ell * T);

  // D_l[o][i] at slot_space row l, position o*d + i.
  const auto& D = slot_space.basis();
  const auto& R = slot_constraints.basis();
  const std::size_t nr = R.rows();

  RowReducer<F> red(f, unknowns);
  if (n >= 2) {
    // W[((r*d + m)*d + i)*ell + l] = sum_o R[r][o*d + m] D_l[o][i]
    std::vector<typename F::value_type> W(nr * d * d * ell, f.zero());
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t m = 0; m < d; ++m)
        for (std::size_t o = 0; o < d; ++o) {
          const auto& x = R(r, o * d + m);
          if (f.is_zero(x)) continue;
          for (std::size_t i = 0; i < d; ++i)
            for (std::size_t l = 0; l < ell; ++l) {
              const auto& y = D(l, o * d + i);
              if (!f.is_zero(y)) {
                auto& w = W[((r * d + m) * d + i) * ell + l];
                w = f.add(w, f.mul(x, y));
              }
            }
        }

    // Slots 2..n are positions 0..n-2 of the reduced tuple t.
    const std::uint64_t ctx_count = saturating_pow(d, n - 2);
    const std::size_t tn = n - 1;
    std::vector<std::size_t> t(tn);
    for (std::size_t k = 0; k < tn; ++k) {
      for (std::uint64_t code = 0; code < ctx_count; ++code) {
        std::uint64_t x = code;
        for (std::size_t p = tn; p-- > 0;) {
          if (p == k) continue;
          t[p] = static_cast<std::size_t>(x % d);
          x /= d;
        }
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t r = 0; r < nr; ++r) {
            SparseVector<F> row;
            for (std::size_t m = 0; m < d; ++m) {
              t[k] = m;
              std::uint64_t tidx = 0;
              for (auto s : t) tidx = tidx * d + s;
              for (std::size_t l = 0; l < ell; ++l) {
                const auto& w = W[((r * d + m) * d + i) * ell + l];
                if (!f.is_zero(w)) row.emplace_back(static_cast<std::size_t>(l * T + tidx), w);
              }
            }
            std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            if (!row.empty()) red.add_row(row);
          }
      }
    }
  }

  auto sol = red.kernel();
  const std::uint64_t full_len = saturating_pow(d, n + 1);
  std::vector<Vector<F>> fulls;
  for (std::size_t s = 0; s < sol.dim(); ++s) {
    auto c = sol.basis().row(s);
    Vector<F> full = zero_vector(f, static_cast<std::size_t>(full_len));
    for (std::size_t l = 0; l < ell; ++l)
      for (std::uint64_t tidx = 0; tidx < T; ++tidx) {
        const auto& coef = c[l * T + tidx];
        if (f.is_zero(coef)) continue;
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t o = 0; o < d; ++o) {
            const auto& y = D(l, o * d + i);
            if (f.is_zero(y)) continue;
            // tuple (i, t) has index i*T + tidx
            auto& dst = full[static_cast<std::size_t>((i * T + tidx) * d + o)];
            dst = f.add(dst, f.mul(coef, y));
          }
      }
    fulls.push_back(std::move(full));
  }
  MultilinearSpace<F> out{{}, Subspace<F>::span(f, static_cast<std::size_t>(full_len), fulls), unknowns};
  for (std::size_t s = 0; s < out.coordinates.dim(); ++s)
    out.basis.push_back(MultilinearMap<F>::from_full(f, d, n, out.coordinates.basis().row(s)));
  return out;
}

}  // namespace detail

/// Exact basis of the n-Lie derivations of alg.
template <class F>
MultilinearSpace<F> n_lie_derivation_space(const StructureAlgebra<F>& alg, std::size_t n,
                                           const Budget& budget = Budget::from_environment()) {
  if (n == 0) throw DimensionError("arity must be at least 1");
  auto sys = detail::leibniz_system(alg.field(), detail::bracket_table(alg));
  return detail::slot_restricted_space(alg.field(), alg.dim(), n, sys.kernel(), sys.row_space(), budget);
}

/// Exact basis of the n-derivations of alg.
template <class F>
MultilinearSpace<F> n_derivation_space(const StructureAlgebra<F>& alg, std::size_t n,
                                       const Budget& budget = Budget::from_environment()) {
  if (n == 0) throw DimensionError("arity must be at least 1");
  auto sys = detail::leibniz_system(alg.field(), alg.table().product);
  return detail::slot_restricted_space(alg.field(), alg.dim(), n, sys.kernel(), sys.row_space(), budget);
}

}  // namespace gmalie
