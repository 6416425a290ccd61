#pragma once

// Finite-dimensional unital associative algebras given by structure
// constants b_i * b_j = sum_k c[i][j][k] b_k.

#include <string>
#include <vector>

#include "gmalie/report.hpp"
#include "gmalie/subspace.hpp"

namespace gmalie {

/// Sparse constants of a bilinear map U x V -> W on basis pairs: entry
/// (i, j) holds the image of (u_i, v_j). Used for algebra products, module
/// actions and pairings alike.
template <class F>
struct BilinearTable {
  std::size_t left_dim = 0;
  std::size_t right_dim = 0;
  std::size_t out_dim = 0;
  std::vector<SparseVector<F>> entries;  // left_dim * right_dim, row-major in (i, j)

  BilinearTable() = default;
  BilinearTable(std::size_t l, std::size_t r, std::size_t o) : left_dim(l), right_dim(r), out_dim(o), entries(l * r) {}

  const SparseVector<F>& at(std::size_t i, std::size_t j) const { return entries[i * right_dim + j]; }
  SparseVector<F>& at(std::size_t i, std::size_t j) { return entries[i * right_dim + j]; }

  bool well_formed() const {
    if (entries.size() != left_dim * right_dim) return false;
    for (const auto& e : entries) {
      for (const auto& [k, v] : e) {
        if (k >= out_dim) return false;
      }
    }
    return true;
  }

  /// Adds `value` to coordinate k of entry (i, j), keeping the entry sorted and zero-free.
  void accumulate(const F& f, std::size_t i, std::size_t j, std::size_t k, const typename F::value_type& value) {
    auto& e = at(i, j);
    auto it = std::lower_bound(e.begin(), e.end(), k, [](const auto& p, std::size_t key) { return p.first < key; });
    if (it != e.end() && it->first == k) {
      it->second = f.add(it->second, value);
      if (f.is_zero(it->second)) e.erase(it);
    } else if (!f.is_zero(value)) {
      e.insert(it, {k, value});
    }
  }

  Vector<F> apply(const F& f, std::span<const typename F::value_type> x,
                  std::span<const typename F::value_type> y) const {
    if (x.size() != left_dim || y.size() != right_dim) throw DimensionError("bilinear apply: operand length mismatch");
    Vector<F> out = zero_vector(f, out_dim);
    for (std::size_t i = 0; i < left_dim; ++i) {
      if (f.is_zero(x[i])) continue;
      for (std::size_t j = 0; j < right_dim; ++j) {
        if (f.is_zero(y[j])) continue;
        add_scaled(f, out, f.mul(x[i], y[j]), at(i, j));
      }
    }
    return out;
  }

  Vector<F> apply_basis(const F& f, std::size_t i, std::size_t j) const { return to_dense(f, at(i, j), out_dim); }

  /// Image of (x, v_j) for a dense x.
  Vector<F> apply_left_dense(const F& f, std::span<const typename F::value_type> x, std::size_t j) const {
    Vector<F> out = zero_vector(f, out_dim);
    for (std::size_t i = 0; i < left_dim; ++i) {
      if (!f.is_zero(x[i])) add_scaled(f, out, x[i], at(i, j));
    }
    return out;
  }

  /// Image of (u_i, y) for a dense y.
  Vector<F> apply_right_dense(const F& f, std::size_t i, std::span<const typename F::value_type> y) const {
    Vector<F> out = zero_vector(f, out_dim);
    for (std::size_t j = 0; j < right_dim; ++j) {
      if (!f.is_zero(y[j])) add_scaled(f, out, y[j], at(i, j));
    }
    return out;
  }
};

/// Raw, unvalidated multiplication table and unit.
template <class F>
struct AlgebraTable {
  F field;
  BilinearTable<F> product;  // dim x dim -> dim
  Vector<F> unit;

  std::size_t dim() const { return product.out_dim; }
};

/// Checks table shape, associativity on all basis triples, and the two-sided
/// unit law. Records the first violating tuple for each law.
template <class F>
CheckReport validate_algebra(const AlgebraTable<F>& t) {
  CheckReport report;
  const F& f = t.field;
  const std::size_t d = t.dim();
  const bool shape_ok = t.product.left_dim == d && t.product.right_dim == d && t.product.well_formed() &&
                        t.unit.size() == d;
  report.add(Check::from_bool("shape", shape_ok, "table dimensions or indices out of range"));
  if (!shape_ok) return report;

  std::vector<Vector<F>> prod(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) prod[i * d + j] = t.product.apply_basis(f, i, j);

  std::string assoc_witness;
  for (std::size_t i = 0; i < d && assoc_witness.empty(); ++i) {
    for (std::size_t j = 0; j < d && assoc_witness.empty(); ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        // (b_i b_j) b_k versus b_i (b_j b_k)
        auto lhs = t.product.apply_left_dense(f, prod[i * d + j], k);
        auto rhs = t.product.apply_right_dense(f, i, prod[j * d + k]);
        if (!vectors_equal(f, std::span<const typename F::value_type>(lhs), std::span<const typename F::value_type>(rhs))) {
          assoc_witness = "basis triple " + format_tuple({i, j, k});
          break;
        }
      }
    }
  }
  report.add(Check::from_bool("associativity", assoc_witness.empty(), assoc_witness));

  std::string unit_witness;
  for (std::size_t i = 0; i < d; ++i) {
    auto left = t.product.apply_left_dense(f, t.unit, i);
    auto right = t.product.apply_right_dense(f, i, t.unit);
    auto e = unit_vector(f, d, i);
    if (!vectors_equal(f, std::span<const typename F::value_type>(left), std::span<const typename F::value_type>(e))) {
      unit_witness = "unit * b_" + std::to_string(i) + " != b_" + std::to_string(i);
      break;
    }
    if (!vectors_equal(f, std::span<const typename F::value_type>(right), std::span<const typename F::value_type>(e))) {
      unit_witness = "b_" + std::to_string(i) + " * unit != b_" + std::to_string(i);
      break;
    }
  }
  report.add(Check::from_bool("unit", unit_witness.empty(), unit_witness));
  return report;
}

/// A validated unital associative algebra. Construction runs
/// validate_algebra and throws ValidationError on any failure.
template <class F>
class StructureAlgebra {
 public:
  using value_type = typename F::value_type;

  explicit StructureAlgebra(AlgebraTable<F> table);

  const F& field() const { return table_.field; }
  std::size_t dim() const { return table_.dim(); }
  const AlgebraTable<F>& table() const { return table_; }
  const Vector<F>& unit() const { return table_.unit; }
  const SparseVector<F>& basis_product(std::size_t i, std::size_t j) const { return table_.product.at(i, j); }

  Vector<F> basis(std::size_t i) const { return unit_vector(field(), dim(), i); }
  Vector<F> zero() const { return zero_vector(field(), dim()); }

  Vector<F> multiply(std::span<const value_type> x, std::span<const value_type> y) const {
    check_element(x);
    check_element(y);
    return table_.product.apply(field(), x, y);
  }

  Vector<F> bracket(std::span<const value_type> x, std::span<const value_type> y) const {
    auto xy = multiply(x, y);
    auto yx = multiply(y, x);
    return subtract(field(), std::span<const value_type>(xy), std::span<const value_type>(yx));
  }

  /// [b_i, b_j] as a dense vector.
  Vector<F> basis_bracket(std::size_t i, std::size_t j) const {
    Vector<F> out = zero_vector(field(), dim());
    add_scaled(field(), out, field().one(), basis_product(i, j));
    add_scaled(field(), out, field().neg(field().one()), basis_product(j, i));
    return out;
  }

  /// Matrix of y -> x y (column j is x b_j).
  Matrix<F> left_multiplication(std::span<const value_type> x) const {
    check_element(x);
    Matrix<F> m(field(), dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      auto col = table_.product.apply_left_dense(field(), x, j);
      for (std::size_t r = 0; r < dim(); ++r) m(r, j) = col[r];
    }
    return m;
  }

  /// Matrix of y -> y x.
  Matrix<F> right_multiplication(std::span<const value_type> x) const {
    check_element(x);
    Matrix<F> m(field(), dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      auto col = table_.product.apply_right_dense(field(), j, x);
      for (std::size_t r = 0; r < dim(); ++r) m(r, j) = col[r];
    }
    return m;
  }

  void check_element(std::span<const value_type> x) const {
    if (x.size() != dim()) {
      throw DimensionError("element of length " + std::to_string(x.size()) + " does not belong to an algebra of dim " +
                           std::to_string(dim()));
    }
  }

 private:
  AlgebraTable<F> table_;
};

/// Raised when a construction that validates eagerly rejects its input.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, CheckReport report)
      : Error(describe(what, report)), report_(std::move(report)) {}
  const CheckReport& report() const { return report_; }

 private:
  static std::string describe(const std::string& what, const CheckReport& r) {
    const Check* c = r.first_failure();
    return c ? what + ": " + c->name + " failed at " + c->witness : what;
  }
  CheckReport report_;
};

template <class F>
StructureAlgebra<F>::StructureAlgebra(AlgebraTable<F> table) : table_(std::move(table)) {
  auto report = validate_algebra(table_);
  if (!report.passed()) throw ValidationError("invalid algebra", std::move(report));
}

template <class F>
Vector<F> multiply(const StructureAlgebra<F>& alg, std::span<const typename F::value_type> x,
                   std::span<const typename F::value_type> y) {
  return alg.multiply(x, y);
}

template <class F>
Vector<F> bracket(const StructureAlgebra<F>& alg, std::span<const typename F::value_type> x,
                  std::span<const typename F::value_type> y) {
  return alg.bracket(x, y);
}

/// span{[b_i, b_j]}.
template <class F>
Subspace<F> commutator_span(const StructureAlgebra<F>& alg) {
  const std::size_t d = alg.dim();
  RowReducer<F> reducer(alg.field(), d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      auto b = alg.basis_bracket(i, j);
      reducer.add_row(to_sparse(alg.field(), std::span<const typename F::value_type>(b)));
    }
  return reducer.row_space();
}

template <class F>
bool is_commutative(const StructureAlgebra<F>& alg) {
  return commutator_span(alg).is_zero();
}

/// Full matrix algebra M_r with basis E_ij at index i*r + j.
template <class F>
StructureAlgebra<F> matrix_algebra(const F& f, std::size_t r) {
  if (r == 0) throw DimensionError("matrix_algebra: order must be positive");
  AlgebraTable<F> t{f, BilinearTable<F>(r * r, r * r, r * r), zero_vector(f, r * r)};
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t j = 0; j < r; ++j) t.product.accumulate(f, i * r + k, k * r + j, i * r + j, f.one());
  for (std::size_t i = 0; i < r; ++i) t.unit[i * r + i] = f.one();
  return StructureAlgebra<F>(std::move(t));
}

/// The ground field as a one-dimensional algebra.
template <class F>
StructureAlgebra<F> field_algebra(const F& f) {
  return matrix_algebra(f, 1);
}

/// k[z]/(z^2) with basis {1, z}.
template <class F>
StructureAlgebra<F> dual_numbers(const F& f) {
  AlgebraTable<F> t{f, BilinearTable<F>(2, 2, 2), unit_vector(f, 2, 0)};
  t.product.accumulate(f, 0, 0, 0, f.one());
  t.product.accumulate(f, 0, 1, 1, f.one());
  t.product.accumulate(f, 1, 0, 1, f.one());
  return StructureAlgebra<F>(std::move(t));
}

/// Upper triangular r x r matrices, basis E_ij (i <= j) in row-major order.
template <class F>
StructureAlgebra<F> upper_triangular_matrices(const F& f, std::size_t r) {
  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) units.emplace_back(i, j);
  const std::size_t d = units.size();
  auto index_of = [&](std::size_t i, std::size_t j) {
    return static_cast<std::size_t>(std::find(units.begin(), units.end(), std::pair{i, j}) - units.begin());
  };
  AlgebraTable<F> t{f, BilinearTable<F>(d, d, d), zero_vector(f, d)};
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      if (units[a].second == units[b].first) t.product.accumulate(f, a, b, index_of(units[a].first, units[b].second), f.one());
  for (std::size_t i = 0; i < r; ++i) t.unit[index_of(i, i)] = f.one();
  return StructureAlgebra<F>(std::move(t));
}

}  // namespace gmalie
