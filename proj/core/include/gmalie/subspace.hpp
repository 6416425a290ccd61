#pragma once

#include <optional>
#include <vector>

#include "gmalie/matrix.hpp"

namespace gmalie {

/// A linear subspace of F^n held by its reduced row echelon basis. Two
/// subspaces are equal iff their canonical bases agree entrywise.
template <class F>
class Subspace {
 public:
  using value_type = typename F::value_type;

  static Subspace zero(const F& f, std::size_t ambient) { return Subspace(Matrix<F>(f, 0, ambient), {}); }

  static Subspace whole(const F& f, std::size_t ambient) {
    std::vector<std::size_t> piv(ambient);
    std::iota(piv.begin(), piv.end(), std::size_t{0});
    return Subspace(Matrix<F>::identity(f, ambient), std::move(piv));
  }

  /// Span of the rows of `generators`.
  static Subspace span(const Matrix<F>& generators) {
    auto e = rref(generators);
    Matrix<F> basis(generators.field(), e.rank(), generators.cols());
    for (std::size_t r = 0; r < e.rank(); ++r)
      for (std::size_t c = 0; c < generators.cols(); ++c) basis(r, c) = e.reduced(r, c);
    return Subspace(std::move(basis), std::move(e.pivots));
  }

  static Subspace span(const F& f, std::size_t ambient, const std::vector<Vector<F>>& vectors) {
    return span(Matrix<F>::from_rows(f, ambient, vectors));
  }

  const F& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }

  const Matrix<F>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector<F> basis_vector(std::size_t i) const { return basis_.row_vector(i); }
  std::vector<Vector<F>> basis_vectors() const {
    std::vector<Vector<F>> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
    return out;
  }

  /// Coefficients of v in the canonical basis, or nullopt when v is not in
  /// the subspace. Reads pivot entries, then checks the residual is zero.
  std::optional<Vector<F>> coordinates(std::span<const value_type> v) const {
    if (v.size() != ambient_dim()) throw DimensionError("Subspace::coordinates: ambient dimension mismatch");
    const F& f = field();
    Vector<F> coeffs(dim());
    Vector<F> residual(v.begin(), v.end());
    for (std::size_t i = 0; i < dim(); ++i) {
      coeffs[i] = residual[pivots_[i]];
      add_scaled(f, residual, f.neg(coeffs[i]), basis_.row(i));
    }
    if (!is_zero_vector(f, std::span<const value_type>(residual))) return std::nullopt;
    return coeffs;
  }

  bool contains(std::span<const value_type> v) const { return coordinates(v).has_value(); }

  /// Linear combination of the canonical basis rows.
  Vector<F> combine(std::span<const value_type> coeffs) const {
    if (coeffs.size() != dim()) throw DimensionError("Subspace::combine: coefficient count mismatch");
    Vector<F> out = zero_vector(field(), ambient_dim());
    for (std::size_t i = 0; i < dim(); ++i) add_scaled(field(), out, coeffs[i], basis_.row(i));
    return out;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  Subspace(Matrix<F> basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix<F> basis_;
  std::vector<std::size_t> pivots_;
};

namespace detail {

template <class F>
Subspace<F> kernel_from_echelon(const Echelon<F>& e) {
  const F& f = e.reduced.field();
  const std::size_t cols = e.reduced.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector<F>> vectors;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector<F> v = zero_vector(f, cols);
    v[free] = f.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = f.neg(e.reduced(i, free));
    vectors.push_back(std::move(v));
  }
  return Subspace<F>::span(f, cols, vectors);
}

}  // namespace detail

/// Exact null space {v : m v = 0}.
template <class F>
Subspace<F> kernel_of(const Matrix<F>& m) {
  return detail::kernel_from_echelon(rref(m));
}

/// Some x with m x = b, or nullopt when the system is inconsistent. The
/// returned solution sets every free variable to zero.
template <class F>
std::optional<Vector<F>> solve_particular(const Matrix<F>& m, std::span<const typename F::value_type> b) {
  if (b.size() != m.rows()) throw DimensionError("solve_particular: right-hand side length mismatch");
  const F& f = m.field();
  Matrix<F> aug(f, m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  auto e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector<F> x = zero_vector(f, m.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, m.cols());
  return x;
}

template <class F>
void require_same_ambient(const Subspace<F>& s, const Subspace<F>& t) {
  require_same_field(s.field(), t.field());
  if (s.ambient_dim() != t.ambient_dim()) {
    throw DimensionError("subspace ambient dimensions differ: " + std::to_string(s.ambient_dim()) + " vs " +
                         std::to_string(t.ambient_dim()));
  }
}

/// {y : <y, s> = 0 for all s in S}, coordinates paired with the standard dot product.
template <class F>
Subspace<F> annihilator(const Subspace<F>& s) {
  return kernel_of(s.basis());
}

template <class F>
Subspace<F> sum(const Subspace<F>& s, const Subspace<F>& t) {
  require_same_ambient(s, t);
  return Subspace<F>::span(stack(s.basis(), t.basis()));
}

/// S ∩ T as the kernel of the stacked annihilator bases.
template <class F>
Subspace<F> intersect(const Subspace<F>& s, const Subspace<F>& t) {
  require_same_ambient(s, t);
  return kernel_of(stack(annihilator(s).basis(), annihilator(t).basis()));
}

template <class F>
bool equal(const Subspace<F>& s, const Subspace<F>& t) {
  require_same_ambient(s, t);
  return s == t;
}

template <class F>
bool contains(const Subspace<F>& s, std::span<const typename F::value_type> v) {
  return s.contains(v);
}

template <class F>
bool is_subspace_of(const Subspace<F>& s, const Subspace<F>& t) {
  require_same_ambient(s, t);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (!t.contains(s.basis().row(i))) return false;
  }
  return true;
}

/// Incremental elimination for large sparse homogeneous systems. Rows are
/// reduced against the echelon rows collected so far as they arrive, so
/// duplicate and dependent constraints cost one reduction and no storage.
template <class F>
class RowReducer {
 public:
  using value_type = typename F::value_type;

  RowReducer(F field, std::size_t cols)
      : field_(std::move(field)), cols_(cols), pivot_row_(cols, npos), acc_(cols, field_.zero()) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  void add_row(const SparseVector<F>& row) {
    const F& f = field_;
    for (const auto& [c, v] : row) {
      if (c >= cols_) throw DimensionError("RowReducer::add_row: column out of range");
      acc_[c] = f.add(acc_[c], v);
    }
    std::size_t lead = npos;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (f.is_zero(acc_[c])) continue;
      if (pivot_row_[c] == npos) {
        lead = c;
        break;
      }
      const auto x = acc_[c];
      for (const auto& [j, v] : rows_[pivot_row_[c]]) acc_[j] = f.sub(acc_[j], f.mul(x, v));
    }
    if (lead == npos) return;
    const auto inv = f.inv(acc_[lead]);
    SparseVector<F> stored;
    for (std::size_t c = lead; c < cols_; ++c) {
      if (!f.is_zero(acc_[c])) {
        stored.emplace_back(c, f.mul(acc_[c], inv));
        acc_[c] = f.zero();
      }
    }
    pivot_row_[lead] = rows_.size();
    rows_.push_back(std::move(stored));
  }

  Matrix<F> echelon_rows() const {
    Matrix<F> m(field_, rows_.size(), cols_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (const auto& [c, v] : rows_[r]) m(r, c) = v;
    return m;
  }

  Subspace<F> row_space() const { return Subspace<F>::span(echelon_rows()); }
  Subspace<F> kernel() const { return kernel_of(echelon_rows()); }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  F field_;
  std::size_t cols_;
  std::vector<std::size_t> pivot_row_;
  std::vector<SparseVector<F>> rows_;
  Vector<F> acc_;
};

}  // namespace gmalie
