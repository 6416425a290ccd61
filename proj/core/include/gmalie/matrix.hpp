#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "gmalie/error.hpp"
#include "gmalie/field.hpp"

namespace gmalie {

/// Sorted (index, value) pairs with no explicit zeros.
template <class F>
using SparseVector = std::vector<std::pair<std::size_t, typename F::value_type>>;

template <class F>
Vector<F> zero_vector(const F& f, std::size_t n) {
  return Vector<F>(n, f.zero());
}

template <class F>
Vector<F> unit_vector(const F& f, std::size_t n, std::size_t i) {
  Vector<F> v(n, f.zero());
  v.at(i) = f.one();
  return v;
}

template <class F>
bool is_zero_vector(const F& f, std::span<const typename F::value_type> v) {
  return std::all_of(v.begin(), v.end(), [&](const auto& x) { return f.is_zero(x); });
}

template <class F>
bool vectors_equal(const F& f, std::span<const typename F::value_type> a,
                   std::span<const typename F::value_type> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!f.equal(a[i], b[i])) return false;
  }
  return true;
}

/// y += a * x
template <class F>
void add_scaled(const F& f, Vector<F>& y, const typename F::value_type& a,
                std::span<const typename F::value_type> x) {
  if (y.size() != x.size()) throw DimensionError("add_scaled: length mismatch");
  if (f.is_zero(a)) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!f.is_zero(x[i])) y[i] = f.add(y[i], f.mul(a, x[i]));
  }
}

/// y += a * x for sparse x
template <class F>
void add_scaled(const F& f, Vector<F>& y, const typename F::value_type& a, const SparseVector<F>& x) {
  if (f.is_zero(a)) return;
  for (const auto& [i, v] : x) y.at(i) = f.add(y.at(i), f.mul(a, v));
}

template <class F>
Vector<F> add(const F& f, std::span<const typename F::value_type> a,
              std::span<const typename F::value_type> b) {
  if (a.size() != b.size()) throw DimensionError("vector add: length mismatch");
  Vector<F> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

template <class F>
Vector<F> subtract(const F& f, std::span<const typename F::value_type> a,
                   std::span<const typename F::value_type> b) {
  if (a.size() != b.size()) throw DimensionError("vector subtract: length mismatch");
  Vector<F> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
  return out;
}

template <class F>
Vector<F> scaled(const F& f, const typename F::value_type& a, std::span<const typename F::value_type> x) {
  Vector<F> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = f.mul(a, x[i]);
  return out;
}

template <class F>
SparseVector<F> to_sparse(const F& f, std::span<const typename F::value_type> v) {
  SparseVector<F> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!f.is_zero(v[i])) out.emplace_back(i, v[i]);
  }
  return out;
}

template <class F>
Vector<F> to_dense(const F& f, const SparseVector<F>& v, std::size_t n) {
  Vector<F> out(n, f.zero());
  for (const auto& [i, x] : v) out.at(i) = x;
  return out;
}

template <class F>
std::string format_vector(const F& f, std::span<const typename F::value_type> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += f.format(v[i]);
  }
  return s + ")";
}

/// Dense row-major matrix over F. The shape is fixed at construction.
template <class F>
class Matrix {
 public:
  using value_type = typename F::value_type;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(const F& field, std::size_t cols, const std::vector<Vector<F>>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw DimensionError("Matrix::from_rows: ragged rows");
      std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const value_type> row(std::size_t r) const {
    return std::span<const value_type>(data_).subspan(r * cols_, cols_);
  }
  std::span<value_type> row(std::size_t r) { return std::span<value_type>(data_).subspan(r * cols_, cols_); }

  Vector<F> row_vector(std::size_t r) const {
    auto s = row(r);
    return Vector<F>(s.begin(), s.end());
  }

  Vector<F> column_vector(std::size_t c) const {
    Vector<F> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (!(a.field_ == b.field_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    return vectors_equal(a.field_, std::span<const value_type>(a.data_), std::span<const value_type>(b.data_));
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> data_;
};

template <class F>
Matrix<F> transpose(const Matrix<F>& m) {
  Matrix<F> t(m.field(), m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  return t;
}

template <class F>
Matrix<F> multiply(const Matrix<F>& a, const Matrix<F>& b) {
  require_same_field(a.field(), b.field());
  if (a.cols() != b.rows()) throw DimensionError("matrix multiply: inner dimensions differ");
  const F& f = a.field();
  Matrix<F> out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& x = a(i, k);
      if (f.is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!f.is_zero(b(k, j))) out(i, j) = f.add(out(i, j), f.mul(x, b(k, j)));
      }
    }
  }
  return out;
}

template <class F>
Vector<F> apply(const Matrix<F>& m, std::span<const typename F::value_type> v) {
  if (v.size() != m.cols()) throw DimensionError("matrix-vector apply: length mismatch");
  const F& f = m.field();
  Vector<F> out(m.rows(), f.zero());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!f.is_zero(v[c]) && !f.is_zero(m(r, c))) out[r] = f.add(out[r], f.mul(m(r, c), v[c]));
    }
  }
  return out;
}

/// Row-stack two matrices with equal column counts.
template <class F>
Matrix<F> stack(const Matrix<F>& top, const Matrix<F>& bottom) {
  require_same_field(top.field(), bottom.field());
  if (top.cols() != bottom.cols()) throw DimensionError("stack: column counts differ");
  Matrix<F> out(top.field(), top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) out(r, c) = top(r, c);
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) out(top.rows() + r, c) = bottom(r, c);
  return out;
}

template <class F>
struct Echelon {
  Matrix<F> reduced;                // same shape as the input; zero rows last
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

namespace detail {

template <class F>
Echelon<F> gauss_jordan(Matrix<F> m) {
  const F f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && f.is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    const auto inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      const auto x = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!f.is_zero(m(r, j))) m(i, j) = f.sub(m(i, j), f.mul(x, m(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

// Fraction-free Gauss-Jordan over Z: rows are scaled to primitive integer
// vectors, eliminated with integer cross-multiplication, and divided by their
// content after every update. Pivots are normalized to 1 only at the end.
inline Echelon<Rationals> fraction_free_rref(const Matrix<Rationals>& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  auto make_primitive = [&](std::vector<mpz_class>& row, std::size_t from) {
    mpz_class g = 0;
    for (std::size_t j = from; j < cols; ++j) {
      if (row[j] != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[j].get_mpz_t());
      if (g == 1) return;
    }
    if (g > 1) {
      for (std::size_t j = from; j < cols; ++j)
        if (row[j] != 0) mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), g.get_mpz_t());
    }
  };
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& x = m(r, c);
      if (sgn(x) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& x = m(r, c);
      if (sgn(x) != 0) a[r][c] = x.get_num() * (l / x.get_den());
    }
    make_primitive(a[r], 0);
  }

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  mpz_class t;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (a[i][c] != 0 && (p == rows || mpz_cmpabs(a[i][c].get_mpz_t(), a[p][c].get_mpz_t()) < 0)) p = i;
    }
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const mpz_class piv = a[r][c];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const mpz_class x = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) {
        // a[i][j] = piv * a[i][j] - x * a[r][j]
        if (a[i][j] != 0) a[i][j] *= piv;
        if (j >= c && a[r][j] != 0) {
          t = x * a[r][j];
          a[i][j] -= t;
        }
      }
      make_primitive(a[i], 0);
    }
    pivots.push_back(c);
    ++r;
  }

  Matrix<Rationals> out(m.field(), rows, cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const mpz_class& piv = a[i][pivots[i]];
    for (std::size_t j = pivots[i]; j < cols; ++j) {
      if (a[i][j] == 0) continue;
      mpq_class q{a[i][j], piv};
      q.canonicalize();
      out(i, j) = q;
    }
  }
  return {std::move(out), std::move(pivots)};
}

}  // namespace detail

/// Reduced row echelon form. Over Q the elimination is fraction-free.
template <class F>
Echelon<F> rref(const Matrix<F>& m) {
  if constexpr (std::is_same_v<F, Rationals>) {
    return detail::fraction_free_rref(m);
  } else {
    return detail::gauss_jordan(m);
  }
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).rank();
}

}  // namespace gmalie
