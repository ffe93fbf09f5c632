#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qchl/error.hpp"
#include "qchl/rational.hpp"

namespace qchl {

using Vec = std::vector<Rational>;

inline bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return is_zero(r); });
}

inline Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

/// y += a * x, skipping zero entries of x.
inline void axpy(Vec& y, const Rational& a, const Vec& x) {
  if (is_zero(a)) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!is_zero(x[i])) y[i] += a * x[i];
}

inline Vec scaled(const Rational& a, Vec v) {
  for (auto& e : v) e *= a;
  return v;
}

inline Vec operator+(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vec operator-(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

/// Dense exact matrix, row-major. For linear maps column j is the image of
/// source basis vector j.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static RatMatrix from_columns(const std::vector<Vec>& cols, std::size_t rows) {
    RatMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec column(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  Vec row(std::size_t i) const { return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

  RatMatrix transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& r) { return qchl::is_zero(r); });
  }

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) {
    a.require_same_shape(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }

  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) {
    a.require_same_shape(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }

  friend RatMatrix operator*(const Rational& s, RatMatrix a) {
    for (auto& e : a.data_) e *= s;
    return a;
  }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape");
    RatMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (qchl::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!qchl::is_zero(b(k, j))) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Vec operator*(const RatMatrix& a, const Vec& x) {
    if (a.cols_ != x.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape");
    Vec y(a.rows_);
    for (std::size_t j = 0; j < a.cols_; ++j) {
      if (qchl::is_zero(x[j])) continue;
      for (std::size_t i = 0; i < a.rows_; ++i)
        if (!qchl::is_zero(a(i, j))) y[i] += a(i, j) * x[j];
    }
    return y;
  }

 private:
  void require_same_shape(const RatMatrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Kronecker product; index (i, j) of the product space is i * dim(b) + j.
inline RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          if (!is_zero(b(p, q))) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

inline RatMatrix matrix_power(const RatMatrix& m, unsigned n) {
  RatMatrix r = RatMatrix::identity(m.rows());
  for (unsigned i = 0; i < n; ++i) r = r * m;
  return r;
}

struct RrefResult {
  RatMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row-echelon form. Pivots are taken in column order, the first
/// row with a nonzero entry in the column becoming the pivot row.
inline RrefResult rref(RatMatrix m) {
  RrefResult out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

inline std::size_t rank(const RatMatrix& m) { return rref(m).rank; }

namespace detail {

inline RatMatrix kernel_from_rref(const RatMatrix& reduced, const std::vector<std::size_t>& pivots, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, f);
    basis.push_back(std::move(v));
  }
  return RatMatrix::from_columns(basis, cols);
}

}  // namespace detail

/// Columns span {v : m v = 0}; one column per free variable, in column order,
/// with that free variable set to 1 and the others to 0.
inline RatMatrix kernel_basis(const RatMatrix& m) {
  const auto r = rref(m);
  return detail::kernel_from_rref(r.reduced, r.pivot_cols, m.cols());
}

/// Some solution of m x = rhs (free variables zero), or nullopt when inconsistent.
inline std::optional<Vec> solve(const RatMatrix& m, const Vec& rhs) {
  if (rhs.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "solve: rhs length");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  const auto r = rref(std::move(aug));
  if (!r.pivot_cols.empty() && r.pivot_cols.back() == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (std::size_t i = 0; i < r.rank; ++i) x[r.pivot_cols[i]] = r.reduced(i, m.cols());
  return x;
}

inline std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.square()) return std::nullopt;
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto r = rref(std::move(aug));
  if (r.rank < n || r.pivot_cols[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

/// Incremental reduced echelon form of a row space. Used to assemble large,
/// mostly redundant constraint systems one equation at a time; the final
/// echelon form is the same as rref of the stacked rows, so the kernel basis
/// agrees with kernel_basis().
class RowReducer {
 public:
  explicit RowReducer(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  /// Returns true when the row enlarged the row space.
  bool add(Vec row) {
    if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "RowReducer: row length");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rational f = row[pivots_[k]];
      if (!is_zero(f)) axpy(row, -f, rows_[k]);
    }
    std::size_t p = 0;
    while (p < cols_ && is_zero(row[p])) ++p;
    if (p == cols_) return false;
    const Rational inv = 1 / row[p];
    for (auto& e : row) e *= inv;
    for (auto& existing : rows_) {
      const Rational f = existing[p];
      if (!is_zero(f)) axpy(existing, -f, row);
    }
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(row));
    return true;
  }

  /// Remainder of v after reduction by the stored rows (zero iff v is in the row space).
  Vec reduce(Vec v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rational f = v[pivots_[k]];
      if (!is_zero(f)) axpy(v, -f, rows_[k]);
    }
    return v;
  }

  const std::vector<std::size_t>& pivots() const { return pivots_; }

  RatMatrix echelon() const { return RatMatrix::from_columns(rows_, cols_).transpose(); }

  /// Kernel of the accumulated system, one vector per free column.
  std::vector<Vec> kernel() const {
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      Vec v(cols_);
      v[f] = 1;
      for (std::size_t k = 0; k < rows_.size(); ++k) v[pivots_[k]] = -rows_[k][f];
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  std::size_t cols_;
  std::vector<std::size_t> pivots_;
  std::vector<Vec> rows_;
};

/// Rank of a list of vectors of equal length.
inline std::size_t span_dimension(const std::vector<Vec>& vs, std::size_t len) {
  RowReducer r(len);
  for (const auto& v : vs) r.add(v);
  return r.rank();
}

}  // namespace qchl
