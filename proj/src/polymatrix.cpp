#include "fiberdim/polymatrix.hpp"

#include <tuple>
#include <utility>

#include "fiberdim/error.hpp"

namespace fiberdim {

PolyMatrix::PolyMatrix(std::size_t vars, std::size_t rows, std::size_t cols)
    : vars_(vars), rows_(rows), cols_(cols), data_(rows * cols, MultiPoly(vars)) {}

PolyMatrix PolyMatrix::from_columns(std::size_t vars, std::size_t length, std::span<const PolyVec> columns) {
  PolyMatrix m(vars, length, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].length() != length || columns[c].vars() != vars) {
      fail(ErrorCode::kShapeMismatch, "column vector shape differs from matrix shape");
    }
    for (std::size_t r = 0; r < length; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

PolyMatrix PolyMatrix::identity(std::size_t vars, std::size_t size) {
  return scalar_diagonal(MultiPoly::constant(vars, 1), size);
}

PolyVec PolyMatrix::column(std::size_t c) const {
  std::vector<MultiPoly> entries;
  entries.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) entries.push_back((*this)(r, c));
  return PolyVec(vars_, std::move(entries));
}

ExactMatrix PolyMatrix::evaluate(std::span<const Rational> point) const {
  ExactMatrix out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c).evaluate(point);
  }
  return out;
}

PolyMatrix PolyMatrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  PolyMatrix out(vars_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
  }
  return out;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : data_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorCode::kShapeMismatch, "polynomial matrix product dimensions disagree");
  PolyMatrix out(a.vars_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::kShapeMismatch, "polynomial matrix difference shapes disagree");
  PolyMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

PolyMatrix scalar_diagonal(const MultiPoly& value, std::size_t size) {
  PolyMatrix m(value.vars(), size, size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = value;
  return m;
}

namespace {

using Grid = std::vector<std::vector<MultiPoly>>;

Grid to_grid(const PolyMatrix& m) {
  Grid g(m.rows(), std::vector<MultiPoly>(m.cols(), MultiPoly(m.vars())));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) g[r][c] = m(r, c);
  }
  return g;
}

auto pivot_weight(const MultiPoly& p) { return std::make_tuple(p.degree(), p.size()); }

// One Bareiss step at (k, k): entries below and right of the pivot become
// (pivot * a_ij - a_ik * a_kj) / prev, which is exact in Q[z].
void bareiss_step(Grid& a, std::size_t k, const MultiPoly& prev) {
  const bool trivial_prev = prev.degree() == 0 && prev.leading_coefficient() == 1;
  for (std::size_t i = k + 1; i < a.size(); ++i) {
    for (std::size_t j = k + 1; j < a[i].size(); ++j) {
      MultiPoly v = a[k][k] * a[i][j];
      if (!a[i][k].is_zero() && !a[k][j].is_zero()) v -= a[i][k] * a[k][j];
      a[i][j] = trivial_prev ? std::move(v) : divide_exact(v, prev);
    }
    a[i][k] = MultiPoly(a[i][k].vars());
  }
}

}  // namespace

std::size_t rank_generic(const PolyMatrix& m) {
  Grid a = to_grid(m);
  const std::size_t rows = m.rows(), cols = m.cols();
  MultiPoly prev = MultiPoly::constant(m.vars(), 1);
  std::size_t k = 0;
  for (; k < rows && k < cols; ++k) {
    std::size_t best_r = rows, best_c = cols;
    for (std::size_t r = k; r < rows; ++r) {
      for (std::size_t c = k; c < cols; ++c) {
        if (a[r][c].is_zero()) continue;
        if (best_r == rows || pivot_weight(a[r][c]) < pivot_weight(a[best_r][best_c])) {
          best_r = r;
          best_c = c;
        }
      }
    }
    if (best_r == rows) break;
    std::swap(a[k], a[best_r]);
    for (auto& row : a) std::swap(row[k], row[best_c]);
    bareiss_step(a, k, prev);
    prev = a[k][k];
  }
  return k;
}

MultiPoly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::kShapeMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return MultiPoly::constant(m.vars(), 1);
  Grid a = to_grid(m);
  MultiPoly prev = MultiPoly::constant(m.vars(), 1);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best = n;
    for (std::size_t r = k; r < n; ++r) {
      if (a[r][k].is_zero()) continue;
      if (best == n || pivot_weight(a[r][k]) < pivot_weight(a[best][k])) best = r;
    }
    if (best == n) return MultiPoly(m.vars());
    if (best != k) {
      std::swap(a[k], a[best]);
      negate = !negate;
    }
    bareiss_step(a, k, prev);
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

PolyMatrix adjugate(const PolyMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::kShapeMismatch, "adjugate of a non-square matrix");
  const std::size_t n = m.rows();
  PolyMatrix adj(m.vars(), n, n);
  if (n == 0) return adj;
  if (n == 1) {
    adj(0, 0) = MultiPoly::constant(m.vars(), 1);
    return adj;
  }
  std::vector<std::size_t> keep_rows, keep_cols;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      keep_rows.clear();
      keep_cols.clear();
      for (std::size_t r = 0; r < n; ++r) {
        if (r != j) keep_rows.push_back(r);
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (c != i) keep_cols.push_back(c);
      }
      // adj(i, j) = (-1)^(i+j) * det(m without row j and column i)
      MultiPoly minor = determinant(m.submatrix(keep_rows, keep_cols));
      adj(i, j) = (i + j) % 2 == 0 ? std::move(minor) : -minor;
    }
  }
  return adj;
}

}  // namespace fiberdim
