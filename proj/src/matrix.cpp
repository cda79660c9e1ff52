#include "fiberdim/matrix.hpp"

#include <utility>

#include "fiberdim/echelon.hpp"
#include "fiberdim/error.hpp"

namespace fiberdim {

ExactMatrix ExactMatrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
  ExactMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail(ErrorCode::kShapeMismatch, "ragged rows in matrix literal");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

ExactMatrix ExactMatrix::identity(std::size_t size) {
  ExactMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

ExactMatrix ExactMatrix::stack(const ExactMatrix& below) const {
  if (rows_ != 0 && below.rows_ != 0 && below.cols_ != cols_) {
    fail(ErrorCode::kShapeMismatch, "stacking matrices with different column counts");
  }
  ExactMatrix out = rows_ == 0 ? ExactMatrix(0, below.cols_) : *this;
  for (std::size_t r = 0; r < below.rows_; ++r) out.append_row(below.row(r));
  return out;
}

void ExactMatrix::append_row(std::span<const Rational> values) {
  if (rows_ == 0 && data_.empty()) cols_ = values.size();
  if (values.size() != cols_) fail(ErrorCode::kShapeMismatch, "appended row has wrong length");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorCode::kShapeMismatch, "matrix product dimensions disagree");
  ExactMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

RationalVector operator*(const ExactMatrix& a, std::span<const Rational> v) {
  if (a.cols() != v.size()) fail(ErrorCode::kShapeMismatch, "matrix-vector dimensions disagree");
  RationalVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * v[k];
  }
  return out;
}

std::size_t rank_exact(const ExactMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const Integer den = common_denominator(m.row(r));
    for (std::size_t c = 0; c < cols; ++c) {
      a[r][c] = den / m(r, c).get_den() * m(r, c).get_num();
    }
  }
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    const Integer& pivot = a[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = pivot * a[i][j] - a[i][c] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

ExactMatrix rowspace_intersect(const ExactMatrix& a, const ExactMatrix& b) {
  const std::size_t cols = a.rows() ? a.cols() : b.cols();
  if (a.rows() && b.rows() && a.cols() != b.cols()) {
    fail(ErrorCode::kShapeMismatch, "rowspace_intersect needs equal column counts");
  }
  SparseEchelon ech(2 * cols);
  RationalVector doubled(2 * cols);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) doubled[c] = doubled[cols + c] = a(r, c);
    ech.insert(to_sparse_row(doubled));
  }
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      doubled[c] = b(r, c);
      doubled[cols + c] = 0;
    }
    ech.insert(to_sparse_row(doubled));
  }
  ExactMatrix out(0, cols);
  RationalVector right(cols);
  for (const auto& [lead, row] : ech.pivots()) {
    if (lead < cols) continue;
    std::fill(right.begin(), right.end(), Rational(0));
    for (const auto& [c, v] : row) right[c - cols] = Rational(v);
    out.append_row(right);
  }
  return out;
}

std::optional<RationalVector> solve_exact(const ExactMatrix& m, std::span<const Rational> rhs) {
  if (rhs.size() != m.cols()) fail(ErrorCode::kShapeMismatch, "right-hand side length differs from column count");
  // Unknowns are the rows of m; equations are its columns.
  const std::size_t unknowns = m.rows(), equations = m.cols();
  std::vector<RationalVector> aug(equations, RationalVector(unknowns + 1));
  for (std::size_t e = 0; e < equations; ++e) {
    for (std::size_t u = 0; u < unknowns; ++u) aug[e][u] = m(u, e);
    aug[e][unknowns] = rhs[e];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t u = 0; u < unknowns && r < equations; ++u) {
    std::size_t p = r;
    while (p < equations && aug[p][u] == 0) ++p;
    if (p == equations) continue;
    std::swap(aug[p], aug[r]);
    const Rational inv = 1 / aug[r][u];
    for (auto& v : aug[r]) v *= inv;
    for (std::size_t e = 0; e < equations; ++e) {
      if (e == r || aug[e][u] == 0) continue;
      const Rational f = aug[e][u];
      for (std::size_t k = u; k <= unknowns; ++k) aug[e][k] -= f * aug[r][k];
    }
    pivot_col.push_back(u);
    ++r;
  }
  for (std::size_t e = r; e < equations; ++e) {
    if (aug[e][unknowns] != 0) return std::nullopt;
  }
  RationalVector x(unknowns);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = aug[i][unknowns];
  return x;
}

ExactMatrix row_basis(const ExactMatrix& m) {
  SparseEchelon ech(m.cols());
  ExactMatrix out(0, m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (ech.insert(to_sparse_row(m.row(r)))) out.append_row(m.row(r));
  }
  return out;
}

bool in_rowspace(const ExactMatrix& m, std::span<const Rational> v) {
  if (m.rows() && v.size() != m.cols()) fail(ErrorCode::kShapeMismatch, "vector length differs from column count");
  SparseEchelon ech(v.size());
  for (std::size_t r = 0; r < m.rows(); ++r) ech.insert(to_sparse_row(m.row(r)));
  return ech.contains(to_sparse_row(v));
}

std::optional<ExactMatrix> inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::kShapeMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  ExactMatrix a = m;
  ExactMatrix inv = ExactMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    for (std::size_t k = 0; k < n; ++k) {
      std::swap(a(p, k), a(c, k));
      std::swap(inv(p, k), inv(c, k));
    }
    const Rational s = 1 / a(c, c);
    for (std::size_t k = 0; k < n; ++k) {
      a(c, k) *= s;
      inv(c, k) *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const Rational f = a(r, c);
      for (std::size_t k = 0; k < n; ++k) {
        a(r, k) -= f * a(c, k);
        inv(r, k) -= f * inv(c, k);
      }
    }
  }
  return inv;
}

}  // namespace fiberdim
