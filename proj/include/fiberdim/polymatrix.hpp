#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fiberdim/matrix.hpp"
#include "fiberdim/poly.hpp"

namespace fiberdim {

/// Dense matrix with polynomial entries, all in the same ring Q[z_1..z_n].
class PolyMatrix {
 public:
  PolyMatrix() = default;
  /// Zero matrix.
  PolyMatrix(std::size_t vars, std::size_t rows, std::size_t cols);

  /// Columns are the given vectors (an N x k matrix for k vectors of length N).
  static PolyMatrix from_columns(std::size_t vars, std::size_t length, std::span<const PolyVec> columns);
  static PolyMatrix identity(std::size_t vars, std::size_t size);

  std::size_t vars() const noexcept { return vars_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  MultiPoly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const MultiPoly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  PolyVec column(std::size_t c) const;
  ExactMatrix evaluate(std::span<const Rational> point) const;
  PolyMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  bool is_zero() const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t vars_ = 0;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<MultiPoly> data_;
};

/// Rank over the rational function field Q(z), by Bareiss elimination with
/// exact polynomial division. The pivot at each step is a nonzero entry of
/// lowest total degree (ties broken by fewest terms, then position).
std::size_t rank_generic(const PolyMatrix& m);

/// Determinant of a square polynomial matrix, division-exact Bareiss.
MultiPoly determinant(const PolyMatrix& m);

/// Classical adjugate (transposed cofactor matrix): adjugate(m) * m = det(m) * I.
PolyMatrix adjugate(const PolyMatrix& m);

/// det(m) on the diagonal, zero elsewhere.
PolyMatrix scalar_diagonal(const MultiPoly& value, std::size_t size);

}  // namespace fiberdim
