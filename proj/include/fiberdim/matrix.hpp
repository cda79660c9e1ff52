#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fiberdim/rational.hpp"

namespace fiberdim {

/// Dense row-major matrix of exact rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Builds from row vectors; all rows must share `cols` entries.
  static ExactMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);
  static ExactMatrix identity(std::size_t size);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  ExactMatrix transpose() const;
  /// Rows of *this followed by rows of `below`; column counts must agree.
  ExactMatrix stack(const ExactMatrix& below) const;
  void append_row(std::span<const Rational> values);

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
RationalVector operator*(const ExactMatrix& a, std::span<const Rational> v);

/// Rank over Q by Bareiss fraction-free elimination on the row-scaled integer
/// matrix. The input is not modified.
std::size_t rank_exact(const ExactMatrix& m);

/// Rows form a basis of rowspace(a) ∩ rowspace(b) (Zassenhaus sum/intersection).
ExactMatrix rowspace_intersect(const ExactMatrix& a, const ExactMatrix& b);

/// One x with x^T m = rhs, or nullopt when rhs is outside the row space of m.
/// Free unknowns are set to zero and earlier rows are preferred as pivots, so the
/// solution only involves the leading rows when possible.
std::optional<RationalVector> solve_exact(const ExactMatrix& m, std::span<const Rational> rhs);

/// Greedy basis of the row space made of original rows (earliest rows first).
ExactMatrix row_basis(const ExactMatrix& m);

bool in_rowspace(const ExactMatrix& m, std::span<const Rational> v);

/// Inverse of a square matrix, nullopt if singular.
std::optional<ExactMatrix> inverse(const ExactMatrix& m);

}  // namespace fiberdim
