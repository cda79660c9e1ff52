#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "fiberdim/rational.hpp"

namespace fiberdim {

/// Sparse integer row, sorted by column, no zero entries.
using SparseRow = std::vector<std::pair<std::uint32_t, Integer>>;

/// Scales a rational row by the common denominator and drops zeros.
SparseRow to_sparse_row(std::span<const Rational> values);

RationalVector to_dense(const SparseRow& row, std::size_t cols);

/// Incremental row echelon form over Z with primitive rows.
///
/// Rows are kept primitive (content 1, positive leading entry) and reduced
/// fraction-free: r <- (p_0/g) r - (r_0/g) p with g = gcd of the leading
/// entries. A new row is inserted once its leading column has no pivot, so
/// rows with fresh leading columns cost nothing beyond the normalization.
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return pivots_.size(); }

  /// Reduces and stores the row. Returns true iff the rank grew.
  bool insert(SparseRow row);

  /// True iff the row lies in the span of the stored rows.
  bool contains(SparseRow row) const;

  /// Pivot rows keyed by their leading column.
  const std::map<std::uint32_t, SparseRow>& pivots() const noexcept { return pivots_; }

 private:
  SparseRow reduce(SparseRow row) const;

  std::size_t cols_;
  std::map<std::uint32_t, SparseRow> pivots_;
};

}  // namespace fiberdim
