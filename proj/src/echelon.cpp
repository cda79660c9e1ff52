#include "fiberdim/echelon.hpp"

#include "fiberdim/error.hpp"

namespace fiberdim {
namespace {

void make_primitive(SparseRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g == 1) return;
  for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// row <- a*row - b*pivot, both starting at the same column, which cancels.
SparseRow combine(const SparseRow& row, const SparseRow& pivot, const Integer& a, const Integer& b) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 1, k = 1;
  Integer v;
  while (i < row.size() || k < pivot.size()) {
    if (k == pivot.size() || (i < row.size() && row[i].first < pivot[k].first)) {
      out.emplace_back(row[i].first, a * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[k].first < row[i].first) {
      out.emplace_back(pivot[k].first, -b * pivot[k].second);
      ++k;
    } else {
      v = a * row[i].second - b * pivot[k].second;
      if (v != 0) out.emplace_back(row[i].first, v);
      ++i;
      ++k;
    }
  }
  return out;
}

}  // namespace

SparseRow to_sparse_row(std::span<const Rational> values) {
  const Integer den = common_denominator(values);
  SparseRow row;
  Integer scaled;
  for (std::size_t c = 0; c < values.size(); ++c) {
    if (values[c] == 0) continue;
    scaled = den / values[c].get_den();
    scaled *= values[c].get_num();
    row.emplace_back(static_cast<std::uint32_t>(c), scaled);
  }
  return row;
}

RationalVector to_dense(const SparseRow& row, std::size_t cols) {
  RationalVector out(cols);
  for (const auto& [c, v] : row) out.at(c) = Rational(v);
  return out;
}

SparseRow SparseEchelon::reduce(SparseRow row) const {
  make_primitive(row);
  Integer g, a, b;
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) break;
    const SparseRow& pivot = it->second;
    mpz_gcd(g.get_mpz_t(), pivot.front().second.get_mpz_t(), row.front().second.get_mpz_t());
    mpz_divexact(a.get_mpz_t(), pivot.front().second.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), row.front().second.get_mpz_t(), g.get_mpz_t());
    row = combine(row, pivot, a, b);
    make_primitive(row);
  }
  return row;
}

bool SparseEchelon::insert(SparseRow row) {
  if (!row.empty() && row.back().first >= cols_) {
    fail(ErrorCode::kShapeMismatch, "sparse row exceeds echelon width");
  }
  row = reduce(std::move(row));
  if (row.empty()) return false;
  const auto lead = row.front().first;
  pivots_.emplace(lead, std::move(row));
  return true;
}

bool SparseEchelon::contains(SparseRow row) const { return reduce(std::move(row)).empty(); }

}  // namespace fiberdim
