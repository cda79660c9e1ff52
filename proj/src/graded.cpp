#include "fiberdim/graded.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "fiberdim/error.hpp"

namespace fiberdim {
namespace {

std::uint64_t small_binomial(std::uint64_t top, std::uint64_t bottom) {
  if (bottom > top) return 0;
  bottom = std::min(bottom, top - bottom);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= bottom; ++i) r = r * (top - bottom + i) / i;
  return r;
}

std::uint64_t count_monomials(std::size_t vars, unsigned degree) {
  if (vars == 0) return degree == 0 ? 1 : 0;
  return small_binomial(degree + vars - 1, vars - 1);
}

// Position of m in monomials_of_degree(m.vars(), m.degree()).
std::uint64_t monomial_index(const Monomial& m) {
  const std::size_t n = m.vars();
  std::uint64_t index = 0;
  unsigned remaining = m.degree();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (unsigned e = m[i] + 1; e <= remaining; ++e) index += count_monomials(n - i - 1, remaining - e);
    remaining -= m[i];
  }
  return index;
}

void append_rows_for(const PolyVec& g, unsigned target, std::size_t rank, SparseEchelon& ech) {
  const auto d = g.homogeneous_degree();
  if (!d || *d > target) return;
  const std::size_t n = g.vars();
  // Flatten the generator once: (monomial, component, coefficient).
  struct Term {
    const Monomial* mono;
    std::uint32_t component;
    Rational coeff;
  };
  std::vector<Term> terms;
  for (std::size_t i = 0; i < rank; ++i) {
    for (const auto& [m, c] : g[i].terms()) terms.push_back({&m, static_cast<std::uint32_t>(i), c});
  }
  RationalVector coeffs;
  for (const auto& t : terms) coeffs.push_back(t.coeff);
  const Integer den = common_denominator(coeffs);
  std::vector<Integer> scaled;
  for (const auto& t : terms) scaled.push_back(den / t.coeff.get_den() * t.coeff.get_num());

  for (const Monomial& shift : monomials_of_degree(n, target - *d)) {
    SparseRow row;
    row.reserve(terms.size());
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const auto col = monomial_index(shift * *terms[k].mono) * rank + terms[k].component;
      row.emplace_back(static_cast<std::uint32_t>(col), scaled[k]);
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    ech.insert(std::move(row));
  }
}

ComponentBasis compute_component(const Submodule& m, unsigned degree) {
  const std::size_t rank = m.ambient_rank();
  ComponentBasis out;
  out.degree = degree;
  out.ambient_dim = count_monomials(m.vars(), degree) * rank;
  auto ech = std::make_shared<SparseEchelon>(out.ambient_dim);
  for (const auto& g : m.generators()) append_rows_for(g, degree, rank, *ech);
  out.basis = ExactMatrix(0, out.ambient_dim);
  for (const auto& [lead, row] : ech->pivots()) out.basis.append_row(to_dense(row, out.ambient_dim));
  out.echelon = std::move(ech);
  return out;
}

HilbertTable component_table(const GradedSubmodule& m, unsigned cap) {
  std::vector<std::int64_t> dims;
  for (unsigned j = 0; j <= cap; ++j) dims.push_back(static_cast<std::int64_t>(m.component_dim(j)));
  const auto n = static_cast<unsigned>(m.vars());
  return make_hilbert_table(std::move(dims), n, n + 2);
}

}  // namespace

// ---------------------------------------------------------------------------

Submodule::Submodule(std::size_t vars, std::size_t rank, std::vector<PolyVec> generators, std::string label)
    : vars_(vars), rank_(rank), generators_(std::move(generators)), label_(std::move(label)) {
  if (vars_ == 0) fail(ErrorCode::kShapeMismatch, "a module needs at least one variable");
  if (rank_ == 0) fail(ErrorCode::kShapeMismatch, "ambient rank N must be positive");
  for (const auto& g : generators_) {
    if (g.vars() != vars_ || g.length() != rank_) {
      fail(ErrorCode::kShapeMismatch, "generator shape differs from the declared (n, N)");
    }
  }
}

bool Submodule::is_homogeneous() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const PolyVec& g) { return g.is_homogeneous(); });
}

int Submodule::max_degree() const {
  int d = -1;
  for (const auto& g : generators_) d = std::max(d, g.degree());
  return d;
}

Submodule Submodule::translate(std::span<const Rational> shift) const {
  std::vector<PolyVec> moved;
  moved.reserve(generators_.size());
  for (const auto& g : generators_) moved.push_back(g.translate(shift));
  return Submodule(vars_, rank_, std::move(moved), label_);
}

void require_same_shape(const Submodule& a, const Submodule& b) {
  if (a.vars() != b.vars() || a.ambient_rank() != b.ambient_rank()) {
    fail(ErrorCode::kShapeMismatch, "modules live in different free modules: (n, N) = (" + std::to_string(a.vars()) +
                                        ", " + std::to_string(a.ambient_rank()) + ") vs (" +
                                        std::to_string(b.vars()) + ", " + std::to_string(b.ambient_rank()) + ")");
  }
}

// ---------------------------------------------------------------------------

RationalVector component_coordinates(const PolyVec& f, unsigned degree) {
  const std::size_t rank = f.length();
  RationalVector coords(count_monomials(f.vars(), degree) * rank);
  for (std::size_t i = 0; i < rank; ++i) {
    for (const auto& [m, c] : f[i].terms()) {
      if (m.degree() != degree) fail(ErrorCode::kInvariantViolation, "vector is not homogeneous of the requested degree");
      coords[monomial_index(m) * rank + i] = c;
    }
  }
  return coords;
}

PolyVec from_component_coordinates(std::span<const Rational> coords, std::size_t vars, std::size_t rank,
                                   unsigned degree) {
  const auto monos = monomials_of_degree(vars, degree);
  if (coords.size() != monos.size() * rank) fail(ErrorCode::kShapeMismatch, "coordinate vector has wrong length");
  PolyVec f(vars, rank);
  for (std::size_t k = 0; k < monos.size(); ++k) {
    for (std::size_t i = 0; i < rank; ++i) f[i].add_term(monos[k], coords[k * rank + i]);
  }
  return f;
}

// ---------------------------------------------------------------------------

std::int64_t HilbertTable::leading_value() const {
  if (!stabilized) {
    fail(ErrorCode::kNotStabilized, "difference of order " + std::to_string(order) + " not constant within cap " +
                                        std::to_string(cap()) + "; raise the degree cap");
  }
  return diffs[order - 1].back();
}

HilbertTable make_hilbert_table(std::vector<std::int64_t> values, unsigned order, unsigned window) {
  if (values.empty()) fail(ErrorCode::kCapTooSmall, "empty table");
  if (order == 0) fail(ErrorCode::kInvariantViolation, "difference order must be positive");
  HilbertTable t;
  t.order = order;
  t.window = window;
  t.dims = std::move(values);
  const std::size_t len = t.dims.size();
  t.partial_sums.assign(len + 1, 0);
  for (std::size_t k = 0; k < len; ++k) t.partial_sums[k + 1] = t.partial_sums[k] + t.dims[k];

  t.diffs.assign(order + 1, std::vector<std::int64_t>(len, 0));
  t.diffs[0] = t.dims;
  for (unsigned r = 1; r <= order; ++r) {
    for (std::size_t j = r; j < len; ++j) t.diffs[r][j] = t.diffs[r - 1][j] - t.diffs[r - 1][j - 1];
  }

  // First index j0 >= order from which the order-th difference stays zero.
  std::size_t j0 = len;
  while (j0 > order && t.diffs[order][j0 - 1] == 0) --j0;
  if (j0 < order) j0 = order;
  const std::size_t zeros = len > j0 ? len - j0 : 0;
  t.stabilized = zeros >= window;
  t.stabilization_degree = static_cast<unsigned>(t.stabilized ? j0 - order : len);
  return t;
}

// ---------------------------------------------------------------------------

struct GradedSubmodule::Cache {
  std::mutex mutex;
  std::map<unsigned, std::shared_ptr<const ComponentBasis>> components;
  std::map<unsigned, std::size_t> dims;
};

GradedSubmodule::GradedSubmodule() : cache_(std::make_shared<Cache>()) {}

GradedSubmodule::GradedSubmodule(Submodule base, std::optional<unsigned> cap)
    : Submodule(std::move(base)), cache_(std::make_shared<Cache>()) {
  for (std::size_t i = 0; i < generators().size(); ++i) {
    if (!generators()[i].is_homogeneous()) {
      fail(ErrorCode::kInvalidInput, "inhomogeneous input: generator " + std::to_string(i + 1) +
                                         " mixes degrees; the graded engine needs homogeneous generators");
    }
  }
  cap_ = cap.value_or(default_cap(*this));
}

GradedSubmodule::GradedSubmodule(std::size_t vars, std::size_t rank, std::vector<PolyVec> generators,
                                 std::optional<unsigned> cap)
    : GradedSubmodule(Submodule(vars, rank, std::move(generators)), cap) {}

unsigned GradedSubmodule::default_cap(const Submodule& m) {
  return static_cast<unsigned>(std::max(m.max_degree(), 0)) + static_cast<unsigned>(m.vars()) + 8;
}

unsigned GradedSubmodule::minimum_cap(const Submodule& m) {
  return static_cast<unsigned>(std::max(m.max_degree(), 0)) + static_cast<unsigned>(m.vars()) + 2;
}

GradedSubmodule GradedSubmodule::with_cap(unsigned cap) const {
  GradedSubmodule copy = *this;
  copy.cap_ = cap;
  return copy;
}

const ComponentBasis& GradedSubmodule::component(unsigned degree) const {
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->components.find(degree);
    if (it != cache_->components.end()) return *it->second;
  }
  auto computed = std::make_shared<const ComponentBasis>(compute_component(*this, degree));
  std::lock_guard lock(cache_->mutex);
  auto [it, inserted] = cache_->components.emplace(degree, std::move(computed));
  return *it->second;
}

std::size_t GradedSubmodule::component_dim(unsigned degree) const {
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->dims.find(degree); it != cache_->dims.end()) return it->second;
  }
  return component(degree).dim();
}

void GradedSubmodule::preload_dims(const std::vector<std::int64_t>& dims) const {
  std::lock_guard lock(cache_->mutex);
  for (unsigned j = 0; j < dims.size(); ++j) cache_->dims[j] = static_cast<std::size_t>(dims[j]);
}

ComponentBasis component_basis(const GradedSubmodule& m, unsigned degree) { return m.component(degree); }

HilbertTable hilbert_table(const GradedSubmodule& m, unsigned cap) {
  if (cap < GradedSubmodule::minimum_cap(m)) {
    fail(ErrorCode::kCapTooSmall, "cap too small: need at least " + std::to_string(GradedSubmodule::minimum_cap(m)) +
                                      " (max generator degree + n + 2), got " + std::to_string(cap));
  }
  return component_table(m, cap);
}

Submodule module_sum(const Submodule& a, const Submodule& b) {
  require_same_shape(a, b);
  std::vector<PolyVec> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Submodule(a.vars(), a.ambient_rank(), std::move(gens));
}

GradedSubmodule module_sum(const GradedSubmodule& a, const GradedSubmodule& b) {
  return GradedSubmodule(module_sum(static_cast<const Submodule&>(a), static_cast<const Submodule&>(b)),
                         std::max(a.cap(), b.cap()));
}

ComponentBasis module_intersect_component(const GradedSubmodule& a, const GradedSubmodule& b, unsigned degree) {
  require_same_shape(a, b);
  const ComponentBasis& ca = a.component(degree);
  const ComponentBasis& cb = b.component(degree);
  ComponentBasis c;
  c.degree = degree;
  c.ambient_dim = ca.ambient_dim;
  c.basis = rowspace_intersect(ca.basis, cb.basis);
  if (c.basis.rows() == 0) c.basis = ExactMatrix(0, c.ambient_dim);
  auto ech = std::make_shared<SparseEchelon>(c.ambient_dim);
  for (std::size_t r = 0; r < c.basis.rows(); ++r) ech->insert(to_sparse_row(c.basis.row(r)));
  c.echelon = std::move(ech);
  return c;
}

std::vector<ComponentBasis> module_intersect_upto(const GradedSubmodule& a, const GradedSubmodule& b, unsigned cap) {
  require_same_shape(a, b);
  std::vector<ComponentBasis> out;
  out.reserve(cap + 1);
  for (unsigned j = 0; j <= cap; ++j) out.push_back(module_intersect_component(a, b, j));
  return out;
}

bool membership(const GradedSubmodule& m, const PolyVec& f) {
  if (f.vars() != m.vars() || f.length() != m.ambient_rank()) {
    fail(ErrorCode::kShapeMismatch, "vector shape differs from the module's (n, N)");
  }
  for (unsigned d : f.degrees_present()) {
    const ComponentBasis& comp = m.component(d);
    if (!comp.echelon->contains(to_sparse_row(component_coordinates(f.homogeneous_part(d), d)))) return false;
  }
  return true;
}

std::int64_t jet_dimension(const GradedSubmodule& m, unsigned k) {
  if (k > m.cap()) {
    fail(ErrorCode::kCapTooSmall, "jet order " + std::to_string(k) + " exceeds the materialized cap " +
                                      std::to_string(m.cap()));
  }
  std::int64_t total = 0;
  for (unsigned j = 0; j <= k; ++j) total += static_cast<std::int64_t>(m.component_dim(j));
  return total;
}

}  // namespace fiberdim
