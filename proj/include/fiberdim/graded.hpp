#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fiberdim/echelon.hpp"
#include "fiberdim/matrix.hpp"
#include "fiberdim/poly.hpp"

namespace fiberdim {

/// Finitely generated submodule of Q[z_1..z_n]^N given by its generators.
/// Generators may be inhomogeneous; only shape is validated.
class Submodule {
 public:
  Submodule() = default;
  Submodule(std::size_t vars, std::size_t rank, std::vector<PolyVec> generators, std::string label = {});

  std::size_t vars() const noexcept { return vars_; }
  /// N, the rank of the ambient free module.
  std::size_t ambient_rank() const noexcept { return rank_; }
  const std::vector<PolyVec>& generators() const noexcept { return generators_; }
  const std::string& label() const noexcept { return label_; }

  bool is_homogeneous() const;
  /// Largest generator degree, -1 when every generator is zero (or there are none).
  int max_degree() const;

  /// Generators after the substitution z -> z + shift.
  Submodule translate(std::span<const Rational> shift) const;

 private:
  std::size_t vars_ = 0;
  std::size_t rank_ = 0;
  std::vector<PolyVec> generators_;
  std::string label_;
};

/// Basis of the degree-j component M_j in coordinates of (Q[z]^N)_j.
///
/// Column index of z^a e_i is index(a) * N + i, with index(a) the position of
/// z^a in monomials_of_degree(n, j).
struct ComponentBasis {
  unsigned degree = 0;
  std::size_t ambient_dim = 0;
  ExactMatrix basis;
  /// Echelon form of the same span, used for membership queries.
  std::shared_ptr<const SparseEchelon> echelon;

  std::size_t dim() const noexcept { return basis.rows(); }
};

/// Coordinates of a homogeneous degree-j vector in the component layout.
RationalVector component_coordinates(const PolyVec& f, unsigned degree);
PolyVec from_component_coordinates(std::span<const Rational> coords, std::size_t vars, std::size_t rank, unsigned degree);

/// Sequence of dimensions with its finite-difference data.
///
/// diffs[r][j] is the r-th backward difference at index j (zero for j < r).
/// The table is stabilized when the `order`-th difference vanishes on the
/// trailing `window` indices; the stabilization degree is the first index
/// from which the values follow a polynomial of degree < order.
struct HilbertTable {
  std::vector<std::int64_t> dims;
  std::vector<std::int64_t> partial_sums;  // partial_sums[k] = sum_{j<k} dims[j], k = 0..dims.size()
  std::vector<std::vector<std::int64_t>> diffs;
  unsigned order = 0;
  unsigned window = 0;
  bool stabilized = false;
  unsigned stabilization_degree = 0;

  unsigned cap() const { return static_cast<unsigned>(dims.size()) - 1; }
  /// The constant value of the (order-1)-th difference. Throws kNotStabilized.
  std::int64_t leading_value() const;
};

HilbertTable make_hilbert_table(std::vector<std::int64_t> values, unsigned order, unsigned window);

/// Homogeneous submodule with lazily computed, cached component bases.
class GradedSubmodule : public Submodule {
 public:
  GradedSubmodule();
  /// Throws Error(kInvalidInput) if a generator is inhomogeneous.
  explicit GradedSubmodule(Submodule base, std::optional<unsigned> cap = std::nullopt);
  GradedSubmodule(std::size_t vars, std::size_t rank, std::vector<PolyVec> generators,
                  std::optional<unsigned> cap = std::nullopt);

  /// Default degree cap: max generator degree + n + 8.
  static unsigned default_cap(const Submodule& m);
  /// Smallest cap at which stabilization can be detected: max degree + n + 2.
  static unsigned minimum_cap(const Submodule& m);

  unsigned cap() const noexcept { return cap_; }
  GradedSubmodule with_cap(unsigned cap) const;

  /// Cached basis of M_j. Safe to call concurrently.
  const ComponentBasis& component(unsigned degree) const;

  /// dim M_j, from preloaded dimensions when available, else from component().
  std::size_t component_dim(unsigned degree) const;

  /// Records known dimensions dim M_0.. (e.g. from an on-disk cache). Only
  /// dimension queries use them; bases are still computed on demand.
  void preload_dims(const std::vector<std::int64_t>& dims) const;

 private:
  struct Cache;
  unsigned cap_ = 0;
  std::shared_ptr<Cache> cache_;
};

ComponentBasis component_basis(const GradedSubmodule& m, unsigned degree);

/// dims of M_j for j = 0..cap, stabilization on the n-th difference over n+2 indices.
/// Throws kCapTooSmall when cap < max generator degree + n + 2.
HilbertTable hilbert_table(const GradedSubmodule& m, unsigned cap);

/// Generators concatenated. Throws kShapeMismatch on differing (n, N).
GradedSubmodule module_sum(const GradedSubmodule& a, const GradedSubmodule& b);
Submodule module_sum(const Submodule& a, const Submodule& b);

/// Basis of (M1 ∩ M2)_j = M1_j ∩ M2_j.
ComponentBasis module_intersect_component(const GradedSubmodule& a, const GradedSubmodule& b, unsigned degree);

/// Bases of (M1 ∩ M2)_j = M1_j ∩ M2_j for j = 0..cap.
std::vector<ComponentBasis> module_intersect_upto(const GradedSubmodule& a, const GradedSubmodule& b, unsigned cap);

/// Whether every homogeneous part of f lies in the matching component of m.
bool membership(const GradedSubmodule& m, const PolyVec& f);

/// dim T_k(M) = sum_{j<=k} dim M_j. Throws kCapTooSmall when k > m.cap().
std::int64_t jet_dimension(const GradedSubmodule& m, unsigned k);

/// Throws kShapeMismatch unless both modules live in the same Q[z]^N.
void require_same_shape(const Submodule& a, const Submodule& b);

}  // namespace fiberdim
