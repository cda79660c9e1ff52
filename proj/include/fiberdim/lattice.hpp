#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fiberdim/graded.hpp"
#include "fiberdim/polymatrix.hpp"

namespace fiberdim {

struct LatticeReport {
  std::int64_t fd1 = 0;
  std::int64_t fd2 = 0;
  std::int64_t fd_sum = 0;
  std::int64_t fd_cap = 0;
  std::int64_t d_prime = 0;  // fd1 + fd2 - fd_sum
  bool equality_holds = false;
  unsigned cap_used = 0;
  HilbertTable intersection_table;
  RationalVector point;  // common maximal point, set when witnesses were built
  std::size_t witness_count = 0;
  std::vector<PolyVec> witnesses;
};

/// fd1, fd2, fd_sum by generic rank; fd_cap from the Hilbert table of the
/// degree-wise intersection. With `with_witnesses`, also runs the scaffold
/// construction at a common maximal point and validates every witness by
/// membership in both modules. If the intersection table has not
/// stabilized, extends it degree by degree up to twice the cap.
LatticeReport lattice_check(const GradedSubmodule& m1, const GradedSubmodule& m2, std::optional<unsigned> cap,
                            std::uint64_t seed, bool with_witnesses = false);

/// Pointwise form of the lattice inequality for arbitrary (possibly
/// inhomogeneous) modules, using generic ranks only.
struct LatticeInequality {
  std::int64_t fd1 = 0;
  std::int64_t fd2 = 0;
  std::int64_t fd_sum = 0;
  /// dim (M1)_λ ∩ (M2)_λ at a common maximal point λ; equals fd1 + fd2 - fd_sum.
  std::int64_t fiber_intersection = 0;
  /// Lower bound for fd(M1 ∩ M2): rank at λ of the intersection of the
  /// degree-filtered pieces {deg <= filter_degree} of M1 and M2.
  std::int64_t fd_cap_lower = 0;
  unsigned filter_degree = 0;
  RationalVector point;
  bool holds = false;  // fd1 + fd2 >= fd_sum + fd_cap_lower
};

LatticeInequality lattice_inequality(const Submodule& m1, const Submodule& m2, unsigned filter_degree,
                                     std::uint64_t seed);

/// Intermediate objects of the witness construction at a common maximal point.
///
/// basis holds e_1..e_N as columns: first E1 (d1 vectors), then E2 (d2), then
/// E = (M1)_λ ∩ (M2)_λ (d'), then a completion by standard unit vectors.
/// All coordinates below are taken with respect to this basis.
struct WitnessScaffold {
  RationalVector point;
  std::size_t vars = 0;
  std::size_t rank = 0;
  std::size_t d1 = 0, d2 = 0, d_prime = 0, d = 0;
  ExactMatrix basis;          // N x N, columns e_k
  ExactMatrix basis_inverse;  // coordinates: basis_inverse * v
  std::vector<PolyVec> h;     // lifts in M1 + M2 with h_i(λ) = e_i, i < d
  PolyMatrix theta;           // d x d, theta(i, j) = j-th coordinate of h_i
  PolyMatrix theta_adjugate;  // adj(theta) * theta = det(theta) I
  MultiPoly theta_det;
  std::vector<PolyVec> f;     // in M1, values (e_1..e_d1, e_{d1+d2+1}..e_d)
  std::vector<PolyVec> g;     // in M2, values (e_{d1+1}..e_d)
  PolyMatrix delta0;          // d x d, columns F_1..F_d1, G_1..G_d2, F_{d1+1}..F_{d1+d'}
  PolyMatrix delta1;          // d x d', columns G_{d2+1}..G_{d2+d'}
  MultiPoly delta0_det;
  PolyMatrix gamma;           // adj(delta0) * delta1
  std::vector<std::vector<MultiPoly>> r;  // r_j, length d + d'
};

/// Builds the scaffold. λ must be maximal for m1, m2 and m1 + m2 (kPointNotMaximal
/// otherwise). Lifts are constant combinations of generators, preferring
/// low-degree generators. Verifies theta(λ) = I, adj(theta) theta = det(theta) I,
/// det(delta0)(λ) = 1 and delta * r_j = 0, throwing kInvariantViolation on failure.
WitnessScaffold build_witness_scaffold(const Submodule& m1, const Submodule& m2, std::span<const Rational> point);

/// The d' elements of M1 ∩ M2. Each is computed once from the F's and once
/// from the G's; the two must agree as polynomials (kIdentityViolated
/// otherwise). Their values at λ must have rank d' (kInvariantViolation).
std::vector<PolyVec> extract_witnesses(const WitnessScaffold& s);

}  // namespace fiberdim
