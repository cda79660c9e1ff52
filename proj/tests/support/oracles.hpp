#pragma once

// Test-only reference implementations. Nothing here shares code paths with
// the library's echelon, component layout or Bareiss routines.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "fiberdim/graded.hpp"

namespace oracle {

using Row = std::vector<mpq_class>;

// Textbook Gaussian elimination over Q.
std::size_t naive_rank(std::vector<Row> rows);

// dim M_j from every product z^a g_i of degree j, own monomial indexing.
std::int64_t brute_component_dim(const fiberdim::Submodule& m, unsigned degree);
std::vector<std::int64_t> brute_hilbert(const fiberdim::Submodule& m, unsigned cap);

// dim (M1_j ∩ M2_j) through Grassmann on naive ranks.
std::int64_t brute_intersection_dim(const fiberdim::Submodule& a, const fiberdim::Submodule& b, unsigned degree);

// Whether the homogeneous parts of f lie in the matching components of m.
bool brute_membership(const fiberdim::Submodule& m, const fiberdim::PolyVec& f);

// Rank of the generator values at a point, naive elimination.
std::size_t naive_fiber_rank(const std::vector<fiberdim::PolyVec>& vs, const std::vector<mpq_class>& point);

// 1 / (coefficient of z^a w^a in sum_k a_k <z, w>^k), by direct expansion
// in 2n variables. weights must reach index |a|.
mpq_class expanded_norm_squared(const std::vector<unsigned>& alpha, const std::vector<mpq_class>& weights);

// order-th backward difference at the last index.
std::int64_t last_difference(const std::vector<std::int64_t>& values, unsigned order);

}  // namespace oracle
