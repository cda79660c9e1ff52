#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "fiberdim/graded.hpp"

namespace fiberdim {

/// Entry k is dim (Y + M_k)/M_k = sum_{j<k} dim Y_j, where M_k is the span of
/// everything of degree >= k, for k = 0..cap. The table is polynomial of
/// degree n eventually, so stabilization is tested on the (n+1)-th difference.
HilbertTable quotient_codim_table(const GradedSubmodule& y, unsigned cap);

/// dim X/M_k = N * C(k-1+n, n) for the free module X = Q[z]^N, k = 0..cap.
HilbertTable ambient_codim_table(std::size_t vars, std::size_t rank, unsigned cap);

struct LimitValue {
  std::int64_t value = 0;
  unsigned cap_used = 0;
  HilbertTable table;
};

/// The constant n-th difference of quotient_codim_table, i.e. n! times its
/// leading coefficient. Retries once at twice the cap before throwing
/// kNotStabilized.
LimitValue limit_formula(const GradedSubmodule& y, unsigned cap);
std::int64_t fd_by_limit_formula(const GradedSubmodule& y, unsigned cap);

struct MultiplicityReport {
  std::int64_t c_T = 0;
  std::int64_t c_S = 0;
  std::int64_t fd_limit = 0;
  unsigned stabilization_degree = 0;
  unsigned cap_used = 0;
  HilbertTable table;  // quotient_codim_table at cap_used
};

/// Samuel multiplicities of the ambient tuple and of the quotient by Y.
/// c_T is extracted from ambient_codim_table and checked to equal N; c_S is
/// c_T - fd_limit and is re-derived from dim X/(Y + M_k) independently.
/// Throws kInvariantViolation if either check fails.
MultiplicityReport samuel_quotient(const GradedSubmodule& y, unsigned cap);

/// N - dim Y_λ.
std::size_t cokernel_dim_at(const Submodule& y, std::span<const Rational> point);

}  // namespace fiberdim
