#include "fiberdim/multiplicity.hpp"

#include "fiberdim/error.hpp"
#include "fiberdim/fiber.hpp"

namespace fiberdim {

HilbertTable quotient_codim_table(const GradedSubmodule& y, unsigned cap) {
  if (cap < GradedSubmodule::minimum_cap(y)) {
    fail(ErrorCode::kCapTooSmall, "cap too small: need at least " + std::to_string(GradedSubmodule::minimum_cap(y)) +
                                      ", got " + std::to_string(cap));
  }
  std::vector<std::int64_t> codims(cap + 1, 0);
  for (unsigned k = 1; k <= cap; ++k) codims[k] = codims[k - 1] + static_cast<std::int64_t>(y.component_dim(k - 1));
  const auto n = static_cast<unsigned>(y.vars());
  return make_hilbert_table(std::move(codims), n + 1, n + 2);
}

HilbertTable ambient_codim_table(std::size_t vars, std::size_t rank, unsigned cap) {
  std::vector<std::int64_t> codims(cap + 1, 0);
  for (unsigned k = 1; k <= cap; ++k) {
    codims[k] = static_cast<std::int64_t>(rank) * binomial(k - 1 + vars, vars).get_si();
  }
  const auto n = static_cast<unsigned>(vars);
  return make_hilbert_table(std::move(codims), n + 1, n + 2);
}

LimitValue limit_formula(const GradedSubmodule& y, unsigned cap) {
  LimitValue out;
  out.cap_used = cap;
  out.table = quotient_codim_table(y, cap);
  if (!out.table.stabilized) {
    out.cap_used = 2 * cap;
    out.table = quotient_codim_table(y, out.cap_used);
  }
  out.value = out.table.leading_value();
  return out;
}

std::int64_t fd_by_limit_formula(const GradedSubmodule& y, unsigned cap) { return limit_formula(y, cap).value; }

MultiplicityReport samuel_quotient(const GradedSubmodule& y, unsigned cap) {
  const LimitValue limit = limit_formula(y, cap);
  const unsigned used = limit.cap_used;
  const std::int64_t rank = static_cast<std::int64_t>(y.ambient_rank());

  const HilbertTable ambient = ambient_codim_table(y.vars(), y.ambient_rank(), used);
  MultiplicityReport report;
  report.c_T = ambient.leading_value();
  if (report.c_T != rank) {
    fail(ErrorCode::kInvariantViolation, "ambient multiplicity " + std::to_string(report.c_T) + " differs from N = " +
                                             std::to_string(rank));
  }
  report.fd_limit = limit.value;
  report.c_S = report.c_T - report.fd_limit;
  report.cap_used = used;
  report.stabilization_degree = limit.table.stabilization_degree;
  report.table = limit.table;

  // dim X/(Y + M_k), extracted on its own.
  std::vector<std::int64_t> quotient(used + 1);
  for (unsigned k = 0; k <= used; ++k) quotient[k] = ambient.dims[k] - limit.table.dims[k];
  const HilbertTable direct = make_hilbert_table(std::move(quotient), limit.table.order, limit.table.window);
  if (direct.leading_value() != report.c_S) {
    fail(ErrorCode::kInvariantViolation, "quotient multiplicity " + std::to_string(direct.leading_value()) +
                                             " disagrees with c_T - fd = " + std::to_string(report.c_S));
  }
  return report;
}

std::size_t cokernel_dim_at(const Submodule& y, std::span<const Rational> point) {
  return y.ambient_rank() - fiber_dim_at(y, point);
}

}  // namespace fiberdim
