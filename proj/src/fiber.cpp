#include "fiberdim/fiber.hpp"

#include "fiberdim/error.hpp"
#include "fiberdim/multiplicity.hpp"
#include "fiberdim/polymatrix.hpp"

namespace fiberdim {

std::int64_t PointSampler::uniform(std::int64_t lo, std::int64_t hi) {
  const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t draw = engine_();
  return lo + static_cast<std::int64_t>(range == 0 ? draw : draw % range);
}

Integer PointSampler::uniform(const Integer& lo, const Integer& hi) {
  const Integer range = hi - lo + 1;
  Integer draw = 0;
  // Two extra words past the range size keep the modulo bias negligible.
  const std::size_t words = mpz_sizeinbase(range.get_mpz_t(), 2) / 64 + 2;
  for (std::size_t i = 0; i < words; ++i) {
    draw <<= 64;
    draw += Integer(std::to_string(engine_()));
  }
  return lo + draw % range;
}

Rational PointSampler::rational(const Integer& height) {
  Integer num = uniform(-height, height);
  Integer den = uniform(Integer(1), height);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

RationalVector PointSampler::point(std::size_t vars, const Integer& height) {
  RationalVector p;
  p.reserve(vars);
  for (std::size_t i = 0; i < vars; ++i) p.push_back(rational(height));
  return p;
}

Integer sample_height(std::size_t index) {
  Integer h;
  mpz_ui_pow_ui(h.get_mpz_t(), 10, index / 10);
  return h;
}

// ---------------------------------------------------------------------------

namespace {

ExactMatrix evaluated_generators(const Submodule& m, std::span<const Rational> point) {
  ExactMatrix values(0, m.ambient_rank());
  for (const auto& g : m.generators()) values.append_row(g.evaluate(point));
  return values;
}

}  // namespace

std::size_t fiber_dim_generic(const Submodule& m) {
  if (m.generators().empty()) return 0;
  return rank_generic(PolyMatrix::from_columns(m.vars(), m.ambient_rank(), m.generators()));
}

std::size_t fiber_dim_at(const Submodule& m, std::span<const Rational> point) {
  if (point.size() != m.vars()) fail(ErrorCode::kShapeMismatch, "point dimension differs from n");
  if (m.generators().empty()) return 0;
  return rank_exact(evaluated_generators(m, point));
}

RationalVector common_maximal_point(std::span<const Submodule> modules, std::uint64_t seed, std::size_t budget) {
  if (modules.empty()) fail(ErrorCode::kInvariantViolation, "common_maximal_point needs at least one module");
  for (const auto& m : modules) require_same_shape(modules.front(), m);
  std::vector<std::size_t> generic;
  for (const auto& m : modules) generic.push_back(fiber_dim_generic(m));
  PointSampler sampler(seed);
  for (std::size_t s = 0; s < budget; ++s) {
    RationalVector p = sampler.point(modules.front().vars(), sample_height(s));
    bool maximal = true;
    for (std::size_t i = 0; i < modules.size() && maximal; ++i) {
      maximal = fiber_dim_at(modules[i], p) == generic[i];
    }
    if (maximal) return p;
  }
  fail(ErrorCode::kSearchExhausted, "no maximal point found in " + std::to_string(budget) +
                                        " samples; maximal points are generic, so this indicates a bug");
}

RationalVector find_maximal_point(const Submodule& m, std::uint64_t seed, std::size_t budget) {
  return common_maximal_point(std::span<const Submodule>(&m, 1), seed, budget);
}

namespace {

FiberReport fiber_report_impl(const Submodule& m, const GradedSubmodule* graded, std::uint64_t seed,
                              std::optional<unsigned> cap) {
  FiberReport report;
  report.fd = fiber_dim_generic(m);
  report.method_values[kMethodGenericRank] = static_cast<std::int64_t>(report.fd);
  report.witness_point = find_maximal_point(m, seed);
  report.homogeneous = graded != nullptr;
  report.method_values[kMethodHilbertLeading] = std::nullopt;
  report.method_values[kMethodLimitFormula] = std::nullopt;
  if (graded) {
    const unsigned start = cap.value_or(graded->cap());
    HilbertTable table = hilbert_table(*graded, start);
    report.cap_used = start;
    if (!table.stabilized) {
      report.cap_used = 2 * start;
      table = hilbert_table(*graded, report.cap_used);
    }
    report.method_values[kMethodHilbertLeading] = table.leading_value();
    const LimitValue limit = limit_formula(*graded, start);
    report.method_values[kMethodLimitFormula] = limit.value;
    report.cap_used = std::max(report.cap_used, limit.cap_used);
  }
  report.agree = true;
  for (const auto& [name, value] : report.method_values) {
    if (value && *value != static_cast<std::int64_t>(report.fd)) report.agree = false;
  }
  return report;
}

}  // namespace

FiberReport fiber_report(const Submodule& m, std::uint64_t seed, std::optional<unsigned> cap) {
  if (!m.is_homogeneous()) return fiber_report_impl(m, nullptr, seed, cap);
  const GradedSubmodule graded(m);
  return fiber_report_impl(m, &graded, seed, cap);
}

FiberReport fiber_report(const GradedSubmodule& m, std::uint64_t seed, std::optional<unsigned> cap) {
  return fiber_report_impl(m, &m, seed, cap);
}

}  // namespace fiberdim
