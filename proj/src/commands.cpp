#include "fiberdim/commands.hpp"

#include <sstream>

#include "fiberdim/error.hpp"
#include "fiberdim/fiber.hpp"
#include "fiberdim/lattice.hpp"
#include "fiberdim/models.hpp"
#include "fiberdim/multiplicity.hpp"

namespace fiberdim {
namespace {

using nlohmann::json;

json rationals(std::span<const Rational> values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

json polys(const std::vector<PolyVec>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(to_string(v));
  return out;
}

json poly_matrix(const PolyMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

json exact_matrix(const ExactMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(rationals(m.row(r)));
  return out;
}

json table_json(const HilbertTable& t) {
  json out = {{"dims", t.dims},
              {"partial_sums", t.partial_sums},
              {"difference_order", t.order},
              {"window", t.window},
              {"stabilized", t.stabilized}};
  if (t.stabilized) {
    out["stabilization_degree"] = t.stabilization_degree;
    out["leading_value"] = t.leading_value();
  }
  return out;
}

json input_json(const Submodule& m) {
  return {{"digest", module_digest(m)},
          {"label", m.label()},
          {"n", m.vars()},
          {"N", m.ambient_rank()},
          {"generators", polys(m.generators())},
          {"homogeneous", m.is_homogeneous()}};
}

json header(const std::string& command, std::vector<const Submodule*> inputs, const RunOptions& opts) {
  json out;
  out["command"] = command;
  out["seed"] = opts.seed;
  out["inputs"] = json::array();
  for (const auto* m : inputs) out["inputs"].push_back(input_json(*m));
  if (opts.max_degree) out["max_degree"] = *opts.max_degree;
  if (opts.translate) out["translate"] = rationals(*opts.translate);
  return out;
}

Submodule translated(const Submodule& m, const RunOptions& opts) {
  if (!opts.translate) return m;
  if (opts.translate->size() != m.vars()) {
    fail(ErrorCode::kShapeMismatch, "shape mismatch: --translate has " + std::to_string(opts.translate->size()) +
                                        " coordinates, module has n = " + std::to_string(m.vars()));
  }
  return m.translate(*opts.translate);
}

GradedSubmodule require_graded(const Submodule& m, const std::string& command) {
  if (!m.is_homogeneous()) {
    fail(ErrorCode::kInvalidInput, "inhomogeneous input: '" + command +
                                       "' needs homogeneous generators (use 'fd' for the generic-rank route)");
  }
  return GradedSubmodule(m);
}

unsigned start_cap(const GradedSubmodule& m, const RunOptions& opts) {
  const unsigned cap = opts.max_degree.value_or(m.cap());
  const unsigned least = GradedSubmodule::minimum_cap(m);
  if (cap < least) {
    fail(ErrorCode::kCapTooSmall, "cap too small: --max-degree " + std::to_string(cap) + " is below " +
                                      std::to_string(least) + " (max generator degree + n + 2)");
  }
  return cap;
}

// Component dimensions are the expensive part; the cache only short-cuts them.
void preload(const GradedSubmodule& m, unsigned cap, const RunOptions& opts) {
  if (!opts.cache.enabled()) return;
  const std::string digest = module_digest(m);
  for (unsigned c : {2 * cap, cap}) {
    if (auto dims = opts.cache.load(digest, c)) {
      m.preload_dims(*dims);
      return;
    }
  }
}

void persist(const GradedSubmodule& m, unsigned cap_used, const RunOptions& opts) {
  if (!opts.cache.enabled()) return;
  std::vector<std::int64_t> dims;
  for (unsigned j = 0; j <= cap_used; ++j) dims.push_back(static_cast<std::int64_t>(m.component_dim(j)));
  opts.cache.store(module_digest(m), cap_used, dims);
}

}  // namespace

RunResult cmd_fd(const Submodule& input, const RunOptions& opts) {
  const Submodule m = translated(input, opts);
  RunResult out;
  out.report = header("fd", {&input}, opts);
  FiberReport fr;
  if (m.is_homogeneous()) {
    const GradedSubmodule graded(m);
    const unsigned cap = start_cap(graded, opts);
    preload(graded, cap, opts);
    fr = fiber_report(graded, opts.seed, cap);
    persist(graded, fr.cap_used, opts);
    out.report["cap_used"] = fr.cap_used;
  } else {
    out.warnings.push_back(std::string("inhomogeneous input") + (opts.translate ? " after translation" : "") +
                           ": only the generic-rank method applies");
    fr = fiber_report(m, opts.seed);
  }
  if (opts.translate) out.report["translated_generators"] = polys(m.generators());
  json methods = json::object();
  for (const auto& [name, value] : fr.method_values) methods[name] = value ? json(*value) : json(nullptr);
  json agreement = json::object();
  for (const auto& [a, va] : fr.method_values) {
    for (const auto& [b, vb] : fr.method_values) {
      agreement[a][b] = (va && vb) ? json(*va == *vb) : json(nullptr);
    }
  }
  out.report["results"] = {{"fd", fr.fd},
                           {"methods", methods},
                           {"agreement", agreement},
                           {"all_agree", fr.agree},
                           {"homogeneous", fr.homogeneous},
                           {"maximal_point", rationals(fr.witness_point)},
                           {"fiber_dim_at_point", fiber_dim_at(m, fr.witness_point)}};
  if (!fr.agree) fail(ErrorCode::kInvariantViolation, "fd methods disagree: " + methods.dump());
  return out;
}

RunResult cmd_hilbert(const Submodule& input, const RunOptions& opts) {
  const GradedSubmodule m = require_graded(translated(input, opts), "hilbert");
  RunResult out;
  out.report = header("hilbert", {&input}, opts);
  unsigned cap = start_cap(m, opts);
  preload(m, cap, opts);
  HilbertTable table = hilbert_table(m, cap);
  if (!table.stabilized) {
    cap *= 2;
    table = hilbert_table(m, cap);
  }
  std::vector<std::int64_t> jets;
  for (unsigned k = 0; k <= cap; ++k) jets.push_back(jet_dimension(m, k));
  const auto n = static_cast<unsigned>(m.vars());
  const HilbertTable jet_table = make_hilbert_table(jets, n + 1, n + 2);
  persist(m, cap, opts);
  out.report["cap_used"] = cap;
  out.report["results"] = {{"hilbert", table_json(table)}, {"jets", table_json(jet_table)}};
  out.report["results"]["fd"] = table.leading_value();
  out.report["results"]["fd_from_jets"] = jet_table.leading_value();
  return out;
}

RunResult cmd_samuel(const Submodule& input, const RunOptions& opts) {
  const GradedSubmodule m = require_graded(translated(input, opts), "samuel");
  RunResult out;
  out.report = header("samuel", {&input}, opts);
  const unsigned cap = start_cap(m, opts);
  preload(m, cap, opts);
  const MultiplicityReport r = samuel_quotient(m, cap);
  persist(m, r.cap_used, opts);
  out.report["cap_used"] = r.cap_used;
  out.report["results"] = {{"c_T", r.c_T},
                           {"c_S", r.c_S},
                           {"fd_limit", r.fd_limit},
                           {"stabilization_degree", r.stabilization_degree},
                           {"quotient_codim", table_json(r.table)}};
  return out;
}

RunResult cmd_lattice(const Submodule& a, const Submodule& b, const RunOptions& opts) {
  require_same_shape(a, b);
  const GradedSubmodule m1 = require_graded(a, "lattice");
  const GradedSubmodule m2 = require_graded(b, "lattice");
  RunResult out;
  out.report = header("lattice", {&a, &b}, opts);
  std::optional<unsigned> cap;
  if (opts.max_degree) cap = std::max(start_cap(m1, opts), start_cap(m2, opts));
  const LatticeReport r = lattice_check(m1, m2, cap, opts.seed, opts.witness);
  out.report["cap_used"] = r.cap_used;
  json res = {{"fd1", r.fd1},
              {"fd2", r.fd2},
              {"fd_sum", r.fd_sum},
              {"fd_intersection", r.fd_cap},
              {"d_prime", r.d_prime},
              {"equality_holds", r.equality_holds},
              {"intersection", table_json(r.intersection_table)}};
  if (opts.witness) {
    res["point"] = rationals(r.point);
    res["witness_count"] = r.witness_count;
    res["witnesses"] = polys(r.witnesses);
  }
  out.report["results"] = std::move(res);
  if (!r.equality_holds) fail(ErrorCode::kInvariantViolation, "lattice equality failed: " + out.report["results"].dump());
  return out;
}

RunResult cmd_witness(const Submodule& a, const Submodule& b, const RunOptions& opts) {
  require_same_shape(a, b);
  const GradedSubmodule m1 = require_graded(a, "witness");
  const GradedSubmodule m2 = require_graded(b, "witness");
  RunResult out;
  out.report = header("witness", {&a, &b}, opts);
  const std::vector<Submodule> all{m1, m2, module_sum(a, b)};
  const RationalVector point = common_maximal_point(all, opts.seed);
  const WitnessScaffold s = build_witness_scaffold(m1, m2, point);
  const std::vector<PolyVec> witnesses = extract_witnesses(s);
  json members = json::array();
  for (const auto& w : witnesses) {
    const bool ok = membership(m1, w) && membership(m2, w);
    if (!ok) fail(ErrorCode::kInvariantViolation, "witness " + to_string(w) + " is not in both modules");
    members.push_back(ok);
  }
  json values = json::array();
  for (const auto& w : witnesses) values.push_back(rationals(w.evaluate(point)));
  json r_vectors = json::array();
  for (const auto& rj : s.r) {
    json row = json::array();
    for (const auto& p : rj) row.push_back(to_string(p));
    r_vectors.push_back(std::move(row));
  }
  out.report["results"] = {{"point", rationals(point)},
                           {"d1", s.d1},
                           {"d2", s.d2},
                           {"d_prime", s.d_prime},
                           {"d", s.d},
                           {"basis_columns", exact_matrix(s.basis.transpose())},
                           {"lifts", polys(s.h)},
                           {"theta", poly_matrix(s.theta)},
                           {"theta_det", to_string(s.theta_det)},
                           {"f", polys(s.f)},
                           {"g", polys(s.g)},
                           {"delta0_det", to_string(s.delta0_det)},
                           {"gamma", poly_matrix(s.gamma)},
                           {"r", r_vectors},
                           {"witnesses", polys(witnesses)},
                           {"witness_values", values},
                           {"membership", members}};
  return out;
}

RunResult cmd_model(const std::string& preset, const Submodule& input, const RunOptions& opts) {
  const WeightSequence weights = weight_preset(preset, input.vars());
  const GradedSubmodule m = require_graded(translated(input, opts), "model");
  RunResult out;
  out.report = header("model", {&input}, opts);
  const unsigned cap = start_cap(m, opts);
  if (auto have = weights.materialized(); have && *have <= cap) {
    fail(ErrorCode::kCapTooSmall, "cap too small: explicit weights cover degrees 0.." + std::to_string(*have - 1) +
                                      " but the cap is " + std::to_string(cap) + "; give more weights");
  }
  preload(m, cap, opts);
  const GradedModelSpace space(m.vars(), m.ambient_rank(), weights, cap);
  std::vector<std::int64_t> projected;
  for (unsigned k = 0; k <= cap; ++k) projected.push_back(projection_dims(space, m, k));
  const auto n = static_cast<unsigned>(m.vars());
  const HilbertTable table = make_hilbert_table(projected, n + 1, n + 2);
  const HilbertTable quotient = quotient_codim_table(m, cap);
  persist(m, cap, opts);
  if (table.dims != quotient.dims) {
    fail(ErrorCode::kInvariantViolation, "projection table differs from the quotient codimension table");
  }
  const GradedAxiomReport axioms = graded_axiom_check(space, cap);
  const RatioBounds ratios = ratio_bounds(weights, cap);
  json kernels = json::array();
  for (const auto& [z, w] : opts.kernel_points) {
    kernels.push_back({{"z", rationals(z)}, {"w", rationals(w)}, {"terms", cap},
                       {"value", to_string(kernel_eval(space, z, w, cap))}});
  }
  out.report["cap_used"] = cap;
  out.report["results"] = {
      {"preset", weights.name()},
      {"generating_function", weights.generator_description()},
      {"weight_ratio_min", to_string(ratios.min)},
      {"weight_ratio_max", to_string(ratios.max)},
      {"projection", table_json(table)},
      {"matches_quotient_table", true},
      {"axioms", {{"shift", axioms.shift_ok}, {"exhausts", axioms.exhausts_ok},
                  {"closed_range", "not checked (infinite-dimensional condition)"}}},
      {"kernel_evaluations", kernels}};
  if (table.stabilized) out.report["results"]["fd"] = table.leading_value();
  return out;
}

// ---------------------------------------------------------------------------

namespace {

bool is_scalar_array(const json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j) {
    if (e.is_structured()) return false;
  }
  return true;
}

std::string scalar(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render(const json& j, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto line = [&](const std::string& key, const json& v) {
    if (!v.is_structured()) {
      os << pad << key << ": " << scalar(v) << "\n";
    } else if (is_scalar_array(v)) {
      os << pad << key << ":";
      for (const auto& e : v) os << " " << scalar(e);
      os << "\n";
    } else {
      os << pad << key << ":\n";
      render(v, indent + 2, os);
    }
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) line(k, v);
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const auto& v : j) line("[" + std::to_string(i++) + "]", v);
  } else {
    os << pad << scalar(j) << "\n";
  }
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream os;
  render(report, 0, os);
  return os.str();
}

}  // namespace fiberdim
