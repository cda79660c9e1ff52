#include "fiberdim/models.hpp"

#include <set>

#include "fiberdim/echelon.hpp"
#include "fiberdim/error.hpp"

namespace fiberdim {

WeightSequence WeightSequence::preset(const std::string& name, std::size_t vars) {
  WeightSequence w;
  w.name_ = name;
  w.vars_ = vars;
  if (name == "drury-arveson") {
    w.kind_ = Kind::kDruryArveson;
  } else if (name == "hardy-ball") {
    w.kind_ = Kind::kHardyBall;
  } else if (name == "bergman-ball") {
    w.kind_ = Kind::kBergmanBall;
  } else {
    fail(ErrorCode::kInvalidInput, "unknown preset '" + name + "' (expected drury-arveson, hardy-ball, bergman-ball "
                                   "or explicit:<a_0,a_1,...>)");
  }
  return w;
}

WeightSequence WeightSequence::explicit_weights(RationalVector weights) {
  if (weights.empty() || weights.front() != 1) fail(ErrorCode::kInvalidInput, "invalid weights: a_0 must be 1");
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (weights[k] <= 0) {
      fail(ErrorCode::kInvalidInput, "invalid weights: a_" + std::to_string(k) + " = " + weights[k].get_str() +
                                         " is not positive");
    }
  }
  WeightSequence w;
  w.kind_ = Kind::kExplicit;
  w.name_ = "explicit";
  w.explicit_ = std::move(weights);
  return w;
}

std::optional<std::size_t> WeightSequence::materialized() const {
  if (kind_ == Kind::kExplicit) return explicit_.size();
  return std::nullopt;
}

Rational WeightSequence::operator()(std::size_t k) const {
  switch (kind_) {
    case Kind::kDruryArveson: return 1;
    case Kind::kHardyBall: return Rational(binomial(k + vars_ - 1, k));
    case Kind::kBergmanBall: return Rational(binomial(k + vars_, k));
    case Kind::kExplicit:
      if (k >= explicit_.size()) {
        fail(ErrorCode::kCapTooSmall, "explicit weights end at degree " + std::to_string(explicit_.size() - 1) +
                                          ", degree " + std::to_string(k) + " requested");
      }
      return explicit_[k];
  }
  return 0;
}

std::string WeightSequence::generator_description() const {
  switch (kind_) {
    case Kind::kDruryArveson: return "1/(1-t)";
    case Kind::kHardyBall: return "(1-t)^-" + std::to_string(vars_);
    case Kind::kBergmanBall: return "(1-t)^-" + std::to_string(vars_ + 1);
    case Kind::kExplicit: {
      std::string out;
      for (std::size_t k = 0; k < explicit_.size(); ++k) {
        if (k) out += " + ";
        out += explicit_[k].get_str();
        if (k) out += "*t^" + std::to_string(k);
      }
      return out;
    }
  }
  return {};
}

WeightSequence weight_preset(const std::string& preset, std::size_t vars) {
  const std::string prefix = "explicit:";
  if (preset.rfind(prefix, 0) == 0) {
    RationalVector values;
    try {
      values = parse_rational_vector(preset.substr(prefix.size()));
    } catch (const Error& e) {
      fail(ErrorCode::kInvalidInput, std::string("invalid weights: ") + e.what());
    }
    return WeightSequence::explicit_weights(std::move(values));
  }
  return WeightSequence::preset(preset, vars);
}

RatioBounds ratio_bounds(const WeightSequence& w, std::size_t upto) {
  RatioBounds out;
  for (std::size_t k = 0; k < upto; ++k) {
    const Rational ratio = w(k) / w(k + 1);
    if (k == 0 || ratio < out.min) out.min = ratio;
    if (k == 0 || ratio > out.max) out.max = ratio;
  }
  out.holds = upto > 0 && out.min > 0 && out.min <= out.max;
  return out;
}

// ---------------------------------------------------------------------------

GradedModelSpace::GradedModelSpace(std::size_t vars, std::size_t rank, WeightSequence weights, unsigned cap)
    : vars_(vars), rank_(rank), weights_(std::move(weights)), cap_(cap) {
  if (vars_ == 0 || rank_ == 0) fail(ErrorCode::kShapeMismatch, "model space needs n >= 1 and N >= 1");
  if (auto m = weights_.materialized(); m && *m <= cap_) {
    fail(ErrorCode::kCapTooSmall, "explicit weights cover degrees < " + std::to_string(*m) + " but the cap is " +
                                      std::to_string(cap_));
  }
}

Rational GradedModelSpace::monomial_norm_squared(const Monomial& m) const {
  Integer alpha_factorial = 1;
  for (unsigned e : m.exponents()) alpha_factorial *= factorial(e);
  return Rational(alpha_factorial) / (Rational(factorial(m.degree())) * weights_(m.degree()));
}

Rational GradedModelSpace::inner(const PolyVec& f, const PolyVec& g) const {
  if (f.length() != rank_ || g.length() != rank_) fail(ErrorCode::kShapeMismatch, "vector length differs from N");
  Rational total = 0;
  for (std::size_t i = 0; i < rank_; ++i) {
    const auto& small = f[i].size() <= g[i].size() ? f[i] : g[i];
    const auto& large = f[i].size() <= g[i].size() ? g[i] : f[i];
    for (const auto& [m, c] : small.terms()) {
      const Rational other = large.coefficient(m);
      if (other != 0) total += c * other * monomial_norm_squared(m);
    }
  }
  return total;
}

Rational kernel_eval(const GradedModelSpace& space, std::span<const Rational> z, std::span<const Rational> w,
                     unsigned terms) {
  if (z.size() != space.vars() || w.size() != space.vars()) {
    fail(ErrorCode::kShapeMismatch, "kernel arguments must have n coordinates");
  }
  Rational pairing = 0;
  for (std::size_t i = 0; i < z.size(); ++i) pairing += z[i] * w[i];
  Rational sum = 0, power = 1;
  for (unsigned k = 0; k <= terms; ++k) {
    sum += space.weights()(k) * power;
    power *= pairing;
  }
  return sum;
}

std::int64_t projection_dims(const GradedModelSpace& space, const GradedSubmodule& y, unsigned k) {
  if (y.vars() != space.vars() || y.ambient_rank() != space.ambient_rank()) {
    fail(ErrorCode::kShapeMismatch, "module shape differs from the model space");
  }
  if (k > space.cap()) {
    fail(ErrorCode::kCapTooSmall, "projection order " + std::to_string(k) + " exceeds the space cap " +
                                      std::to_string(space.cap()));
  }
  const std::size_t n = y.vars(), rank = y.ambient_rank();
  std::vector<std::size_t> offset(k + 1, 0);
  for (unsigned j = 0; j < k; ++j) offset[j + 1] = offset[j] + monomial_count(n, j) * rank;
  SparseEchelon image(offset[k]);

  // P_k v = sum over monomial vectors u of degree < k of <v, u>/<u, u> u.
  auto project = [&](const PolyVec& v) {
    PolyVec out(n, rank);
    for (std::size_t i = 0; i < rank; ++i) {
      for (const auto& [m, c] : v[i].terms()) {
        if (m.degree() >= k) continue;
        const PolyVec u = MultiPoly::monomial(1, m) * PolyVec::unit(n, rank, i);
        out[i].add_term(m, space.inner(v, u) / space.inner(u, u));
      }
    }
    return out;
  };

  for (const auto& g : y.generators()) {
    const auto d = g.homogeneous_degree();
    if (!d || *d > k) continue;
    for (unsigned s = 0; s + *d <= k; ++s) {
      for (const Monomial& shift : monomials_of_degree(n, s)) {
        const PolyVec projected = project(MultiPoly::monomial(1, shift) * g);
        if (projected.is_zero()) continue;
        RationalVector coords(offset[k]);
        for (unsigned j : projected.degrees_present()) {
          const RationalVector part = component_coordinates(projected.homogeneous_part(j), j);
          std::copy(part.begin(), part.end(), coords.begin() + static_cast<std::ptrdiff_t>(offset[j]));
        }
        image.insert(to_sparse_row(coords));
      }
    }
  }
  return static_cast<std::int64_t>(image.rank());
}

GradedAxiomReport graded_axiom_check(const GradedModelSpace& space, unsigned cap) {
  GradedAxiomReport report;
  report.shift_ok = true;
  report.exhausts_ok = true;
  const std::size_t n = space.vars();
  for (unsigned k = 0; k <= cap; ++k) {
    const auto monos = monomials_of_degree(n, k);
    for (const auto& m : monos) {
      if (space.monomial_norm_squared(m) <= 0) report.shift_ok = false;
    }
    if (k == cap) break;
    std::set<std::vector<unsigned>> reached;
    for (const auto& m : monos) {
      for (std::size_t j = 0; j < n; ++j) {
        const Monomial shifted = Monomial::variable(n, j) * m;
        if (shifted.degree() != k + 1) report.shift_ok = false;
        reached.insert(shifted.exponents());
      }
    }
    if (reached.size() != monomial_count(n, k + 1)) report.exhausts_ok = false;
  }
  return report;
}

}  // namespace fiberdim
