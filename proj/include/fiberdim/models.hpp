#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fiberdim/graded.hpp"

namespace fiberdim {

/// Coefficients a_k of the kernel generator f(t) = sum a_k t^k, with a_0 = 1
/// and a_k > 0.
class WeightSequence {
 public:
  enum class Kind { kDruryArveson, kHardyBall, kBergmanBall, kExplicit };

  /// drury-arveson: a_k = 1; hardy-ball: C(k+n-1, k); bergman-ball: C(k+n, k).
  static WeightSequence preset(const std::string& name, std::size_t vars);
  /// Throws kInvalidInput unless a_0 = 1 and every a_k > 0.
  static WeightSequence explicit_weights(RationalVector weights);

  Kind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  /// Degrees available: unbounded for presets, the list length for explicit weights.
  std::optional<std::size_t> materialized() const;
  /// Throws kCapTooSmall past the materialized range.
  Rational operator()(std::size_t k) const;
  std::string generator_description() const;

 private:
  Kind kind_ = Kind::kDruryArveson;
  std::string name_;
  std::size_t vars_ = 1;
  RationalVector explicit_;
};

/// Parses "drury-arveson", "hardy-ball", "bergman-ball" or "explicit:1,1/2,1/4".
/// Throws kInvalidInput for anything else.
WeightSequence weight_preset(const std::string& preset, std::size_t vars);

struct RatioBounds {
  Rational min;
  Rational max;
  bool holds = false;  // 0 < min <= max
};

/// min and max of a_k / a_{k+1} over k < upto.
RatioBounds ratio_bounds(const WeightSequence& w, std::size_t upto);

/// Graded model space H = ⊕_k H_k ⊗ Q^N with kernel f(<z, w>) 1_N, truncated at `cap`.
class GradedModelSpace {
 public:
  GradedModelSpace(std::size_t vars, std::size_t rank, WeightSequence weights, unsigned cap);

  std::size_t vars() const noexcept { return vars_; }
  std::size_t ambient_rank() const noexcept { return rank_; }
  const WeightSequence& weights() const noexcept { return weights_; }
  unsigned cap() const noexcept { return cap_; }

  /// <z^a, z^a> = a! / (|a|! a_|a|). Distinct monomials are orthogonal.
  Rational monomial_norm_squared(const Monomial& m) const;

  /// <f, g> for vectors of polynomials of degree <= cap.
  Rational inner(const PolyVec& f, const PolyVec& g) const;

 private:
  std::size_t vars_;
  std::size_t rank_;
  WeightSequence weights_;
  unsigned cap_;
};

/// sum_{k<=terms} a_k <z, w>^k with the bilinear pairing sum z_i w_i.
Rational kernel_eval(const GradedModelSpace& space, std::span<const Rational> z, std::span<const Rational> w,
                     unsigned terms);

/// dim P_k Y: P_k is the orthogonal projection onto the span of monomial
/// vectors of degree < k, applied to the elements z^a g_i of Y up to degree k.
/// Throws kCapTooSmall when k > space.cap(), kShapeMismatch on differing (n, N).
std::int64_t projection_dims(const GradedModelSpace& space, const GradedSubmodule& y, unsigned k);

struct GradedAxiomReport {
  bool shift_ok = false;       // z_j H_k ⊆ H_{k+1}
  bool exhausts_ok = false;    // z^a H_0 spans every H_k
  bool closed_range_checked = false;  // infinite-dimensional, never checked at truncation
  bool holds() const { return shift_ok && exhausts_ok; }
};

GradedAxiomReport graded_axiom_check(const GradedModelSpace& space, unsigned cap);

}  // namespace fiberdim
