#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "fiberdim/graded.hpp"

namespace fiberdim {

/// Deterministic rational sample points. Uses only the raw mt19937_64 output
/// stream (no std distributions) so sequences are identical across platforms.
class PointSampler {
 public:
  explicit PointSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// Uniform integer in [lo, hi] for arbitrary-precision bounds.
  Integer uniform(const Integer& lo, const Integer& hi);
  /// p/q with p uniform in [-height, height] and q uniform in [1, height].
  Rational rational(const Integer& height);
  RationalVector point(std::size_t vars, const Integer& height);

 private:
  std::mt19937_64 engine_;
};

/// Height of the i-th sample in maximal-point searches: 10^(i / 10), so the
/// first ten samples have coordinates in {-1, 0, 1}.
Integer sample_height(std::size_t index);

inline constexpr std::size_t kDefaultSampleBudget = 1000;

/// Rank over Q(z) of the N x (#generators) matrix whose columns are the generators.
std::size_t fiber_dim_generic(const Submodule& m);

/// dim M_λ: rank of the generator values at λ.
std::size_t fiber_dim_at(const Submodule& m, std::span<const Rational> point);

/// A point with fiber_dim_at = fiber_dim_generic. Throws kSearchExhausted.
RationalVector find_maximal_point(const Submodule& m, std::uint64_t seed,
                                  std::size_t budget = kDefaultSampleBudget);

/// A single point maximal for every listed module. Throws kSearchExhausted.
RationalVector common_maximal_point(std::span<const Submodule> modules, std::uint64_t seed,
                                    std::size_t budget = kDefaultSampleBudget);

inline constexpr const char* kMethodGenericRank = "generic_rank";
inline constexpr const char* kMethodHilbertLeading = "hilbert_leading";
inline constexpr const char* kMethodLimitFormula = "limit_formula";

struct FiberReport {
  std::size_t fd = 0;
  /// nullopt marks a method that does not apply (inhomogeneous input).
  std::map<std::string, std::optional<std::int64_t>> method_values;
  RationalVector witness_point;
  bool agree = false;
  bool homogeneous = false;
  unsigned cap_used = 0;
};

/// Runs every applicable method and reconciles them.
FiberReport fiber_report(const Submodule& m, std::uint64_t seed, std::optional<unsigned> cap = std::nullopt);
/// Same, reusing the component cache of an already graded module.
FiberReport fiber_report(const GradedSubmodule& m, std::uint64_t seed, std::optional<unsigned> cap = std::nullopt);

}  // namespace fiberdim
