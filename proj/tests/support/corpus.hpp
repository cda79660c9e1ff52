#pragma once

// Seeded random modules for property and acceptance tests.

#include <cstdint>
#include <random>
#include <utility>

#include "fiberdim/graded.hpp"

namespace corpus {

struct Shape {
  std::size_t vars = 2;
  std::size_t rank = 2;
  std::size_t gens = 3;
  unsigned max_degree = 3;
};

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  // n in {1,2,3}, N <= 4, 1..4 generators, degree <= 3
  Shape random_shape(std::size_t max_vars = 3, std::size_t max_rank = 4);

  fiberdim::MultiPoly homogeneous_poly(std::size_t vars, unsigned degree, std::size_t terms);
  fiberdim::PolyVec homogeneous_vector(std::size_t vars, std::size_t rank, unsigned degree);

  // Half the time the generators are combinations of fewer constant vectors
  // than N, which forces fd < N.
  fiberdim::Submodule homogeneous_module(const Shape& s);
  fiberdim::Submodule homogeneous_module() { return homogeneous_module(random_shape()); }

  // Same shape, some generators shared with or multiples of the first module.
  std::pair<fiberdim::Submodule, fiberdim::Submodule> homogeneous_pair();
  // Pairs where each generator picks up lower-order terms with probability 1/2.
  std::pair<fiberdim::Submodule, fiberdim::Submodule> mixed_pair();

 private:
  fiberdim::Submodule related(const fiberdim::Submodule& a, const Shape& s);
  std::mt19937_64 rng_;
};

}  // namespace corpus
