#pragma once

#include <string>
#include <vector>

#include "fiberdim/io.hpp"
#include "oracles.hpp"

namespace testing {

inline fiberdim::Submodule module(const std::string& text) { return fiberdim::parse_module(text); }

inline fiberdim::RationalVector point(std::initializer_list<const char*> coords) {
  fiberdim::RationalVector out;
  for (const char* c : coords) out.push_back(fiberdim::parse_rational(c));
  return out;
}

inline std::vector<oracle::Row> rows_of(const fiberdim::ExactMatrix& m) {
  std::vector<oracle::Row> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.emplace_back(m.row(r).begin(), m.row(r).end());
  return out;
}

// Small regression modules used across suites.
inline const char* kIdeal = "n = 2\nN = 1\ngen = (z1)\ngen = (z2)\n";
inline const char* kVector = "n = 2\nN = 2\ngen = (z1, z2)\n";
inline const char* kPairA = "n = 1\nN = 2\ngen = (1, 0)\ngen = (0, z1)\n";
inline const char* kPairB = "n = 1\nN = 2\ngen = (0, 1)\n";

}  // namespace testing
