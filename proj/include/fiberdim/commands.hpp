#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fiberdim/io.hpp"

namespace fiberdim {

struct RunOptions {
  std::uint64_t seed = 0;
  std::optional<unsigned> max_degree;
  /// z -> z + translate before analysis (single-module commands).
  std::optional<RationalVector> translate;
  bool witness = false;
  DimsCache cache;
  /// (z, w) pairs for kernel evaluation in `model`.
  std::vector<std::pair<RationalVector, RationalVector>> kernel_points;
};

/// Machine-readable report plus warnings meant for stderr.
/// The report holds no timing, so identical inputs give identical JSON.
struct RunResult {
  nlohmann::json report;
  std::vector<std::string> warnings;
};

RunResult cmd_fd(const Submodule& m, const RunOptions& opts);
RunResult cmd_hilbert(const Submodule& m, const RunOptions& opts);
RunResult cmd_samuel(const Submodule& m, const RunOptions& opts);
RunResult cmd_lattice(const Submodule& m1, const Submodule& m2, const RunOptions& opts);
/// The full scaffold at a common maximal point plus the extracted witnesses.
RunResult cmd_witness(const Submodule& m1, const Submodule& m2, const RunOptions& opts);
RunResult cmd_model(const std::string& preset, const Submodule& m, const RunOptions& opts);

/// Indented "key: value" rendering of a report.
std::string render_text(const nlohmann::json& report);

}  // namespace fiberdim
