#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fiberdim/graded.hpp"

namespace fiberdim {

/// Module description file.
///
///   # comment
///   n = 2
///   N = 2
///   label = "generated by (z1, z2)"
///   gen = (z1, z2)
///   gen = (3/2*z1^2 - z1*z2, 0)
///
/// `n` and `N` come first, `label` is optional, and every `gen` lists exactly
/// N polynomial entries. Coefficients are integers or p/q fractions; decimal
/// literals are rejected. Variables are z1..zn with optional ^exponent.
/// Errors throw Error(kParse) with a "line L, column C" prefix.
Submodule parse_module(std::string_view text);
Submodule read_module_file(const std::filesystem::path& path);

/// Canonical text form: fixed header order, grlex-sorted terms, reduced
/// fractions. parse_module(serialize_module(m)) reproduces m.
std::string serialize_module(const Submodule& m);

/// Hex SHA-256 of the given bytes.
std::string sha256_hex(std::string_view bytes);

/// Digest of the canonical serialization.
std::string module_digest(const Submodule& m);

/// On-disk store of component dimensions keyed by module digest and cap.
/// Entries are plain text "dims: d0 d1 ..." files, written via rename so
/// readers never see partial content. Any unreadable entry is ignored.
class DimsCache {
 public:
  /// Disabled cache: load() always misses, store() does nothing.
  DimsCache() = default;
  explicit DimsCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// Directory from FIBERDIM_CACHE_DIR, else $XDG_CACHE_HOME/fiberdim, else ~/.cache/fiberdim.
  static DimsCache from_environment();

  bool enabled() const { return dir_.has_value(); }
  std::optional<std::vector<std::int64_t>> load(const std::string& digest, unsigned cap) const;
  void store(const std::string& digest, unsigned cap, const std::vector<std::int64_t>& dims) const;

 private:
  std::filesystem::path entry(const std::string& digest, unsigned cap) const;
  std::optional<std::filesystem::path> dir_;
};

}  // namespace fiberdim
