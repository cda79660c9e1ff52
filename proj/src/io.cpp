#include "fiberdim/io.hpp"

#include <openssl/evp.h>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "fiberdim/error.hpp"

namespace fiberdim {
namespace {

class ModuleParser {
 public:
  explicit ModuleParser(std::string_view text) : text_(text) {}

  Submodule parse() {
    std::optional<std::size_t> vars, rank;
    std::string label;
    std::vector<PolyVec> gens;
    while (true) {
      skip_blank();
      if (at_end()) break;
      const auto [line, col] = position();
      const std::string key = identifier();
      expect('=');
      if (key == "n" || key == "N") {
        if (!gens.empty()) error_at(line, col, "'" + key + "' must precede every 'gen'");
        auto& slot = key == "n" ? vars : rank;
        if (slot) error_at(line, col, "duplicate '" + key + "'");
        const long v = small_integer();
        if (v < 1) error_at(line, col, "'" + key + "' must be positive");
        slot = static_cast<std::size_t>(v);
      } else if (key == "label") {
        label = quoted();
      } else if (key == "gen") {
        if (!vars || !rank) error_at(line, col, "'n' and 'N' must be declared before 'gen'");
        gens.push_back(vector(*vars, *rank));
      } else {
        error_at(line, col, "unknown key '" + key + "' (expected n, N, label or gen)");
      }
      end_of_statement();
    }
    if (!vars || !rank) error_at(line_, col_, "missing 'n' or 'N' declaration");
    return Submodule(*vars, *rank, std::move(gens), std::move(label));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  std::pair<std::size_t, std::size_t> position() const { return {line_, col_}; }

  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  [[noreturn]] void error_at(std::size_t line, std::size_t col, const std::string& what) const {
    fail(ErrorCode::kParse, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
  }
  [[noreturn]] void error(const std::string& what) const { error_at(line_, col_, what); }

  // Skips spaces, tabs and comments, but not newlines.
  void skip_inline() {
    while (!at_end()) {
      if (peek() == ' ' || peek() == '\t' || peek() == '\r') {
        advance();
      } else if (peek() == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  void skip_blank() {
    while (true) {
      skip_inline();
      if (peek() != '\n') break;
      advance();
    }
  }

  // Inside parentheses statements may span lines.
  void skip_ws(bool multiline) { multiline ? skip_blank() : skip_inline(); }

  void end_of_statement() {
    skip_inline();
    if (!at_end() && peek() != '\n') error(std::string("unexpected '") + peek() + "' after statement");
  }

  void expect(char c, bool multiline = false) {
    skip_ws(multiline);
    if (peek() != c) error(std::string("expected '") + c + "'" + (at_end() ? " before end of input" : ""));
    advance();
  }

  std::string identifier() {
    skip_inline();
    std::string out;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) out += advance();
    if (out.empty()) error("expected a key");
    return out;
  }

  std::string digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out += advance();
    if (!at_end() && (peek() == '.' || peek() == 'e' || peek() == 'E')) {
      error("floating-point literal not allowed; use an integer or p/q fraction");
    }
    return out;
  }

  long small_integer() {
    skip_inline();
    const auto [line, col] = position();
    const std::string d = digits();
    if (d.empty()) error("expected an integer");
    if (d.size() > 6) error_at(line, col, "integer too large");
    return std::stol(d);
  }

  std::string quoted() {
    skip_inline();
    if (peek() != '"') error("expected a quoted string");
    advance();
    std::string out;
    while (true) {
      if (at_end() || peek() == '\n') error("unterminated string");
      char c = advance();
      if (c == '"') break;
      if (c == '\\') {
        if (at_end()) error("unterminated string");
        c = advance();
      }
      out += c;
    }
    return out;
  }

  PolyVec vector(std::size_t vars, std::size_t rank) {
    expect('(');
    std::vector<MultiPoly> entries;
    while (true) {
      const auto [line, col] = (skip_blank(), position());
      entries.push_back(polynomial(vars));
      if (entries.size() > rank) error_at(line, col, "more than N = " + std::to_string(rank) + " entries");
      skip_blank();
      if (peek() == ',') {
        advance();
        continue;
      }
      if (peek() == ')') {
        advance();
        break;
      }
      error("expected ',' or ')' in generator");
    }
    if (entries.size() != rank) {
      error("generator has " + std::to_string(entries.size()) + " entries, expected N = " + std::to_string(rank));
    }
    return PolyVec(vars, std::move(entries));
  }

  MultiPoly polynomial(std::size_t vars) {
    MultiPoly p(vars);
    skip_blank();
    bool first = true;
    while (true) {
      skip_blank();
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (advance() == '-') sign = -1;
        skip_blank();
      } else if (!first) {
        break;
      }
      auto [c, m] = term(vars);
      p.add_term(m, sign * c);
      first = false;
    }
    return p;
  }

  std::pair<Rational, Monomial> term(std::size_t vars) {
    Rational coeff = 1;
    std::vector<unsigned> exps(vars, 0);
    while (true) {
      skip_blank();
      const auto [line, col] = position();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        std::string num = digits();
        if (peek() == '/') {
          advance();
          const std::string den = digits();
          if (den.empty()) error("expected a denominator after '/'");
          num += "/" + den;
        }
        try {
          coeff *= parse_rational(num);
        } catch (const Error& e) {
          error_at(line, col, e.what());
        }
      } else if (peek() == 'z') {
        advance();
        const std::string idx = digits();
        if (idx.empty()) error("expected a variable index after 'z'");
        if (idx.size() > 6) error_at(line, col, "variable index too large");
        const std::size_t i = std::stoul(idx);
        if (i < 1 || i > vars) {
          error_at(line, col, "variable z" + idx + " outside z1..z" + std::to_string(vars));
        }
        unsigned e = 1;
        if (peek() == '^') {
          advance();
          const std::string ex = digits();
          if (ex.empty() || ex.size() > 6) error("expected an exponent after '^'");
          e = static_cast<unsigned>(std::stoul(ex));
        }
        exps[i - 1] += e;
      } else {
        error(at_end() ? "unexpected end of input in polynomial"
                       : std::string("unexpected '") + peek() + "' in polynomial");
      }
      skip_blank();
      if (peek() != '*') break;
      advance();
    }
    return {coeff, Monomial(std::move(exps))};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

Submodule parse_module(std::string_view text) { return ModuleParser(text).parse(); }

Submodule read_module_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kParse, "cannot read module file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_module(buf.str());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParse) fail(ErrorCode::kParse, path.string() + ": " + e.what());
    throw;
  }
}

std::string serialize_module(const Submodule& m) {
  std::string out = "n = " + std::to_string(m.vars()) + "\nN = " + std::to_string(m.ambient_rank()) + "\n";
  if (!m.label().empty()) out += "label = \"" + escape(m.label()) + "\"\n";
  for (const auto& g : m.generators()) out += "gen = " + to_string(g) + "\n";
  return out;
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    fail(ErrorCode::kInvariantViolation, "SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 15];
  }
  return out;
}

std::string module_digest(const Submodule& m) { return sha256_hex(serialize_module(m)); }

// ---------------------------------------------------------------------------

DimsCache DimsCache::from_environment() {
  if (const char* dir = std::getenv("FIBERDIM_CACHE_DIR"); dir && *dir) return DimsCache(dir);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return DimsCache(std::filesystem::path(xdg) / "fiberdim");
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return DimsCache(std::filesystem::path(home) / ".cache" / "fiberdim");
  }
  return DimsCache();
}

std::filesystem::path DimsCache::entry(const std::string& digest, unsigned cap) const {
  return *dir_ / (digest + "-cap" + std::to_string(cap) + ".dims");
}

std::optional<std::vector<std::int64_t>> DimsCache::load(const std::string& digest, unsigned cap) const {
  if (!dir_) return std::nullopt;
  std::ifstream in(entry(digest, cap));
  std::string tag;
  if (!in || !(in >> tag) || tag != "dims:") return std::nullopt;
  std::vector<std::int64_t> dims;
  std::int64_t v;
  while (in >> v) dims.push_back(v);
  if (!in.eof() || dims.size() <= cap) return std::nullopt;
  return dims;
}

void DimsCache::store(const std::string& digest, unsigned cap, const std::vector<std::int64_t>& dims) const {
  if (!dir_) return;
  std::error_code ec;
  std::filesystem::create_directories(*dir_, ec);
  if (ec) return;
  const auto target = entry(digest, cap);
  auto tmp = target;
  tmp += ".tmp" + std::to_string(std::random_device{}());
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << "dims:";
    for (auto d : dims) out << ' ' << d;
    out << '\n';
    if (!out) return;
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace fiberdim
