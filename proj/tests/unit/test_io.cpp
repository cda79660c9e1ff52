#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "corpus.hpp"
#include "fiberdim/commands.hpp"
#include "fiberdim/error.hpp"
#include "helpers.hpp"

using namespace fiberdim;
using testing::module;

namespace {

std::string parse_error(const std::string& text) {
  try {
    parse_module(text);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
    return e.what();
  }
  return "";
}

std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("fiberdim-test-" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("module file grammar") {
  const Submodule m = module(
      "# a comment\n"
      "n = 2\n"
      "N = 2   # trailing comment\n"
      "label = \"two \\\"quoted\\\" words\"\n"
      "gen = (3/2*z1^2 - z1*z2, 0)\n"
      "gen = (z2^2,\n"
      "       -4/6 * z1 * z1)\n");
  CHECK(m.vars() == 2);
  CHECK(m.ambient_rank() == 2);
  CHECK(m.label() == "two \"quoted\" words");
  REQUIRE(m.generators().size() == 2);
  CHECK(to_string(m.generators()[1]) == "(z2^2, -2/3*z1^2)");
  CHECK(module("n = 1\nN = 1\n").generators().empty());
}

TEST_CASE("parse errors carry line and column") {
  CHECK(parse_error("n = 2\nN = 1\ngen = (1.5*z1)\n").find("line 3, column 9") != std::string::npos);
  CHECK(parse_error("n = 2\nN = 1\ngen = (z3)\n").find("line 3") != std::string::npos);
  CHECK(parse_error("n = 2\nN = 2\ngen = (z1)\n").find("expected N = 2") != std::string::npos);
  CHECK(parse_error("gen = (z1)\n").find("before 'gen'") != std::string::npos);
  CHECK(parse_error("n = 2\nN = 1\nfoo = 3\n").find("unknown key") != std::string::npos);
  CHECK(parse_error("n = 2\nN = 1\ngen = (1/0)\n").find("line 3") != std::string::npos);
  CHECK(parse_error("n = 2\nN = 1\ngen = (z1 +)\n").find("line 3") != std::string::npos);
  CHECK(parse_error("n = 0\nN = 1\n").find("positive") != std::string::npos);
  CHECK_FALSE(parse_error("n = 2\n").empty());
}

TEST_CASE("serialization round trip and digest") {
  corpus::Generator gen(2);
  for (int trial = 0; trial < 50; ++trial) {
    const auto [a, b] = gen.mixed_pair();
    const std::string text = serialize_module(a);
    const Submodule back = parse_module(text);
    CHECK(back.generators() == a.generators());
    CHECK(serialize_module(back) == text);
    CHECK(module_digest(back) == module_digest(a));
  }
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("dims cache round trip") {
  const auto dir = scratch_dir("cache");
  const DimsCache cache(dir);
  CHECK_FALSE(cache.load("abc", 4));
  cache.store("abc", 4, {0, 1, 2, 3, 4});
  const auto back = cache.load("abc", 4);
  REQUIRE(back);
  CHECK(*back == std::vector<std::int64_t>{0, 1, 2, 3, 4});
  // truncated entry is ignored
  std::ofstream(dir / "abc-cap9.dims") << "dims: 1 2";
  CHECK_FALSE(cache.load("abc", 9));
  CHECK_FALSE(DimsCache().load("abc", 4));
  std::filesystem::remove_all(dir);
}

TEST_CASE("reports are deterministic and cache-independent") {
  const auto dir = scratch_dir("reports");
  RunOptions cold;
  cold.seed = 5;
  RunOptions warm = cold;
  warm.cache = DimsCache(dir);
  const Submodule m = module("n = 3\nN = 2\ngen = (z1^2, z2*z3)\ngen = (z3, z1)\n");
  const std::string first = cmd_fd(m, warm).report.dump();
  CHECK(std::filesystem::exists(dir));
  CHECK(cmd_fd(m, warm).report.dump() == first);
  CHECK(cmd_fd(m, cold).report.dump() == first);
  CHECK(cmd_samuel(m, warm).report.dump() == cmd_samuel(m, cold).report.dump());
  CHECK(cmd_hilbert(m, warm).report.dump() == cmd_hilbert(m, cold).report.dump());
  CHECK(cmd_model("bergman-ball", m, warm).report.dump() == cmd_model("bergman-ball", m, cold).report.dump());
  std::filesystem::remove_all(dir);
}

TEST_CASE("command reports") {
  RunOptions opts;
  const auto fd = cmd_fd(module("n = 2\nN = 2\ngen = (1, 0)\ngen = (0, 1)\n"), opts).report;
  CHECK(fd["results"]["fd"] == 2);
  CHECK(fd["results"]["all_agree"] == true);
  CHECK(cmd_fd(module(testing::kIdeal), opts).report["results"]["fd"] == 1);
  CHECK(cmd_fd(module("n = 2\nN = 2\ngen = (0, 0)\n"), opts).report["results"]["fd"] == 0);

  CHECK(cmd_samuel(module(testing::kVector), opts).report["results"]["c_S"] == 1);
  CHECK(cmd_samuel(module("n = 2\nN = 3\ngen = (0, 0, 0)\n"), opts).report["results"]["c_S"] == 3);
  CHECK(cmd_samuel(module("n = 2\nN = 1\ngen = (1)\n"), opts).report["results"]["c_S"] == 0);

  RunOptions wit = opts;
  wit.witness = true;
  const auto pair = cmd_lattice(module(testing::kPairA), module(testing::kPairB), wit).report["results"];
  CHECK(pair["equality_holds"] == true);
  CHECK(pair["witness_count"] == 1);
  const auto tr = cmd_lattice(module("n = 1\nN = 2\ngen = (1, 0)\n"), module(testing::kPairB), opts).report["results"];
  CHECK(tr["fd_intersection"] == 0);
  const auto same = cmd_lattice(module(testing::kVector), module(testing::kVector), wit).report["results"];
  CHECK(same["witness_count"] == 1);

  const auto model = cmd_model("drury-arveson", module(testing::kIdeal), opts).report["results"];
  const std::vector<std::int64_t> head{0, 0, 2, 5, 9};
  for (std::size_t k = 0; k < head.size(); ++k) CHECK(model["projection"]["dims"][k] == head[k]);
  CHECK(model["fd"] == 1);
  const auto line = cmd_model("hardy-ball", module("n = 1\nN = 1\ngen = (1)\n"), opts).report["results"];
  CHECK(line["projection"]["dims"][4] == 4);
  CHECK(line["fd"] == 1);
  for (auto v : cmd_model("bergman-ball", module("n = 2\nN = 1\ngen = (0)\n"), opts).report["results"]["projection"]["dims"]) {
    CHECK(v == 0);
  }
}

TEST_CASE("command errors") {
  RunOptions opts;
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return exit_status(e.code());
    }
    return 0;
  };
  const Submodule inh = module("n = 2\nN = 1\ngen = (z1 + 1)\n");
  CHECK(code_of([&] { cmd_hilbert(inh, opts); }) == 2);
  CHECK(code_of([&] { cmd_samuel(inh, opts); }) == 2);
  CHECK(code_of([&] { cmd_lattice(inh, inh, opts); }) == 2);
  CHECK(code_of([&] { cmd_model("unknown", module(testing::kIdeal), opts); }) == 2);
  CHECK(code_of([&] { cmd_lattice(module(testing::kIdeal), module(testing::kPairB), opts); }) == 3);
  RunOptions small = opts;
  small.max_degree = 1;
  CHECK(code_of([&] { cmd_hilbert(module(testing::kIdeal), small); }) == 4);
  const auto fd = cmd_fd(inh, opts);
  CHECK(fd.warnings.size() == 1);
  CHECK(fd.report["results"]["methods"]["hilbert_leading"].is_null());
}

TEST_CASE("translate flag") {
  RunOptions opts;
  opts.translate = RationalVector{Rational(1), Rational(-1, 2)};
  const auto r = cmd_fd(module(testing::kVector), opts);
  CHECK(r.report["results"]["fd"] == 1);
  CHECK(r.warnings.size() == 1);
  opts.translate = RationalVector{Rational(1)};
  CHECK_THROWS_AS(cmd_fd(module(testing::kVector), opts), Error);
}
