// fiberdim command-line front end. Reports go to stdout; warnings and the
// single-line error record go to stderr.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fiberdim/commands.hpp"
#include "fiberdim/error.hpp"

namespace {

using namespace fiberdim;

int report_error(std::string_view code, int status, const std::string& message) {
  std::cerr << "error: code=" << code << " exit=" << status << " message=" << nlohmann::json(message).dump() << "\n";
  return status;
}

std::pair<RationalVector, RationalVector> parse_kernel_point(const std::string& text) {
  const auto semi = text.find(';');
  if (semi == std::string::npos) fail(ErrorCode::kParse, "--kernel-at expects 'z1,z2;w1,w2', got '" + text + "'");
  return {parse_rational_vector(text.substr(0, semi)), parse_rational_vector(text.substr(semi + 1))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact fiber dimension, Hilbert tables, Samuel multiplicities and lattice witnesses"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 0;
  std::optional<unsigned> max_degree;
  std::string translate;
  bool json_out = false, no_cache = false, witness = false;
  std::vector<std::string> kernel_at;
  app.add_option("--seed", seed, "seed for point sampling")->capture_default_str();
  app.add_option("--max-degree", max_degree, "degree cap for graded tables (default: max degree + n + 8)");
  app.add_option("--translate", translate, "substitute z -> z + v before analysis, v like 1,-1/2");
  app.add_flag("--json", json_out, "print the machine-readable report");
  app.add_flag("--no-cache", no_cache, "ignore the component-dimension cache");

  std::string file1, file2, preset;
  auto* fd = app.add_subcommand("fd", "fiber dimension by every applicable method");
  fd->add_option("file", file1)->required();
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function, jets and their differences");
  hilbert->add_option("file", file1)->required();
  auto* samuel = app.add_subcommand("samuel", "Samuel multiplicities of the ambient and quotient tuples");
  samuel->add_option("file", file1)->required();
  auto* lattice = app.add_subcommand("lattice", "check fd(M1+M2) + fd(M1 ∩ M2) = fd(M1) + fd(M2)");
  lattice->add_option("file1", file1)->required();
  lattice->add_option("file2", file2)->required();
  lattice->add_flag("--witness", witness, "also extract intersection witnesses");
  auto* wit = app.add_subcommand("witness", "full witness construction for a pair");
  wit->add_option("file1", file1)->required();
  wit->add_option("file2", file2)->required();
  auto* model = app.add_subcommand("model", "projection dimensions in a graded model space");
  model->add_option("preset", preset, "drury-arveson | hardy-ball | bergman-ball | explicit:1,a1,a2,...")->required();
  model->add_option("file", file1)->required();
  model->add_option("--kernel-at", kernel_at, "evaluate the kernel at 'z;w', e.g. '1/2,0;1,1'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("usage_error", 2, e.what());
  }

  const auto started = std::chrono::steady_clock::now();
  try {
    RunOptions opts;
    opts.seed = seed;
    opts.max_degree = max_degree;
    if (!translate.empty()) opts.translate = parse_rational_vector(translate);
    opts.witness = witness;
    if (!no_cache) opts.cache = DimsCache::from_environment();
    for (const auto& k : kernel_at) opts.kernel_points.push_back(parse_kernel_point(k));

    RunResult result;
    if (fd->parsed()) {
      result = cmd_fd(read_module_file(file1), opts);
    } else if (hilbert->parsed()) {
      result = cmd_hilbert(read_module_file(file1), opts);
    } else if (samuel->parsed()) {
      result = cmd_samuel(read_module_file(file1), opts);
    } else if (lattice->parsed()) {
      result = cmd_lattice(read_module_file(file1), read_module_file(file2), opts);
    } else if (wit->parsed()) {
      result = cmd_witness(read_module_file(file1), read_module_file(file2), opts);
    } else {
      result = cmd_model(preset, read_module_file(file1), opts);
    }
    for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
    if (json_out) {
      std::cout << result.report.dump(2) << "\n";
    } else {
      const auto ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
      std::cout << render_text(result.report) << "elapsed_ms: " << ms << "\n";
    }
    return 0;
  } catch (const Error& e) {
    std::string message = e.what();
    if (e.code() == ErrorCode::kNotStabilized || e.code() == ErrorCode::kCapTooSmall) {
      message += " (raise --max-degree)";
    }
    return report_error(error_code_name(e.code()), exit_status(e.code()), message);
  } catch (const std::exception& e) {
    return report_error("internal_error", 5, e.what());
  }
}
