#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fiberdim/commands.hpp"
#include "fiberdim/error.hpp"

namespace py = pybind11;
using namespace fiberdim;

namespace {

// Reports cross the boundary as JSON text; the python side decodes them.
struct Options {
  std::uint64_t seed = 0;
  std::optional<unsigned> max_degree;
  std::optional<std::string> translate;
  std::optional<std::string> cache_dir;
  std::vector<std::pair<std::string, std::string>> kernel_at;
};

RunOptions to_run_options(const Options& o) {
  RunOptions r;
  r.seed = o.seed;
  r.max_degree = o.max_degree;
  if (o.translate) r.translate = parse_rational_vector(*o.translate);
  if (o.cache_dir) r.cache = DimsCache(*o.cache_dir);
  for (const auto& [z, w] : o.kernel_at) r.kernel_points.emplace_back(parse_rational_vector(z), parse_rational_vector(w));
  return r;
}

py::tuple finish(const RunResult& r) { return py::make_tuple(r.report.dump(), r.warnings); }

template <class F>
auto released(F&& f) {
  py::gil_scoped_release nogil;
  return f();
}

}  // namespace

PYBIND11_MODULE(_fiberdim, m) {
  static py::exception<Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::tuple args = py::make_tuple(std::string(error_code_name(e.code())), exit_status(e.code()), std::string(e.what()));
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  py::class_<Options>(m, "Options")
      .def(py::init<>())
      .def_readwrite("seed", &Options::seed)
      .def_readwrite("max_degree", &Options::max_degree)
      .def_readwrite("translate", &Options::translate)
      .def_readwrite("cache_dir", &Options::cache_dir)
      .def_readwrite("kernel_at", &Options::kernel_at);

  m.def("parse", [](const std::string& text) { return serialize_module(parse_module(text)); },
        "Parse module text and return its canonical form.");
  m.def("digest", [](const std::string& text) { return module_digest(parse_module(text)); });

  m.def("fd", [](const std::string& text, const Options& o) {
    const auto mod = parse_module(text);
    const auto opts = to_run_options(o);
    return finish(released([&] { return cmd_fd(mod, opts); }));
  });
  m.def("hilbert", [](const std::string& text, const Options& o) {
    const auto mod = parse_module(text);
    const auto opts = to_run_options(o);
    return finish(released([&] { return cmd_hilbert(mod, opts); }));
  });
  m.def("samuel", [](const std::string& text, const Options& o) {
    const auto mod = parse_module(text);
    const auto opts = to_run_options(o);
    return finish(released([&] { return cmd_samuel(mod, opts); }));
  });
  m.def("lattice", [](const std::string& a, const std::string& b, bool witness, const Options& o) {
    const auto m1 = parse_module(a);
    const auto m2 = parse_module(b);
    auto opts = to_run_options(o);
    opts.witness = witness;
    return finish(released([&] { return cmd_lattice(m1, m2, opts); }));
  });
  m.def("witness", [](const std::string& a, const std::string& b, const Options& o) {
    const auto m1 = parse_module(a);
    const auto m2 = parse_module(b);
    const auto opts = to_run_options(o);
    return finish(released([&] { return cmd_witness(m1, m2, opts); }));
  });
  m.def("model", [](const std::string& preset, const std::string& text, const Options& o) {
    const auto mod = parse_module(text);
    const auto opts = to_run_options(o);
    return finish(released([&] { return cmd_model(preset, mod, opts); }));
  });
}
