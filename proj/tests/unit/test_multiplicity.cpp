#include <doctest.h>

#include "corpus.hpp"
#include "fiberdim/fiber.hpp"
#include "fiberdim/multiplicity.hpp"
#include "helpers.hpp"

using namespace fiberdim;
using testing::module;
using testing::point;

TEST_CASE("quotient_codim_table examples") {
  const GradedSubmodule zero(module("n = 2\nN = 1\ngen = (0)\n"));
  for (auto v : quotient_codim_table(zero, 6).dims) CHECK(v == 0);
  const GradedSubmodule ideal(module(testing::kIdeal));
  CHECK(quotient_codim_table(ideal, 6).dims[4] == 9);
  const GradedSubmodule free(module("n = 1\nN = 1\ngen = (1)\n"));
  const auto t = quotient_codim_table(free, 6);
  for (unsigned k = 0; k <= 6; ++k) CHECK(t.dims[k] == k);
}

TEST_CASE("fd_by_limit_formula examples") {
  CHECK(fd_by_limit_formula(GradedSubmodule(module("n = 2\nN = 2\ngen = (0, 0)\n")), 8) == 0);
  CHECK(fd_by_limit_formula(GradedSubmodule(module("n = 3\nN = 2\ngen = (1, 0)\ngen = (0, 1)\n")), 8) == 2);
  const GradedSubmodule v(module(testing::kVector));
  CHECK(fd_by_limit_formula(v, v.cap()) == 1);
}

TEST_CASE("samuel_quotient examples") {
  const GradedSubmodule v(module(testing::kVector));
  const auto rv = samuel_quotient(v, v.cap());
  CHECK(rv.c_T == 2);
  CHECK(rv.c_S == 1);
  const GradedSubmodule ideal(module(testing::kIdeal));
  CHECK(samuel_quotient(ideal, ideal.cap()).c_S == 0);
  const GradedSubmodule zero(module("n = 2\nN = 3\ngen = (0, 0, 0)\n"));
  const auto rz = samuel_quotient(zero, zero.cap());
  CHECK(rz.c_S == 3);
  CHECK(rz.c_T == 3);
}

TEST_CASE("cokernel_dim_at examples") {
  CHECK(cokernel_dim_at(module("n = 2\nN = 3\ngen = (0, 0, 0)\n"), point({"5", "-1"})) == 3);
  const Submodule ideal = module(testing::kIdeal);
  CHECK(cokernel_dim_at(ideal, point({"0", "0"})) == 1);
  CHECK(cokernel_dim_at(ideal, point({"1", "1"})) == 0);
  CHECK(cokernel_dim_at(module("n = 1\nN = 2\ngen = (1, 0)\ngen = (0, 1)\n"), point({"0"})) == 0);
}

TEST_CASE("Samuel relation and cokernel identity on random modules") {
  corpus::Generator gen(31);
  for (int trial = 0; trial < 40; ++trial) {
    const GradedSubmodule y(gen.homogeneous_module());
    const auto fd = static_cast<std::int64_t>(fiber_dim_generic(y));
    const auto r = samuel_quotient(y, y.cap());
    CAPTURE(serialize_module(y));
    CHECK(r.c_T == static_cast<std::int64_t>(y.ambient_rank()));
    CHECK(r.c_T == r.c_S + r.fd_limit);
    CHECK(r.fd_limit == fd);
    PointSampler sampler(static_cast<std::uint64_t>(trial));
    for (int s = 0; s < 8; ++s) {
      const auto p = sampler.point(y.vars(), s < 4 ? Integer(1) : Integer(50));
      const auto cok = static_cast<std::int64_t>(cokernel_dim_at(y, p));
      CHECK(cok >= static_cast<std::int64_t>(y.ambient_rank()) - fd);
      if (fiber_dim_at(y, p) == static_cast<std::size_t>(fd)) {
        CHECK(cok == static_cast<std::int64_t>(y.ambient_rank()) - fd);
      }
    }
  }
}

TEST_CASE("translation invariance") {
  corpus::Generator gen(57);
  int graded_checks = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Submodule y = gen.homogeneous_module();
    PointSampler sampler(static_cast<std::uint64_t>(trial));
    // a zero shift on some coordinates keeps some inputs homogeneous
    RationalVector shift = sampler.point(y.vars(), 3);
    if (trial % 3 == 0) std::fill(shift.begin(), shift.end(), Rational(0));
    const Submodule moved = y.translate(shift);
    CHECK(fiber_dim_generic(moved) == fiber_dim_generic(y));
    if (moved.is_homogeneous()) {
      const GradedSubmodule g(moved);
      CHECK(fd_by_limit_formula(g, g.cap()) == static_cast<std::int64_t>(fiber_dim_generic(y)));
      ++graded_checks;
    }
  }
  CHECK(graded_checks > 0);
}

TEST_CASE("ambient table") {
  const auto t = ambient_codim_table(2, 3, 10);
  CHECK(t.leading_value() == 3);
  CHECK(t.dims[3] == 3 * 6);
}
