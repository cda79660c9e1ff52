#include "fiberdim/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "fiberdim/echelon.hpp"
#include "fiberdim/error.hpp"
#include "fiberdim/fiber.hpp"

namespace fiberdim {
namespace {

ExactMatrix evaluated_rows(const std::vector<PolyVec>& gens, std::size_t rank, std::span<const Rational> point) {
  ExactMatrix out(0, rank);
  for (const auto& g : gens) out.append_row(g.evaluate(point));
  return out;
}

RationalVector unit_vector(std::size_t length, std::size_t index) {
  RationalVector v(length);
  v[index] = 1;
  return v;
}

// Constant combination of `gens` whose value at the point is `target`.
// Generators are tried in order of increasing degree.
PolyVec lift(const std::vector<PolyVec>& gens, std::size_t vars, std::size_t rank, std::span<const Rational> point,
             std::span<const Rational> target) {
  std::vector<std::size_t> order(gens.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return gens[a].degree() < gens[b].degree(); });
  ExactMatrix values(0, rank);
  for (std::size_t k : order) values.append_row(gens[k].evaluate(point));
  const auto coeffs = gens.empty() ? std::nullopt : solve_exact(values, target);
  if (!coeffs) {
    fail(ErrorCode::kInconsistentLift, "prescribed fiber value is not attained by the generators at the point");
  }
  PolyVec out(vars, rank);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if ((*coeffs)[i] != 0) out += (*coeffs)[i] * gens[order[i]];
  }
  return out;
}

// Coordinates of v with respect to the scaffold basis, as polynomials.
std::vector<MultiPoly> basis_coordinates(const ExactMatrix& basis_inverse, const PolyVec& v) {
  const std::size_t n = v.length();
  std::vector<MultiPoly> out(n, MultiPoly(v.vars()));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      if (basis_inverse(k, l) != 0 && !v[l].is_zero()) out[k] += basis_inverse(k, l) * v[l];
    }
  }
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::kInvariantViolation, what);
}

// Rows are coordinates of the filtered piece {z^a g : |a| + deg g <= top} in
// the space of vectors of degree <= top; degree blocks are laid out in order.
ExactMatrix filtered_rows(const Submodule& m, unsigned top) {
  const std::size_t n = m.vars(), rank = m.ambient_rank();
  std::vector<std::size_t> offset(top + 2, 0);
  for (unsigned j = 0; j <= top; ++j) offset[j + 1] = offset[j] + monomial_count(n, j) * rank;
  ExactMatrix rows(0, offset[top + 1]);
  for (const auto& g : m.generators()) {
    if (g.is_zero() || g.degree() > static_cast<int>(top)) continue;
    for (unsigned s = 0; s + g.degree() <= top; ++s) {
      for (const Monomial& shift : monomials_of_degree(n, s)) {
        const PolyVec moved = MultiPoly::monomial(1, shift) * g;
        RationalVector coords(offset[top + 1]);
        for (unsigned d : moved.degrees_present()) {
          const RationalVector part = component_coordinates(moved.homogeneous_part(d), d);
          std::copy(part.begin(), part.end(), coords.begin() + static_cast<std::ptrdiff_t>(offset[d]));
        }
        rows.append_row(coords);
      }
    }
  }
  return rows;
}

PolyVec from_filtered_coordinates(std::span<const Rational> coords, std::size_t vars, std::size_t rank, unsigned top) {
  PolyVec out(vars, rank);
  std::size_t offset = 0;
  for (unsigned j = 0; j <= top; ++j) {
    const std::size_t width = monomial_count(vars, j) * rank;
    out += from_component_coordinates(coords.subspan(offset, width), vars, rank, j);
    offset += width;
  }
  return out;
}

}  // namespace

LatticeReport lattice_check(const GradedSubmodule& m1, const GradedSubmodule& m2, std::optional<unsigned> cap,
                            std::uint64_t seed, bool with_witnesses) {
  require_same_shape(m1, m2);
  const GradedSubmodule sum = module_sum(m1, m2);
  LatticeReport report;
  report.fd1 = static_cast<std::int64_t>(fiber_dim_generic(m1));
  report.fd2 = static_cast<std::int64_t>(fiber_dim_generic(m2));
  report.fd_sum = static_cast<std::int64_t>(fiber_dim_generic(sum));
  report.d_prime = report.fd1 + report.fd2 - report.fd_sum;

  const auto n = static_cast<unsigned>(m1.vars());
  const unsigned start = cap.value_or(std::max(m1.cap(), m2.cap()));
  std::vector<std::int64_t> dims;
  for (const auto& comp : module_intersect_upto(m1, m2, start)) dims.push_back(static_cast<std::int64_t>(comp.dim()));
  report.cap_used = start;
  report.intersection_table = make_hilbert_table(dims, n, n + 2);
  // Intersections are the costly part, so the retry grows the table one
  // degree at a time up to 2 * start instead of jumping there.
  while (!report.intersection_table.stabilized && report.cap_used < 2 * start) {
    ++report.cap_used;
    dims.push_back(static_cast<std::int64_t>(module_intersect_component(m1, m2, report.cap_used).dim()));
    report.intersection_table = make_hilbert_table(dims, n, n + 2);
  }
  report.fd_cap = report.intersection_table.leading_value();
  report.equality_holds = report.fd_sum + report.fd_cap == report.fd1 + report.fd2;

  if (with_witnesses) {
    const std::vector<Submodule> all{m1, m2, sum};
    report.point = common_maximal_point(all, seed);
    report.witnesses = extract_witnesses(build_witness_scaffold(m1, m2, report.point));
    for (const auto& w : report.witnesses) {
      require(membership(m1, w) && membership(m2, w), "witness " + to_string(w) + " is not in both modules");
    }
    report.witness_count = report.witnesses.size();
  }
  return report;
}

LatticeInequality lattice_inequality(const Submodule& m1, const Submodule& m2, unsigned filter_degree,
                                     std::uint64_t seed) {
  require_same_shape(m1, m2);
  const Submodule sum = module_sum(m1, m2);
  LatticeInequality out;
  out.fd1 = static_cast<std::int64_t>(fiber_dim_generic(m1));
  out.fd2 = static_cast<std::int64_t>(fiber_dim_generic(m2));
  out.fd_sum = static_cast<std::int64_t>(fiber_dim_generic(sum));
  out.filter_degree = filter_degree;
  const std::vector<Submodule> all{m1, m2, sum};
  out.point = common_maximal_point(all, seed);

  const std::size_t rank = m1.ambient_rank();
  const ExactMatrix fiber1 = evaluated_rows(m1.generators(), rank, out.point);
  const ExactMatrix fiber2 = evaluated_rows(m2.generators(), rank, out.point);
  out.fiber_intersection = static_cast<std::int64_t>(rowspace_intersect(fiber1, fiber2).rows());
  require(out.fiber_intersection == out.fd1 + out.fd2 - out.fd_sum,
          "Grassmann identity failed for fibers at a common maximal point");

  const ExactMatrix common = rowspace_intersect(filtered_rows(m1, filter_degree), filtered_rows(m2, filter_degree));
  ExactMatrix values(0, rank);
  for (std::size_t r = 0; r < common.rows(); ++r) {
    values.append_row(from_filtered_coordinates(common.row(r), m1.vars(), rank, filter_degree).evaluate(out.point));
  }
  out.fd_cap_lower = static_cast<std::int64_t>(rank_exact(values));
  out.holds = out.fd1 + out.fd2 >= out.fd_sum + out.fd_cap_lower;
  return out;
}

WitnessScaffold build_witness_scaffold(const Submodule& m1, const Submodule& m2, std::span<const Rational> point) {
  require_same_shape(m1, m2);
  const Submodule sum = module_sum(m1, m2);
  for (const Submodule* m : {&m1, &m2, &sum}) {
    if (fiber_dim_at(*m, point) != fiber_dim_generic(*m)) {
      fail(ErrorCode::kPointNotMaximal, "point " + to_string(point) + " is not maximal; resample");
    }
  }
  const std::size_t vars = m1.vars(), rank = m1.ambient_rank();
  WitnessScaffold s;
  s.point.assign(point.begin(), point.end());
  s.vars = vars;
  s.rank = rank;

  // Fibers and the split (M1)_λ = E1 ⊕ E, (M2)_λ = E2 ⊕ E.
  const ExactMatrix fiber1 = evaluated_rows(m1.generators(), rank, point);
  const ExactMatrix fiber2 = evaluated_rows(m2.generators(), rank, point);
  const ExactMatrix common = rowspace_intersect(row_basis(fiber1), row_basis(fiber2));
  auto complement = [&](const ExactMatrix& fiber) {
    SparseEchelon ech(rank);
    for (std::size_t r = 0; r < common.rows(); ++r) ech.insert(to_sparse_row(common.row(r)));
    ExactMatrix out(0, rank);
    for (std::size_t r = 0; r < fiber.rows(); ++r) {
      if (ech.insert(to_sparse_row(fiber.row(r)))) out.append_row(fiber.row(r));
    }
    return out;
  };
  const ExactMatrix e1 = complement(fiber1);
  const ExactMatrix e2 = complement(fiber2);
  s.d1 = e1.rows();
  s.d2 = e2.rows();
  s.d_prime = common.rows();
  s.d = s.d1 + s.d2 + s.d_prime;
  require(s.d == fiber_dim_at(sum, point), "E1, E2, E do not form a basis of the fiber of M1 + M2");

  // e_1..e_d, then standard unit vectors keeping independence.
  ExactMatrix rows = e1.stack(e2).stack(common);
  if (rows.rows() == 0) rows = ExactMatrix(0, rank);
  SparseEchelon ech(rank);
  for (std::size_t r = 0; r < rows.rows(); ++r) ech.insert(to_sparse_row(rows.row(r)));
  for (std::size_t k = 0; k < rank && rows.rows() < rank; ++k) {
    const RationalVector u = unit_vector(rank, k);
    if (ech.insert(to_sparse_row(u))) rows.append_row(u);
  }
  s.basis = rows.transpose();
  auto inv = inverse(s.basis);
  require(inv.has_value(), "completed basis is singular");
  s.basis_inverse = std::move(*inv);
  auto e = [&](std::size_t k) { return RationalVector(rows.row(k).begin(), rows.row(k).end()); };

  // Lifts h_i in M = M1 + M2 and the matrix theta of their first d coordinates.
  s.theta = PolyMatrix(vars, s.d, s.d);
  for (std::size_t i = 0; i < s.d; ++i) {
    s.h.push_back(lift(sum.generators(), vars, rank, point, e(i)));
    const auto coords = basis_coordinates(s.basis_inverse, s.h.back());
    for (std::size_t j = 0; j < s.d; ++j) s.theta(i, j) = coords[j];
  }
  require(s.theta.evaluate(point) == ExactMatrix::identity(s.d), "theta(λ) is not the identity");
  s.theta_det = determinant(s.theta);
  s.theta_adjugate = adjugate(s.theta);
  require((s.theta_adjugate * s.theta - scalar_diagonal(s.theta_det, s.d)).is_zero(),
          "adj(theta) * theta differs from diag(det theta)");

  // F's from M1 and G's from M2 with prescribed values at λ.
  for (std::size_t i = 0; i < s.d1; ++i) s.f.push_back(lift(m1.generators(), vars, rank, point, e(i)));
  for (std::size_t i = 0; i < s.d_prime; ++i) {
    s.f.push_back(lift(m1.generators(), vars, rank, point, e(s.d1 + s.d2 + i)));
  }
  for (std::size_t i = 0; i < s.d2 + s.d_prime; ++i) s.g.push_back(lift(m2.generators(), vars, rank, point, e(s.d1 + i)));

  // delta = (delta0, delta1): first d coordinates of
  // F_1..F_d1, G_1..G_d2, F_{d1+1}..F_{d1+d'} | G_{d2+1}..G_{d2+d'}.
  std::vector<const PolyVec*> columns;
  for (std::size_t i = 0; i < s.d1; ++i) columns.push_back(&s.f[i]);
  for (std::size_t i = 0; i < s.d2; ++i) columns.push_back(&s.g[i]);
  for (std::size_t i = 0; i < s.d_prime; ++i) columns.push_back(&s.f[s.d1 + i]);
  for (std::size_t i = 0; i < s.d_prime; ++i) columns.push_back(&s.g[s.d2 + i]);
  PolyMatrix delta(vars, s.d, s.d + s.d_prime);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const auto coords = basis_coordinates(s.basis_inverse, *columns[c]);
    for (std::size_t r = 0; r < s.d; ++r) delta(r, c) = coords[r];
  }
  std::vector<std::size_t> all_rows(s.d), left(s.d), right(s.d_prime);
  std::iota(all_rows.begin(), all_rows.end(), 0);
  std::iota(left.begin(), left.end(), 0);
  std::iota(right.begin(), right.end(), s.d);
  s.delta0 = delta.submatrix(all_rows, left);
  s.delta1 = delta.submatrix(all_rows, right);
  s.delta0_det = determinant(s.delta0);
  require(s.delta0_det.evaluate(point) == 1, "det(delta0) is not 1 at the point");
  s.gamma = adjugate(s.delta0) * s.delta1;

  // r_j = (gamma_1j, .., gamma_dj, 0, .., -det(delta0) at d + j, 0, ..).
  for (std::size_t j = 0; j < s.d_prime; ++j) {
    std::vector<MultiPoly> rj(s.d + s.d_prime, MultiPoly(vars));
    for (std::size_t i = 0; i < s.d; ++i) rj[i] = s.gamma(i, j);
    rj[s.d + j] = -s.delta0_det;
    for (std::size_t i = 0; i < s.d; ++i) {
      MultiPoly acc(vars);
      for (std::size_t k = 0; k < rj.size(); ++k) {
        if (!rj[k].is_zero() && !delta(i, k).is_zero()) acc += delta(i, k) * rj[k];
      }
      require(acc.is_zero(), "delta * r_" + std::to_string(j + 1) + " is not zero");
    }
    s.r.push_back(std::move(rj));
  }
  return s;
}

std::vector<PolyVec> extract_witnesses(const WitnessScaffold& s) {
  std::vector<PolyVec> out;
  if (s.d_prime == 0) return out;
  ExactMatrix values(0, s.rank);
  for (std::size_t j = 0; j < s.d_prime; ++j) {
    PolyVec from_m1(s.vars, s.rank);
    for (std::size_t i = 0; i < s.d1; ++i) from_m1 += s.gamma(i, j) * s.f[i];
    for (std::size_t i = 0; i < s.d_prime; ++i) from_m1 += s.gamma(s.d1 + s.d2 + i, j) * s.f[s.d1 + i];

    PolyVec from_m2 = s.delta0_det * s.g[s.d2 + j];
    for (std::size_t i = 0; i < s.d2; ++i) from_m2 -= s.gamma(s.d1 + i, j) * s.g[i];

    if (!(from_m1 == from_m2)) {
      fail(ErrorCode::kIdentityViolated, "witness " + std::to_string(j + 1) +
                                             ": the M1 and M2 expressions differ as polynomials");
    }
    values.append_row(from_m1.evaluate(s.point));
    out.push_back(std::move(from_m1));
  }
  if (rank_exact(values) != s.d_prime) {
    fail(ErrorCode::kInvariantViolation, "witness values at the point do not have rank d'");
  }
  return out;
}

}  // namespace fiberdim
