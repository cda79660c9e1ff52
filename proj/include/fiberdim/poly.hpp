#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fiberdim/rational.hpp"

namespace fiberdim {

/// Exponent vector z^a = z_1^a_1 ... z_n^a_n.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exponents);

  static Monomial one(std::size_t vars) { return Monomial(std::vector<unsigned>(vars, 0)); }
  static Monomial variable(std::size_t vars, std::size_t index);

  std::size_t vars() const noexcept { return exponents_.size(); }
  unsigned degree() const noexcept { return degree_; }
  unsigned operator[](std::size_t i) const { return exponents_[i]; }
  const std::vector<unsigned>& exponents() const noexcept { return exponents_; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// other / *this; requires divides(other).
  Monomial cofactor_in(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<unsigned> exponents_;
  unsigned degree_ = 0;
};

/// Graded lexicographic comparison: total degree first, then lex with z_1 > z_2 > ...
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);

/// Orders maps so that begin() is the grlex-largest monomial.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

/// All monomials of total degree d in `vars` variables, in grlex-descending order.
std::vector<Monomial> monomials_of_degree(std::size_t vars, unsigned degree);

/// Number of monomials of degree d in `vars` variables, C(d + vars - 1, vars - 1).
std::size_t monomial_count(std::size_t vars, unsigned degree);

/// Sparse polynomial over the rationals. Zero coefficients are never stored.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Rational, GrlexDescending>;

  explicit MultiPoly(std::size_t vars = 0) : vars_(vars) {}

  static MultiPoly constant(std::size_t vars, const Rational& c);
  static MultiPoly variable(std::size_t vars, std::size_t index);
  static MultiPoly monomial(const Rational& c, const Monomial& m);

  std::size_t vars() const noexcept { return vars_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Total degree, -1 for the zero polynomial.
  int degree() const;
  /// Smallest total degree present, -1 for zero.
  int low_degree() const;
  /// Zero is homogeneous of every degree and reports nullopt here.
  std::optional<unsigned> homogeneous_degree() const;
  bool is_homogeneous() const;
  MultiPoly homogeneous_part(unsigned degree) const;

  Rational coefficient(const Monomial& m) const;
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  /// Adds c*m in place.
  void add_term(const Monomial& m, const Rational& c);

  Rational evaluate(std::span<const Rational> point) const;

  /// p(z + shift).
  MultiPoly translate(std::span<const Rational> shift) const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& c);
  MultiPoly operator-() const;

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  std::size_t vars_;
  Terms terms_;
};

/// Exact quotient a / b. Throws Error(kInvariantViolation) if b does not divide a
/// or b is zero.
MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b);

/// Renders as e.g. "3/2*z1^2*z2 - z1 + 1"; variables are 1-based.
std::string to_string(const MultiPoly& p);

/// Element of the free module Q[z]^N.
class PolyVec {
 public:
  PolyVec() = default;
  /// Zero vector.
  PolyVec(std::size_t vars, std::size_t length);
  PolyVec(std::size_t vars, std::vector<MultiPoly> entries);

  static PolyVec unit(std::size_t vars, std::size_t length, std::size_t index);

  std::size_t vars() const noexcept { return vars_; }
  std::size_t length() const noexcept { return entries_.size(); }
  const MultiPoly& operator[](std::size_t i) const { return entries_[i]; }
  MultiPoly& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<MultiPoly>& entries() const noexcept { return entries_; }

  bool is_zero() const;
  int degree() const;
  std::optional<unsigned> homogeneous_degree() const;
  bool is_homogeneous() const;
  PolyVec homogeneous_part(unsigned degree) const;
  /// Degrees carrying at least one nonzero term, ascending.
  std::vector<unsigned> degrees_present() const;

  RationalVector evaluate(std::span<const Rational> point) const;
  PolyVec translate(std::span<const Rational> shift) const;

  PolyVec& operator+=(const PolyVec& other);
  PolyVec& operator-=(const PolyVec& other);
  friend PolyVec operator+(PolyVec a, const PolyVec& b) { return a += b; }
  friend PolyVec operator-(PolyVec a, const PolyVec& b) { return a -= b; }
  friend PolyVec operator*(const MultiPoly& p, const PolyVec& v);
  friend PolyVec operator*(const Rational& c, const PolyVec& v);
  friend bool operator==(const PolyVec&, const PolyVec&) = default;

 private:
  std::size_t vars_ = 0;
  std::vector<MultiPoly> entries_;
};

std::string to_string(const PolyVec& v);

}  // namespace fiberdim
