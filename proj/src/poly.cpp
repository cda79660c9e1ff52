#include "fiberdim/poly.hpp"

#include <numeric>

#include "fiberdim/error.hpp"

namespace fiberdim {

Monomial::Monomial(std::vector<unsigned> exponents)
    : exponents_(std::move(exponents)),
      degree_(std::accumulate(exponents_.begin(), exponents_.end(), 0u)) {}

Monomial Monomial::variable(std::size_t vars, std::size_t index) {
  std::vector<unsigned> e(vars, 0);
  e.at(index) = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<unsigned> e = exponents_;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exponents_[i];
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

Monomial Monomial::cofactor_in(const Monomial& other) const {
  std::vector<unsigned> e = other.exponents_;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= exponents_[i];
  return Monomial(std::move(e));
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a.exponents() <=> b.exponents();
}

namespace {

void enumerate(std::size_t vars, unsigned remaining, std::size_t pos, std::vector<unsigned>& cur,
               std::vector<Monomial>& out) {
  if (pos + 1 == vars) {
    cur[pos] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur[pos] = e;
    enumerate(vars, remaining - e, pos + 1, cur, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t vars, unsigned degree) {
  std::vector<Monomial> out;
  if (vars == 0) {
    if (degree == 0) out.emplace_back(std::vector<unsigned>{});
    return out;
  }
  std::vector<unsigned> cur(vars, 0);
  enumerate(vars, degree, 0, cur, out);
  return out;
}

std::size_t monomial_count(std::size_t vars, unsigned degree) {
  if (vars == 0) return degree == 0 ? 1 : 0;
  return binomial(degree + vars - 1, vars - 1).get_ui();
}

// ---------------------------------------------------------------------------

MultiPoly MultiPoly::constant(std::size_t vars, const Rational& c) {
  return monomial(c, Monomial::one(vars));
}

MultiPoly MultiPoly::variable(std::size_t vars, std::size_t index) {
  return monomial(Rational(1), Monomial::variable(vars, index));
}

MultiPoly MultiPoly::monomial(const Rational& c, const Monomial& m) {
  MultiPoly p(m.vars());
  p.add_term(m, c);
  return p;
}

int MultiPoly::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

int MultiPoly::low_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree());
}

std::optional<unsigned> MultiPoly::homogeneous_degree() const {
  if (terms_.empty() || degree() != low_degree()) return std::nullopt;
  return static_cast<unsigned>(degree());
}

bool MultiPoly::is_homogeneous() const { return terms_.empty() || degree() == low_degree(); }

MultiPoly MultiPoly::homogeneous_part(unsigned degree) const {
  MultiPoly out(vars_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() == degree) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (m.vars() != vars_) fail(ErrorCode::kShapeMismatch, "monomial variable count differs from polynomial");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != vars_) fail(ErrorCode::kShapeMismatch, "evaluation point has wrong dimension");
  Rational sum = 0;
  Rational power;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < vars_; ++i) {
      if (m[i] == 0) continue;
      mpz_pow_ui(power.get_num_mpz_t(), point[i].get_num_mpz_t(), m[i]);
      mpz_pow_ui(power.get_den_mpz_t(), point[i].get_den_mpz_t(), m[i]);
      t *= power;
    }
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::translate(std::span<const Rational> shift) const {
  if (shift.size() != vars_) fail(ErrorCode::kShapeMismatch, "translation vector has wrong dimension");
  // powers[i][e] = (z_i + shift_i)^e, built on demand
  std::vector<std::vector<MultiPoly>> powers(vars_);
  auto power = [&](std::size_t i, unsigned e) -> const MultiPoly& {
    auto& table = powers[i];
    if (table.empty()) table.push_back(constant(vars_, 1));
    while (table.size() <= e) {
      MultiPoly base = variable(vars_, i) + constant(vars_, shift[i]);
      table.push_back(table.back() * base);
    }
    return table[e];
  };
  MultiPoly out(vars_);
  for (const auto& [m, c] : terms_) {
    MultiPoly t = constant(vars_, c);
    for (std::size_t i = 0; i < vars_; ++i) {
      if (m[i] != 0) t = t * power(i, m[i]);
    }
    out += t;
  }
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  if (other.vars_ != vars_) fail(ErrorCode::kShapeMismatch, "adding polynomials in different rings");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  if (other.vars_ != vars_) fail(ErrorCode::kShapeMismatch, "subtracting polynomials in different rings");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, v] : terms_) v *= c;
  }
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [m, v] : out.terms_) v = -v;
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ != b.vars_) fail(ErrorCode::kShapeMismatch, "multiplying polynomials in different rings");
  MultiPoly out(a.vars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) fail(ErrorCode::kInvariantViolation, "exact division by the zero polynomial");
  MultiPoly quotient(a.vars());
  MultiPoly rest = a;
  const Monomial& lead = b.leading_monomial();
  const Rational& lead_c = b.leading_coefficient();
  while (!rest.is_zero()) {
    if (!lead.divides(rest.leading_monomial())) {
      fail(ErrorCode::kInvariantViolation, "polynomial division is not exact");
    }
    MultiPoly t = MultiPoly::monomial(rest.leading_coefficient() / lead_c, lead.cofactor_in(rest.leading_monomial()));
    rest -= t * b;
    quotient += t;
  }
  return quotient;
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || m.degree() == 0) {
      out += mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < m.vars(); ++i) {
      if (m[i] == 0) continue;
      if (wrote) out += "*";
      out += "z" + std::to_string(i + 1);
      if (m[i] > 1) out += "^" + std::to_string(m[i]);
      wrote = true;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

PolyVec::PolyVec(std::size_t vars, std::size_t length)
    : vars_(vars), entries_(length, MultiPoly(vars)) {}

PolyVec::PolyVec(std::size_t vars, std::vector<MultiPoly> entries)
    : vars_(vars), entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (e.vars() != vars_) fail(ErrorCode::kShapeMismatch, "vector entries live in different rings");
  }
}

PolyVec PolyVec::unit(std::size_t vars, std::size_t length, std::size_t index) {
  PolyVec v(vars, length);
  v.entries_.at(index) = MultiPoly::constant(vars, 1);
  return v;
}

bool PolyVec::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

int PolyVec::degree() const {
  int d = -1;
  for (const auto& e : entries_) d = std::max(d, e.degree());
  return d;
}

std::optional<unsigned> PolyVec::homogeneous_degree() const {
  auto present = degrees_present();
  if (present.size() != 1) return std::nullopt;
  return present.front();
}

bool PolyVec::is_homogeneous() const { return degrees_present().size() <= 1; }

PolyVec PolyVec::homogeneous_part(unsigned degree) const {
  PolyVec out(vars_, entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i].homogeneous_part(degree);
  return out;
}

std::vector<unsigned> PolyVec::degrees_present() const {
  std::vector<bool> seen;
  for (const auto& e : entries_) {
    for (const auto& [m, c] : e.terms()) {
      if (seen.size() <= m.degree()) seen.resize(m.degree() + 1, false);
      seen[m.degree()] = true;
    }
  }
  std::vector<unsigned> out;
  for (unsigned d = 0; d < seen.size(); ++d) {
    if (seen[d]) out.push_back(d);
  }
  return out;
}

RationalVector PolyVec::evaluate(std::span<const Rational> point) const {
  RationalVector out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.evaluate(point));
  return out;
}

PolyVec PolyVec::translate(std::span<const Rational> shift) const {
  PolyVec out(vars_, entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i].translate(shift);
  return out;
}

PolyVec& PolyVec::operator+=(const PolyVec& other) {
  if (other.length() != length()) fail(ErrorCode::kShapeMismatch, "adding vectors of different length");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

PolyVec& PolyVec::operator-=(const PolyVec& other) {
  if (other.length() != length()) fail(ErrorCode::kShapeMismatch, "subtracting vectors of different length");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

PolyVec operator*(const MultiPoly& p, const PolyVec& v) {
  PolyVec out(v.vars_, v.length());
  if (p.is_zero()) return out;
  for (std::size_t i = 0; i < v.length(); ++i) out.entries_[i] = p * v.entries_[i];
  return out;
}

PolyVec operator*(const Rational& c, const PolyVec& v) {
  PolyVec out = v;
  for (auto& e : out.entries_) e *= c;
  return out;
}

std::string to_string(const PolyVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.length(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

}  // namespace fiberdim
