#ifndef HARDYZ_MPOLY_HPP
#define HARDYZ_MPOLY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hardyz/rational.hpp"

namespace hardyz {

// Fixed, ordered variable universe for a family of polynomials.
// All polynomials taking part in one computation share a ring instance.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names) : names_(std::move(names)) {}
  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  // Index of a variable; throws if unknown.
  std::size_t index(std::string_view var) const;

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names);

// Exponent vector, one entry per ring variable. Degrees stay tiny here
// (at most ~30 per variable), so a byte each is plenty.
using ExpVec = std::vector<std::uint8_t>;

// Graded lexicographic order, ascending; gives a deterministic term order
// for maps and serialization.
struct GrlexLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Zero coefficients are never stored.
class MPoly {
 public:
  using TermMap = std::map<ExpVec, Rational, GrlexLess>;

  MPoly() = default;
  explicit MPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static MPoly zero(RingPtr ring) { return MPoly(std::move(ring)); }
  static MPoly constant(RingPtr ring, const Rational& c);
  static MPoly var(RingPtr ring, std::size_t idx);
  static MPoly var(RingPtr ring, std::string_view name);
  static MPoly monomial(RingPtr ring, const ExpVec& e, const Rational& c);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t nterms() const { return terms_.size(); }
  bool is_constant() const;
  // Constant term (coefficient of the zero monomial).
  Rational constant_term() const;
  // As a constant; throws if non-constant.
  Rational as_constant() const;

  unsigned total_degree() const;
  unsigned degree(std::size_t var) const;
  bool involves(std::size_t var) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b) { return mul(a, b, nullptr); }
  MPoly& operator*=(const MPoly& o) { *this = (*this) * o; return *this; }
  MPoly& operator*=(const Rational& c);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  // Product; when `cap` is given, any product monomial whose exponent in
  // some variable exceeds cap[var] is dropped. Used to truncate variables
  // that are only ever needed to first order.
  static MPoly mul(const MPoly& a, const MPoly& b, const std::vector<std::uint8_t>* cap);

  MPoly pow(unsigned e) const;
  MPoly pow_capped(unsigned e, const std::vector<std::uint8_t>& cap) const;

  MPoly derivative(std::size_t var) const;
  // Antiderivative in `var` with zero constant of integration.
  MPoly antiderivative(std::size_t var) const;
  // Definite integral of `var` over [0,1]; result no longer involves var.
  MPoly integrate_unit(std::size_t var) const;
  // Definite integral over the unit box in each listed variable.
  MPoly integrate_box(std::span<const std::size_t> vars) const;
  // Definite integral of `var` from 0 to `upper`, a polynomial in the
  // other ring variables.
  MPoly integrate_upto(std::size_t var, const MPoly& upper) const;

  // Exact substitution var := replacement.
  MPoly substitute(std::size_t var, const MPoly& replacement) const;

  // Coefficient of the monomial prod(vars^1), as a polynomial in the
  // remaining variables. Equals the mixed first partial derivative in the
  // listed variables evaluated at zero, since each variable is extracted
  // to first order exactly.
  MPoly mixed_derivative_at_zero(std::span<const std::size_t> vars) const;

  Rational eval(std::span<const Rational> point) const;
  double eval_double(std::span<const double> point) const;

  // Deterministic text form: terms in descending graded-lex order,
  // e.g. "3/2*u1^2*u2 - 1/6*u3 + 1".
  std::string str() const;

  void add_term(const ExpVec& e, const Rational& c);

 private:
  void check_same_ring(const MPoly& o) const;
  RingPtr ring_;
  TermMap terms_;
};

// Exact integral of p over the polytope
//   { t in [0,1]^4 : t1+t3 <= 1, t2+t4 <= 1, t1+t2 <= 1, t3+t4 <= 1 }.
// `tvars` are the ring indices of (t1,t2,t3,t4); p must involve no other
// variable. Splitting on t2 <= t3 versus t3 <= t2 leaves a single binding
// bound on each of t1 and t4, so every monomial reduces to a Beta integral:
//   branch t2<=t3:  t1,t4 in [0,1-t3], t2 in [0,t3]
//   branch t3<=t2:  t1,t4 in [0,1-t2], t3 in [0,t2]
Rational integrate_region_T(const MPoly& p, const std::array<std::size_t, 4>& tvars);

// Marker for the region above plus its membership predicate (used by the
// Monte Carlo cross-checks).
struct PolyRegionT {
  static bool contains(double t1, double t2, double t3, double t4) {
    return t1 + t3 <= 1.0 && t2 + t4 <= 1.0 && t1 + t2 <= 1.0 && t3 + t4 <= 1.0;
  }
};

}  // namespace hardyz

#endif  // HARDYZ_MPOLY_HPP
