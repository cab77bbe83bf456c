#ifndef TETRALAT_LAURENT_HPP
#define TETRALAT_LAURENT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tetralat/rational.hpp"
#include "tetralat/varpool.hpp"

namespace tetralat {

/// Sparse exponent vector: sorted by VarId, no zero exponents stored.
/// Exponents may be negative.
using Monomial = std::vector<std::pair<VarId, int>>;

Monomial mono_mul(const Monomial& a, const Monomial& b);
std::int64_t mono_total_degree(const Monomial& m);
int mono_degree_in(const Monomial& m, VarId v);

/// Graded lexicographic comparison over the registry order:
/// total degree first, ties broken by the exponent of the smallest VarId
/// where the monomials differ (larger exponent sorts later).
int grlex_cmp(const Monomial& a, const Monomial& b);

struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_cmp(a, b) < 0; }
};

/// Sparse multivariate Laurent polynomial with exact rational coefficients.
/// Canonical form: no zero coefficients, terms keyed by grlex order.
class LaurentPoly {
public:
  using TermMap = std::map<Monomial, Rational, MonoLess>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT: constants convert implicitly
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}

  static LaurentPoly variable(VarId v, int exp = 1);
  static LaurentPoly monomial(const Monomial& m, const Rational& c);
  static LaurentPoly parse(const std::string& text);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  bool is_single_term() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Constant-term coefficient (zero if absent).
  Rational constant_coeff() const;
  Rational coeff(const Monomial& m) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly pow(long e) const;

  /// Exact quotient q with q*den == *this; throws NotDivisible otherwise.
  LaurentPoly div_exact(const LaurentPoly& den) const;

  /// Substitutes bound variables. A rational binding of 0 for a variable with
  /// a negative exponent throws PoleAtZero; a polynomial binding raised to a
  /// negative power must be a single term.
  LaurentPoly substitute(const std::map<VarId, LaurentPoly>& bindings) const;

  /// Full evaluation; every variable that occurs must be bound.
  Rational evaluate(const std::map<VarId, Rational>& bindings) const;

  /// Swaps two variables (used by divided-difference operators).
  LaurentPoly swap_vars(VarId a, VarId b) const;

  std::vector<VarId> variables() const;
  int degree_in(VarId v) const;      // max exponent, 0 if absent
  int min_degree_in(VarId v) const;  // min exponent, 0 if absent
  std::int64_t total_degree() const;  // max total degree over terms, 0 for zero poly

  bool has_nonnegative_coeffs() const;

  /// Canonical text form: terms in descending grlex order, explicit rational
  /// coefficients, e.g. "2*z1^2*z2^-1 - 1/3*q + 5". Round-trips via parse().
  std::string to_string() const;

private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;

  friend class FormalSeries;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// z_i - z_j style helper products.
LaurentPoly poly_var(const std::string& name);

}  // namespace tetralat

#endif
