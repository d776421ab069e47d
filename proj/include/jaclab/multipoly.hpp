#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jaclab/rational.hpp"

namespace jaclab {

using ExpVec = std::vector<int>;

/// Graded lexicographic order, descending (so map.begin() is the leading term).
struct GrlexGreater {
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};

/// Sparse multivariate polynomial over the rationals. Terms are stored in
/// descending grlex order; no zero coefficients and no duplicate exponent
/// vectors are ever kept, so equal polynomials are structurally equal.
class MultiPoly {
 public:
  using TermMap = std::map<ExpVec, Rational, GrlexGreater>;

  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly variable(int nvars, int index);
  static MultiPoly monomial(int nvars, ExpVec exps, const Rational& c);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  int term_count() const { return static_cast<int>(terms_.size()); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant value; zero polynomial yields 0.
  Rational constant_value() const;

  int total_degree() const;          // -1 for the zero polynomial
  int degree_in(int var) const;      // -1 for the zero polynomial

  /// Leading term under grlex.
  const ExpVec& leading_exponents() const;
  const Rational& leading_coefficient() const;

  /// Coefficient of v^k, as a polynomial in the remaining variables
  /// (same variable space, exponent of v set to zero).
  MultiPoly coefficient_of(int var, int power) const;
  /// Coefficient of v^(degree_in(v)).
  MultiPoly leading_coefficient_in(int var) const;
  /// Dense coefficient list in v, index = power, length degree_in(v)+1.
  std::vector<MultiPoly> coefficients_in(int var) const;
  static MultiPoly from_coefficients_in(int nvars, int var,
                                        std::span<const MultiPoly> coeffs);

  void add_term(const ExpVec& exps, const Rational& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly pow(unsigned e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  Rational evaluate(std::span<const Rational> point) const;
  /// Substitute an exact rational for one variable; the result keeps the
  /// same variable space.
  MultiPoly evaluate_partial(int var, const Rational& value) const;

  MultiPoly derivative(int var) const;

  /// Exact division; nullopt when the divisor does not divide exactly.
  std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;

  /// Positive rational c with (*this) = c * P, P integer-coefficient
  /// primitive. Zero polynomial yields 0.
  Rational content() const;
  MultiPoly primitive_part() const;  // sign kept with the leading coefficient

  /// Content with respect to one variable: gcd of the coefficients_in(var).
  MultiPoly content_in(int var) const;

  /// Variables that actually occur.
  std::vector<int> support() const;

  /// Reinterpret over a wider variable space (new variables appended).
  MultiPoly extended(int new_nvars) const;
  /// Drop trailing unused variables down to new_nvars (they must not occur).
  MultiPoly truncated(int new_nvars) const;
  /// Rename variables: result has new_nvars variables, old var i becomes
  /// perm[i].
  MultiPoly remapped(int new_nvars, std::span<const int> perm) const;

  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  int nvars_;
  TermMap terms_;
};

/// p with every variable substituted by a polynomial (exact composition).
MultiPoly substitute_poly(const MultiPoly& p, std::span<const MultiPoly> values);

}  // namespace jaclab
