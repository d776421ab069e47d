#pragma once

#include <span>
#include <string>

#include "jaclab/algebra.hpp"
#include "jaclab/multipoly.hpp"

namespace jaclab {

/// Reduced quotient of two MultiPoly. Canonical form: gcd(num, den) is
/// constant, den is integer-primitive with positive leading coefficient
/// (grlex), so the rational content of the value lives in the numerator and
/// structural equality is semantic equality.
class RatFunc {
 public:
  RatFunc() : num_(0), den_(MultiPoly::constant(0, Rational(1))) {}
  RatFunc(long c)  // NOLINT: constants convert implicitly
      : num_(MultiPoly::constant(0, Rational(c))),
        den_(MultiPoly::constant(0, Rational(1))) {}
  explicit RatFunc(const Rational& c, int nvars = 0)
      : num_(MultiPoly::constant(nvars, c)),
        den_(MultiPoly::constant(nvars, Rational(1))) {}
  explicit RatFunc(const MultiPoly& num)
      : num_(num), den_(MultiPoly::constant(num.nvars(), Rational(1))) {}
  /// reduce(num, den); throws "ZeroDenominator" when den = 0.
  RatFunc(const MultiPoly& num, const MultiPoly& den);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  int nvars() const { return num_.nvars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  RatFunc pow(unsigned e) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b);
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc derivative(int var) const;

  /// Exact value at a rational point, when the denominator does not vanish
  /// there.
  std::optional<Rational> evaluate(std::span<const Rational> point) const;

  /// Substitute rational functions for all variables (exact composition).
  RatFunc substituted(std::span<const RatFunc> values) const;

  RatFunc extended(int new_nvars) const { return RatFunc(num_.extended(new_nvars), den_.extended(new_nvars)); }
  RatFunc remapped(int new_nvars, std::span<const int> perm) const {
    return RatFunc(num_.remapped(new_nvars, perm), den_.remapped(new_nvars, perm));
  }

  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  MultiPoly num_, den_;
};

/// Canonical reduced quotient (the `reduce` operation).
RatFunc reduce(const MultiPoly& num, const MultiPoly& den);

}  // namespace jaclab
