#include "jaclab/ratfunc.hpp"

#include <sstream>

namespace jaclab {

namespace {

// den -> integer-primitive with positive leading coefficient; the adjusting
// factor moves into num.
void normalize_pair(MultiPoly& num, MultiPoly& den) {
  if (num.is_zero()) {
    den = MultiPoly::constant(den.nvars(), Rational(1));
    return;
  }
  Rational c = den.content();
  if (den.leading_coefficient().sign() < 0) c = -c;
  den *= c.inverse();
  num *= c.inverse();
}

}  // namespace

RatFunc::RatFunc(const MultiPoly& num, const MultiPoly& den) : num_(num), den_(den) {
  if (num_.nvars() != den_.nvars()) {
    int nv = std::max(num_.nvars(), den_.nvars());
    num_ = num_.is_constant() && num_.nvars() < nv ? num_.extended(nv) : num_;
    den_ = den_.is_constant() && den_.nvars() < nv ? den_.extended(nv) : den_;
  }
  if (den_.is_zero()) throw Error("ZeroDenominator", "rational function with zero denominator");
  MultiPoly g = gcd_poly(num_, den_);
  if (!g.is_constant()) {
    num_ = *num_.divide_exact(g);
    den_ = *den_.divide_exact(g);
  }
  normalize_pair(num_, den_);
}

RatFunc reduce(const MultiPoly& num, const MultiPoly& den) { return RatFunc(num, den); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return reduce(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return reduce(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  // Cross-cancel first; the two invariants make the result reduced already.
  MultiPoly g1 = gcd_poly(a.num_, b.den_);
  MultiPoly g2 = gcd_poly(b.num_, a.den_);
  MultiPoly n = *a.num_.divide_exact(g1) * *b.num_.divide_exact(g2);
  MultiPoly d = *a.den_.divide_exact(g2) * *b.den_.divide_exact(g1);
  RatFunc r;
  r.num_ = std::move(n);
  r.den_ = std::move(d);
  normalize_pair(r.num_, r.den_);
  return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw Error("ZeroDenominator", "division by the zero rational function");
  RatFunc inv;
  inv.num_ = b.den_;
  inv.den_ = b.num_;
  normalize_pair(inv.num_, inv.den_);
  return a * inv;
}

RatFunc RatFunc::pow(unsigned e) const {
  RatFunc r;
  r.num_ = num_.pow(e);
  r.den_ = den_.pow(e);
  normalize_pair(r.num_, r.den_);
  return r;
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (a.nvars() != b.nvars()) {
    if (a.is_constant() && b.is_constant()) return a.constant_value() == b.constant_value();
    return false;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

RatFunc RatFunc::derivative(int var) const {
  return reduce(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

std::optional<Rational> RatFunc::evaluate(std::span<const Rational> point) const {
  Rational d = den_.evaluate(point);
  if (d.is_zero()) return std::nullopt;
  return num_.evaluate(point) / d;
}

RatFunc RatFunc::substituted(std::span<const RatFunc> values) const {
  RatFunc n = substitute(num_, values);
  RatFunc d = substitute(den_, values);
  if (d.is_zero())
    throw Error("ZeroDenominator", "composition lands in a denominator zero");
  return n / d;
}

std::string RatFunc::to_string(std::span<const std::string> names) const {
  if (is_polynomial()) return num_.to_string(names);
  std::ostringstream os;
  os << "(" << num_.to_string(names) << ")/(" << den_.to_string(names) << ")";
  return os.str();
}

}  // namespace jaclab
