#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jaclab/rational.hpp"

namespace jaclab {

/// Dense univariate polynomial over a field K (exact rationals, or rational
/// functions for minimal polynomials in a distinguished variable). The
/// coefficient vector never ends in a zero, so degree() is just size-1.
template <class K>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UniPoly zero() { return UniPoly(); }
  static UniPoly constant(K v) {
    UniPoly p;
    p.c_.push_back(std::move(v));
    p.trim();
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(k)] : K(0);
  }
  const K& leading() const {
    if (c_.empty()) throw std::logic_error("UniPoly: zero has no leading coefficient");
    return c_.back();
  }
  void set_coeff(int k, K v) {
    if (k < 0) throw std::invalid_argument("UniPoly::set_coeff: negative index");
    if (k >= static_cast<int>(c_.size())) c_.resize(static_cast<size_t>(k) + 1, K(0));
    c_[static_cast<size_t>(k)] = std::move(v);
    trim();
  }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), K(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, K(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
  }
  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  UniPoly scaled(const K& s) const {
    UniPoly r = *this;
    for (auto& v : r.c_) v = v * s;
    r.trim();
    return r;
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  /// Field division with remainder.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
    UniPoly q, r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
      int shift = r.degree() - b.degree();
      K factor = r.leading() / b.leading();
      q.set_coeff(shift, q.coeff(shift) + factor);
      for (int i = 0; i <= b.degree(); ++i) {
        size_t k = static_cast<size_t>(i + shift);
        r.c_.resize(std::max(r.c_.size(), k + 1), K(0));
        r.c_[k] = r.c_[k] - factor * b.c_[static_cast<size_t>(i)];
      }
      r.trim();
    }
    return {q, r};
  }

  UniPoly derivative() const {
    UniPoly r;
    for (int k = 1; k <= degree(); ++k)
      r.set_coeff(k - 1, c_[static_cast<size_t>(k)] * K(k));
    return r;
  }

  template <class V>
  V evaluate(const V& x) const {
    V acc(0);
    for (int k = degree(); k >= 0; --k) acc = acc * x + V(c_[static_cast<size_t>(k)]);
    return acc;
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    return scaled(K(1) / leading());
  }

  /// Reverse-coefficient polynomial x^deg * p(1/x).
  UniPoly reversed() const {
    UniPoly r = *this;
    std::reverse(r.c_.begin(), r.c_.end());
    r.trim();
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
  }
  std::vector<K> c_;
};

template <class K>
UniPoly<K> gcd(const UniPoly<K>& a, const UniPoly<K>& b) {
  UniPoly<K> x = a, y = b;
  while (!y.is_zero()) {
    auto [q, r] = UniPoly<K>::divmod(x, y);
    x = y;
    y = r;
  }
  return x.is_zero() ? x : x.monic();
}

template <class K>
UniPoly<K> squarefree_part(const UniPoly<K>& p) {
  if (p.is_zero()) return p;
  if (p.degree() == 0) return UniPoly<K>::constant(K(1));
  UniPoly<K> g = gcd(p, p.derivative());
  auto [q, r] = UniPoly<K>::divmod(p, g);
  if (!r.is_zero()) throw std::logic_error("squarefree_part: inexact division");
  return q;
}

using QPoly = UniPoly<Rational>;

}  // namespace jaclab
