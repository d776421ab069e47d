#pragma once

#include <optional>
#include <vector>

#include "jaclab/algebra.hpp"
#include "jaclab/unipoly.hpp"

namespace jaclab {

/// Half-open isolating interval (lo, hi] for one real root of `defining`;
/// neither endpoint is a root. `defining` is always the squarefree part of
/// whatever polynomial the box was issued for.
struct RootBox {
  Rational lo, hi;
  QPoly defining;
  bool squarefree_defining = true;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / Rational(2); }
};

/// Sturm chain of the squarefree part: seq[0] is the squarefree part,
/// seq[1] its derivative, and each following entry is a positive scalar
/// multiple of the negated remainder of the previous two (the positive
/// rescaling keeps coefficients integer-primitive and cannot change any
/// sign variation).
struct SturmChain {
  std::vector<QPoly> seq;

  static SturmChain build(const QPoly& p);  // throws "ZeroPolynomial" on 0

  int variations_at(const Rational& x) const;
  int variations_neg_inf() const;
  int variations_pos_inf() const;

  /// Distinct real roots in (lo, hi]; the zero-skipping variation count
  /// makes root endpoints behave correctly.
  int count_in(const Rational& lo, const Rational& hi) const;
  int count_all() const;
};

/// Strict bound on the magnitude of all complex roots (Cauchy).
Rational cauchy_bound(const QPoly& p);

int count_real_roots(const QPoly& p);                                       // all of R
int count_real_roots(const QPoly& p, const Rational& lo, const Rational& hi);  // (lo, hi]

/// Disjoint isolating boxes of width <= `width` covering every real root of
/// the squarefree part; list length equals count_real_roots(p).
std::vector<RootBox> isolate_real_roots(const QPoly& p, const Rational& width);

/// Shrink the box below `width`, still isolating the same root.
void refine_box(RootBox& box, const Rational& width);

/// If the root in the box is rational, return it exactly.
std::optional<Rational> rational_root_value(const RootBox& box);

int sign_at(const QPoly& p, const Rational& x);
/// Exact sign of p at the algebraic number isolated by the box: gcd-based
/// zero test first, then interval refinement (never an epsilon comparison).
int sign_at(const QPoly& p, const RootBox& box);

}  // namespace jaclab
