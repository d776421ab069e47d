// Test-only numeric oracles, independent of the exact-arithmetic paths they
// cross-check.
#pragma once

#include <algorithm>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "jaclab/multipoly.hpp"
#include "jaclab/unipoly.hpp"

namespace oracles {

/// Durand-Kerner iteration; fine for the small random polynomials used in
/// tests. Coefficients low-to-high, leading nonzero.
inline std::vector<std::complex<double>> complex_roots(std::vector<double> c) {
  using C = std::complex<double>;
  while (c.size() > 1 && c.back() == 0.0) c.pop_back();
  int n = static_cast<int>(c.size()) - 1;
  std::vector<C> roots;
  if (n <= 0) return roots;
  for (auto& v : c) v /= c[static_cast<size_t>(n)];
  auto eval = [&](C x) {
    C acc(0);
    for (int k = n; k >= 0; --k) acc = acc * x + C(c[static_cast<size_t>(k)]);
    return acc;
  };
  roots.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    roots[static_cast<size_t>(i)] = std::pow(C(0.4, 0.9), i);
  for (int iter = 0; iter < 600; ++iter) {
    double moved = 0;
    for (int i = 0; i < n; ++i) {
      C d(1);
      for (int j = 0; j < n; ++j)
        if (j != i) d *= roots[static_cast<size_t>(i)] - roots[static_cast<size_t>(j)];
      C prev = roots[static_cast<size_t>(i)];
      roots[static_cast<size_t>(i)] -= eval(prev) / d;
      moved = std::max(moved, std::abs(roots[static_cast<size_t>(i)] - prev));
    }
    if (moved < 1e-14) break;
  }
  return roots;
}

inline std::vector<double> to_doubles(const jaclab::QPoly& p) {
  std::vector<double> c;
  for (int k = 0; k <= p.degree(); ++k) c.push_back(p.coeff(k).to_double());
  return c;
}

/// Res(p, q) = lc(p)^deg(q) * prod q(alpha) over the roots alpha of p.
inline double resultant_numeric(const jaclab::QPoly& p, const jaclab::QPoly& q) {
  auto roots = complex_roots(to_doubles(p));
  std::complex<double> acc(1);
  for (const auto& a : roots) {
    std::complex<double> qa(0);
    for (int k = q.degree(); k >= 0; --k)
      qa = qa * a + std::complex<double>(q.coeff(k).to_double());
    acc *= qa;
  }
  acc *= std::pow(std::complex<double>(p.leading().to_double()), q.degree());
  return acc.real();
}

/// Distinct real roots of a squarefree polynomial: numeric localization,
/// then each candidate confirmed by an exact rational sign-change bracket.
inline int real_root_count(const jaclab::QPoly& p) {
  using jaclab::Rational;
  if (p.degree() <= 0) return 0;
  auto roots = complex_roots(to_doubles(p));
  std::vector<double> reals;
  for (const auto& r : roots)
    if (std::abs(r.imag()) < 1e-7 * (1.0 + std::abs(r))) reals.push_back(r.real());
  std::sort(reals.begin(), reals.end());
  int confirmed = 0;
  for (size_t i = 0; i < reals.size(); ++i) {
    double sep = 1e30;
    if (i > 0) sep = std::min(sep, reals[i] - reals[i - 1]);
    if (i + 1 < reals.size()) sep = std::min(sep, reals[i + 1] - reals[i]);
    double delta = std::min(1e-5, sep / 4);
    Rational lo = Rational(mpq_class(reals[i] - delta));
    Rational hi = Rational(mpq_class(reals[i] + delta));
    Rational flo = p.evaluate(lo), fhi = p.evaluate(hi);
    if (flo.is_zero() || fhi.is_zero()) {
      ++confirmed;  // landed exactly on a root
    } else if (flo.sign() != fhi.sign()) {
      ++confirmed;
    }
  }
  return confirmed;
}

inline jaclab::MultiPoly random_poly(std::mt19937_64& rng, int nvars, int maxdeg,
                                     int coeff_bound = 9, double density = 0.5) {
  std::uniform_int_distribution<int> cd(-coeff_bound, coeff_bound);
  std::uniform_real_distribution<double> keep(0.0, 1.0);
  jaclab::MultiPoly p(nvars);
  std::vector<int> e(static_cast<size_t>(nvars), 0);
  // walk all exponent vectors of total degree <= maxdeg
  std::function<void(int, int)> walk = [&](int var, int remaining) {
    if (var == nvars) {
      if (keep(rng) < density) {
        int c = cd(rng);
        if (c != 0) p.add_term(e, jaclab::Rational(c));
      }
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      e[static_cast<size_t>(var)] = k;
      walk(var + 1, remaining - k);
    }
    e[static_cast<size_t>(var)] = 0;
  };
  walk(0, maxdeg);
  return p;
}

}  // namespace oracles
