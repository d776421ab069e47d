#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "jaclab/unipoly.hpp"

namespace jaclab::modp {

/// Word-size primes used for modular images (all > 2^60, well above any
/// interpolation grid).
std::span<const uint64_t> primes();

inline uint64_t add(uint64_t a, uint64_t b, uint64_t p) {
  uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline uint64_t sub(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }
inline uint64_t mul(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
uint64_t powmod(uint64_t a, uint64_t e, uint64_t p);
inline uint64_t inv(uint64_t a, uint64_t p) { return powmod(a, p - 2, p); }

uint64_t reduce(const mpz_class& z, uint64_t p);
/// num * den^{-1} mod p; false when p divides the denominator.
bool reduce(const Rational& q, uint64_t p, uint64_t& out);

/// Dense polynomial over F_p, low-to-high, trimmed.
using FpPoly = std::vector<uint64_t>;

void trim(FpPoly& f);
int degree(const FpPoly& f);
uint64_t eval(const FpPoly& f, uint64_t x, uint64_t p);
FpPoly derivative(const FpPoly& f, uint64_t p);
FpPoly gcd(FpPoly a, FpPoly b, uint64_t p);
/// Degree of the squarefree part (deg f - deg gcd(f, f')).
int squarefree_degree(const FpPoly& f, uint64_t p);

/// f mod p from a rational-coefficient polynomial; false if any denominator
/// dies mod p.
bool reduce_poly(const QPoly& f, uint64_t p, FpPoly& out);

/// Lagrange interpolation through (xs[i], ys[i]).
FpPoly interpolate(std::span<const uint64_t> xs, std::span<const uint64_t> ys, uint64_t p);

/// Determinant over F_p by Gaussian elimination; mat is row-major n*n and is
/// consumed.
uint64_t det(std::vector<uint64_t>& mat, int n, uint64_t p);

}  // namespace jaclab::modp
