#pragma once

#include <optional>

#include "jaclab/modp.hpp"
#include "jaclab/multipoly.hpp"
#include "jaclab/unipoly.hpp"

namespace jaclab::elim {

/// Bivariate polynomial in (u, z), stored as z-coefficients that are dense
/// univariate polynomials in u. Built from a MultiPoly whose support is
/// contained in {uvar, zvar}.
struct BiPoly {
  std::vector<QPoly> zc;  // zc[j] = coefficient of z^j as a polynomial in u

  int zdeg() const { return static_cast<int>(zc.size()) - 1; }
  int udeg() const {
    int d = -1;
    for (const QPoly& c : zc) d = std::max(d, c.degree());
    return d;
  }
  bool is_zero() const { return zc.empty(); }
};

BiPoly bipoly_from(const MultiPoly& p, int uvar, int zvar);

/// deg_u bound for Res_z(A, B).
int resultant_degree_bound(const BiPoly& A, const BiPoly& B);

/// Degrees of Res_z(A, B) modulo one prime: total degree and degree of the
/// squarefree part. `valid` is false when the prime collides with a
/// denominator or the image degenerates to zero.
struct ModDegrees {
  int deg = -1;
  int sqf = -1;
  bool valid = false;
};
ModDegrees resultant_degrees_mod(const BiPoly& A, const BiPoly& B, uint64_t prime);

/// Exact Res_z(A, B) as a polynomial in u, up to a nonzero rational scale
/// (denominators of the inputs are cleared first; every use here is
/// scale-invariant). Evaluation/interpolation with CRT over word primes;
/// reconstruction stops when residues stabilize across
/// `stabilization` consecutive primes and is capped by a rigorous
/// Hadamard-style bound on the cleared inputs.
QPoly resultant_u(const BiPoly& A, const BiPoly& B, int stabilization = 3);

}  // namespace jaclab::elim
