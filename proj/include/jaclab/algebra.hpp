#pragma once

#include <optional>
#include <span>
#include <vector>

#include "jaclab/multipoly.hpp"
#include "jaclab/unipoly.hpp"

namespace jaclab {

class RatFunc;

/// Toolkit error with a stable machine-readable code ("ZeroDenominator",
/// "NotDominant", ...) next to the human message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

/// Greatest common divisor, integer-primitive with positive leading
/// coefficient (grlex). gcd(0,0) = 0.
MultiPoly gcd_poly(const MultiPoly& p, const MultiPoly& q);

/// Sylvester resultant of p and q with respect to variable v, computed by
/// fraction-free (Bareiss) elimination on the Sylvester matrix. The result
/// lives in the same variable space with v eliminated.
/// Errors: both inputs zero -> "UndefinedResultant".
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, int var);

/// Subresultant polynomial remainder sequence with respect to `var`
/// (Collins), starting from the inputs themselves in decreasing var-degree.
/// For coprime inputs the final element is the resultant up to sign.
std::vector<MultiPoly> subresultant_prs(const MultiPoly& p, const MultiPoly& q, int var);

/// Exact square root of a polynomial, if it is a perfect square.
std::optional<MultiPoly> poly_sqrt(const MultiPoly& p);

/// p / gcd(p, dp/dvar), primitive, for a polynomial univariate in `var`.
MultiPoly squarefree_part_in(const MultiPoly& p, int var);

/// Substitute a rational function for every variable of p; exact reduced
/// result.
RatFunc substitute(const MultiPoly& p, std::span<const RatFunc> values);

// Conversions between the sparse representation restricted to one variable
// and the dense univariate form.
QPoly to_unipoly(const MultiPoly& p, int var);
MultiPoly from_unipoly(const QPoly& p, int nvars, int var);

/// Primitive integer-coefficient form: p = content * out with content > 0
/// (sign stays with the polynomial).
QPoly primitive_int(const QPoly& p);

}  // namespace jaclab
