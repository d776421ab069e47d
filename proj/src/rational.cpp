#include "jaclab/rational.hpp"

namespace jaclab {

Rational Rational::from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("Rational: empty string");
  mpq_class q;
  if (q.set_str(std::string(s), 10) != 0)
    throw std::invalid_argument("Rational: bad literal '" + std::string(s) + "'");
  if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
  q.canonicalize();
  return Rational(q);
}

std::string Rational::to_string() const {
  return v_.get_str();
}

}  // namespace jaclab
