#include "jaclab/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace jaclab {

namespace {

int exp_total(const ExpVec& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Mixed variable spaces are allowed only when the smaller-space operand is
// a constant, which is then lifted into the larger space.
void align_spaces(MultiPoly& a, MultiPoly& b) {
  if (a.nvars() == b.nvars()) return;
  if (a.nvars() < b.nvars() && a.is_constant()) {
    a = a.extended(b.nvars());
    return;
  }
  if (b.nvars() < a.nvars() && b.is_constant()) {
    b = b.extended(a.nvars());
    return;
  }
  throw std::invalid_argument("MultiPoly: mixed variable spaces");
}

}  // namespace

bool GrlexGreater::operator()(const ExpVec& a, const ExpVec& b) const {
  int da = exp_total(a), db = exp_total(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  if (!c.is_zero()) p.terms_.emplace(ExpVec(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars)
    throw std::invalid_argument("MultiPoly::variable: index out of range");
  ExpVec e(nvars, 0);
  e[index] = 1;
  return monomial(nvars, e, Rational(1));
}

MultiPoly MultiPoly::monomial(int nvars, ExpVec exps, const Rational& c) {
  if (static_cast<int>(exps.size()) != nvars)
    throw std::invalid_argument("MultiPoly::monomial: exponent size mismatch");
  MultiPoly p(nvars);
  if (!c.is_zero()) p.terms_.emplace(std::move(exps), c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && exp_total(terms_.begin()->first) == 0);
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant())
    throw std::logic_error("MultiPoly::constant_value: not a constant");
  return terms_.begin()->second;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return exp_total(terms_.begin()->first);  // grlex leading term has max degree
}

int MultiPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

const ExpVec& MultiPoly::leading_exponents() const {
  if (terms_.empty()) throw std::logic_error("MultiPoly: zero has no leading term");
  return terms_.begin()->first;
}

const Rational& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("MultiPoly: zero has no leading term");
  return terms_.begin()->second;
}

MultiPoly MultiPoly::coefficient_of(int var, int power) const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] != power) continue;
    ExpVec e2 = e;
    e2[var] = 0;
    r.terms_.emplace(std::move(e2), c);
  }
  return r;
}

MultiPoly MultiPoly::leading_coefficient_in(int var) const {
  return coefficient_of(var, degree_in(var));
}

std::vector<MultiPoly> MultiPoly::coefficients_in(int var) const {
  int d = degree_in(var);
  std::vector<MultiPoly> out(static_cast<size_t>(d + 1), MultiPoly(nvars_));
  for (const auto& [e, c] : terms_) {
    ExpVec e2 = e;
    e2[var] = 0;
    out[static_cast<size_t>(e[var])].terms_.emplace(std::move(e2), c);
  }
  return out;
}

MultiPoly MultiPoly::from_coefficients_in(int nvars, int var,
                                          std::span<const MultiPoly> coeffs) {
  MultiPoly r(nvars);
  for (size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& [e, c] : coeffs[k].terms_) {
      ExpVec e2 = e;
      e2[var] += static_cast<int>(k);
      r.add_term(e2, c);
    }
  }
  return r;
}

void MultiPoly::add_term(const ExpVec& exps, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (nvars_ != o.nvars_) {
    MultiPoly a = *this, b = o;
    align_spaces(a, b);
    a += b;
    return *this = a;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (nvars_ != o.nvars_) {
    MultiPoly a = *this, b = o;
    align_spaces(a, b);
    a -= b;
    return *this = a;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) {
    MultiPoly a2 = a, b2 = b;
    align_spaces(a2, b2);
    return a2 * b2;
  }
  MultiPoly r(a.nvars_);
  if (a.is_zero() || b.is_zero()) return r;
  ExpVec e(static_cast<size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(nvars_, Rational(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) r *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return r;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("MultiPoly::evaluate: point size mismatch");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i)
      if (e[i] > 0) t *= point[i].pow(static_cast<unsigned>(e[i]));
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::evaluate_partial(int var, const Rational& value) const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    if (e[var] > 0) t *= value.pow(static_cast<unsigned>(e[var]));
    ExpVec e2 = e;
    e2[var] = 0;
    r.add_term(e2, t);
  }
  return r;
}

MultiPoly MultiPoly::derivative(int var) const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    ExpVec e2 = e;
    e2[var] -= 1;
    r.add_term(e2, c * Rational(e[var]));
  }
  return r;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
  if (nvars_ != divisor.nvars_) {
    MultiPoly a = *this, b = divisor;
    align_spaces(a, b);
    return a.divide_exact(b);
  }
  if (divisor.is_zero()) return std::nullopt;
  MultiPoly q(nvars_);
  MultiPoly rem = *this;
  const ExpVec& de = divisor.leading_exponents();
  const Rational& dc = divisor.leading_coefficient();
  while (!rem.is_zero()) {
    const ExpVec& re = rem.leading_exponents();
    ExpVec qe(static_cast<size_t>(nvars_));
    for (int i = 0; i < nvars_; ++i) {
      qe[static_cast<size_t>(i)] = re[static_cast<size_t>(i)] - de[static_cast<size_t>(i)];
      if (qe[static_cast<size_t>(i)] < 0) return std::nullopt;
    }
    Rational qc = rem.leading_coefficient() / dc;
    MultiPoly t = monomial(nvars_, qe, qc);
    q += t;
    rem -= t * divisor;
  }
  return q;
}

Rational MultiPoly::content() const {
  if (terms_.empty()) return Rational(0);
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
  }
  mpq_class q(num_gcd, den_lcm);
  q.canonicalize();
  return Rational(q);
}

MultiPoly MultiPoly::primitive_part() const {
  if (terms_.empty()) return *this;
  Rational c = content();
  MultiPoly r = *this;
  r *= c.inverse();
  return r;
}

std::vector<int> MultiPoly::support() const {
  std::vector<char> seen(static_cast<size_t>(nvars_), 0);
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < nvars_; ++i)
      if (e[static_cast<size_t>(i)] > 0) seen[static_cast<size_t>(i)] = 1;
  std::vector<int> out;
  for (int i = 0; i < nvars_; ++i)
    if (seen[static_cast<size_t>(i)]) out.push_back(i);
  return out;
}

MultiPoly MultiPoly::extended(int new_nvars) const {
  if (new_nvars < nvars_)
    throw std::invalid_argument("MultiPoly::extended: shrinking space");
  MultiPoly r(new_nvars);
  for (const auto& [e, c] : terms_) {
    ExpVec e2 = e;
    e2.resize(static_cast<size_t>(new_nvars), 0);
    r.terms_.emplace(std::move(e2), c);
  }
  return r;
}

MultiPoly MultiPoly::truncated(int new_nvars) const {
  MultiPoly r(new_nvars);
  for (const auto& [e, c] : terms_) {
    for (int i = new_nvars; i < nvars_; ++i)
      if (e[static_cast<size_t>(i)] != 0)
        throw std::invalid_argument("MultiPoly::truncated: variable in use");
    ExpVec e2(e.begin(), e.begin() + new_nvars);
    r.terms_.emplace(std::move(e2), c);
  }
  return r;
}

MultiPoly MultiPoly::remapped(int new_nvars, std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != nvars_)
    throw std::invalid_argument("MultiPoly::remapped: permutation size mismatch");
  MultiPoly r(new_nvars);
  for (const auto& [e, c] : terms_) {
    ExpVec e2(static_cast<size_t>(new_nvars), 0);
    for (int i = 0; i < nvars_; ++i) {
      if (e[static_cast<size_t>(i)] == 0) continue;
      int j = perm[static_cast<size_t>(i)];
      if (j < 0 || j >= new_nvars)
        throw std::invalid_argument("MultiPoly::remapped: target out of range");
      e2[static_cast<size_t>(j)] += e[static_cast<size_t>(i)];
    }
    r.add_term(e2, c);
  }
  return r;
}

std::string MultiPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational coeff = c;
    if (first) {
      if (coeff.sign() < 0) {
        os << "-";
        coeff = -coeff;
      }
      first = false;
    } else {
      os << (coeff.sign() < 0 ? " - " : " + ");
      coeff = coeff.abs();
    }
    bool has_vars = exp_total(e) > 0;
    bool coeff_shown = !coeff.is_one() || !has_vars;
    if (coeff_shown) os << coeff.to_string();
    bool need_star = coeff_shown;
    for (int i = 0; i < nvars_; ++i) {
      int k = e[static_cast<size_t>(i)];
      if (k == 0) continue;
      if (need_star) os << "*";
      if (static_cast<size_t>(i) < names.size())
        os << names[static_cast<size_t>(i)];
      else
        os << "x" << (i + 1);
      if (k > 1) os << "^" << k;
      need_star = true;
    }
  }
  return os.str();
}

MultiPoly substitute_poly(const MultiPoly& p, std::span<const MultiPoly> values) {
  if (static_cast<int>(values.size()) != p.nvars())
    throw std::invalid_argument("substitute_poly: value count mismatch");
  int out_vars = values.empty() ? 0 : values[0].nvars();
  MultiPoly acc(out_vars);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly t = MultiPoly::constant(out_vars, c);
    for (int i = 0; i < p.nvars(); ++i)
      if (e[static_cast<size_t>(i)] > 0)
        t *= values[static_cast<size_t>(i)].pow(static_cast<unsigned>(e[static_cast<size_t>(i)]));
    acc += t;
  }
  return acc;
}

}  // namespace jaclab
