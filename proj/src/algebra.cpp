#include "jaclab/algebra.hpp"

#include <algorithm>

#include "jaclab/ratfunc.hpp"

namespace jaclab {

namespace {

MultiPoly one(int nvars) { return MultiPoly::constant(nvars, Rational(1)); }

/// Integer-primitive, positive leading coefficient.
MultiPoly normalize_gcd(const MultiPoly& p) {
  if (p.is_zero()) return p;
  MultiPoly r = p.primitive_part();
  if (r.leading_coefficient().sign() < 0) r *= Rational(-1);
  return r;
}

/// Lazy pseudo-remainder of a by b in variable v: repeatedly kills the
/// leading v-term of a with b, scaling by lc_v(b). The result is a scalar
/// multiple of the true pseudo-remainder, which is all the primitive PRS
/// needs.
MultiPoly prem_lazy(MultiPoly a, const MultiPoly& b, int v) {
  int db = b.degree_in(v);
  MultiPoly lcb = b.leading_coefficient_in(v);
  MultiPoly vpow = MultiPoly::variable(b.nvars(), v);
  while (!a.is_zero()) {
    int da = a.degree_in(v);
    if (da < db) break;
    MultiPoly lca = a.leading_coefficient_in(v);
    a = a * lcb - lca * vpow.pow(static_cast<unsigned>(da - db)) * b;
  }
  return a;
}

/// Exact pseudo-remainder: lc_v(b)^(da-db+1) * a mod b.
MultiPoly prem_exact(MultiPoly a, const MultiPoly& b, int v) {
  int da = a.degree_in(v), db = b.degree_in(v);
  if (da < db) return a;
  MultiPoly lcb = b.leading_coefficient_in(v);
  MultiPoly vpoly = MultiPoly::variable(b.nvars(), v);
  int steps = 0;
  while (!a.is_zero() && a.degree_in(v) >= db) {
    int d = a.degree_in(v);
    MultiPoly lca = a.leading_coefficient_in(v);
    a = a * lcb - lca * vpoly.pow(static_cast<unsigned>(d - db)) * b;
    ++steps;
  }
  // Pad so the total scaling is exactly lcb^(da-db+1).
  int want = da - db + 1;
  for (; steps < want; ++steps) a = a * lcb;
  return a;
}

}  // namespace

MultiPoly MultiPoly::content_in(int var) const {
  MultiPoly g(nvars_);
  for (const MultiPoly& c : coefficients_in(var)) {
    g = gcd_poly(g, c);
    if (!g.is_zero() && g.is_constant()) break;
  }
  return g;
}

MultiPoly gcd_poly(const MultiPoly& p, const MultiPoly& q) {
  if (p.is_zero()) return normalize_gcd(q);
  if (q.is_zero()) return normalize_gcd(p);
  if (p.is_constant() || q.is_constant()) return one(p.nvars());

  std::vector<int> sp = p.support(), sq = q.support();
  std::vector<int> common;
  std::set_intersection(sp.begin(), sp.end(), sq.begin(), sq.end(),
                        std::back_inserter(common));
  if (common.empty()) return one(p.nvars());

  // Main variable: smallest joint degree keeps the PRS short.
  int v = common[0];
  long best = static_cast<long>(p.degree_in(v)) + q.degree_in(v);
  for (int cand : common) {
    long s = static_cast<long>(p.degree_in(cand)) + q.degree_in(cand);
    if (s < best) {
      best = s;
      v = cand;
    }
  }

  MultiPoly cp = p.content_in(v), cq = q.content_in(v);
  MultiPoly a = *p.divide_exact(cp), b = *q.divide_exact(cq);
  MultiPoly cont = gcd_poly(cp, cq);

  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  while (true) {
    if (b.is_zero()) break;
    if (b.degree_in(v) == 0) {
      a = one(p.nvars());
      break;
    }
    MultiPoly r = prem_lazy(a, b, v);
    a = std::move(b);
    if (r.is_zero()) {
      b = MultiPoly(p.nvars());
    } else {
      b = *r.divide_exact(r.content_in(v));
    }
  }
  return normalize_gcd(cont * a);
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, int var) {
  if (p.is_zero() && q.is_zero())
    throw Error("UndefinedResultant", "resultant of two zero polynomials");
  int nv = p.nvars();
  if (p.is_zero() || q.is_zero()) return MultiPoly(nv);
  int m = p.degree_in(var), n = q.degree_in(var);
  if (m == 0 && n == 0) return one(nv);
  if (m == 0) return p.pow(static_cast<unsigned>(n));
  if (n == 0) return q.pow(static_cast<unsigned>(m));

  std::vector<MultiPoly> pc = p.coefficients_in(var);
  std::vector<MultiPoly> qc = q.coefficients_in(var);
  int N = m + n;
  std::vector<std::vector<MultiPoly>> M(
      static_cast<size_t>(N), std::vector<MultiPoly>(static_cast<size_t>(N), MultiPoly(nv)));
  // n rows of p coefficients, then m rows of q coefficients, descending powers.
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) M[r][static_cast<size_t>(r + m - k)] = pc[static_cast<size_t>(k)];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k)
      M[static_cast<size_t>(n + r)][static_cast<size_t>(r + n - k)] = qc[static_cast<size_t>(k)];

  // Bareiss fraction-free elimination.
  int sign = 1;
  MultiPoly prev = one(nv);
  for (int k = 0; k + 1 < N; ++k) {
    if (M[static_cast<size_t>(k)][static_cast<size_t>(k)].is_zero()) {
      int piv = -1;
      for (int r = k + 1; r < N; ++r)
        if (!M[static_cast<size_t>(r)][static_cast<size_t>(k)].is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) return MultiPoly(nv);
      std::swap(M[static_cast<size_t>(k)], M[static_cast<size_t>(piv)]);
      sign = -sign;
    }
    for (int i = k + 1; i < N; ++i) {
      for (int j = k + 1; j < N; ++j) {
        MultiPoly t = M[static_cast<size_t>(k)][static_cast<size_t>(k)] * M[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                      M[static_cast<size_t>(i)][static_cast<size_t>(k)] * M[static_cast<size_t>(k)][static_cast<size_t>(j)];
        auto d = t.divide_exact(prev);
        if (!d) throw std::logic_error("resultant: Bareiss division failed");
        M[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(*d);
      }
      M[static_cast<size_t>(i)][static_cast<size_t>(k)] = MultiPoly(nv);
    }
    prev = M[static_cast<size_t>(k)][static_cast<size_t>(k)];
  }
  MultiPoly det = M[static_cast<size_t>(N - 1)][static_cast<size_t>(N - 1)];
  if (sign < 0) det *= Rational(-1);
  return det;
}

std::vector<MultiPoly> subresultant_prs(const MultiPoly& p, const MultiPoly& q, int var) {
  std::vector<MultiPoly> seq;
  if (p.is_zero() || q.is_zero()) return seq;
  MultiPoly a = p, b = q;
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  seq.push_back(a);
  seq.push_back(b);
  int nv = p.nvars();
  MultiPoly g = one(nv), h = one(nv);
  while (true) {
    int delta = a.degree_in(var) - b.degree_in(var);
    MultiPoly r = prem_exact(a, b, var);
    if (r.is_zero()) break;
    MultiPoly divisor = g * h.pow(static_cast<unsigned>(delta));
    auto d = r.divide_exact(divisor);
    if (!d) throw std::logic_error("subresultant_prs: inexact division");
    a = std::move(b);
    b = std::move(*d);
    seq.push_back(b);
    g = a.leading_coefficient_in(var);
    if (delta >= 1) {
      MultiPoly gp = g.pow(static_cast<unsigned>(delta));
      auto hh = gp.divide_exact(h.pow(static_cast<unsigned>(delta - 1)));
      if (!hh) throw std::logic_error("subresultant_prs: h update failed");
      h = std::move(*hh);
    }
    if (b.degree_in(var) == 0) break;
  }
  return seq;
}

std::optional<MultiPoly> poly_sqrt(const MultiPoly& p) {
  int nv = p.nvars();
  if (p.is_zero()) return MultiPoly(nv);
  const ExpVec& le = p.leading_exponents();
  ExpVec half(le.size());
  for (size_t i = 0; i < le.size(); ++i) {
    if (le[i] % 2 != 0) return std::nullopt;
    half[i] = le[i] / 2;
  }
  const Rational& lc = p.leading_coefficient();
  if (lc.sign() < 0) return std::nullopt;
  mpz_class ns, ds;
  if (mpz_perfect_square_p(lc.numerator().get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(lc.denominator().get_mpz_t()) == 0) return std::nullopt;
  mpz_sqrt(ns.get_mpz_t(), lc.numerator().get_mpz_t());
  mpz_sqrt(ds.get_mpz_t(), lc.denominator().get_mpz_t());
  Rational lroot{mpq_class(ns, ds)};

  MultiPoly root = MultiPoly::monomial(nv, half, lroot);
  const MultiPoly lead2 = root * Rational(2);  // 2 * leading term, fixed anchor
  MultiPoly rem = p - root * root;
  int guard = p.term_count() * p.term_count() + 16;
  while (!rem.is_zero()) {
    if (--guard < 0) return std::nullopt;
    MultiPoly lt = MultiPoly::monomial(nv, rem.leading_exponents(), rem.leading_coefficient());
    auto t = lt.divide_exact(lead2);
    if (!t) return std::nullopt;
    rem -= root * (*t) * Rational(2) + (*t) * (*t);
    root += *t;
  }
  return root;
}

MultiPoly squarefree_part_in(const MultiPoly& p, int var) {
  if (p.is_zero()) return p;
  MultiPoly d = p.derivative(var);
  if (d.is_zero()) return normalize_gcd(p);
  MultiPoly g = gcd_poly(p, d);
  auto q = p.divide_exact(g);
  if (!q) throw std::logic_error("squarefree_part_in: inexact division");
  return normalize_gcd(*q);
}

RatFunc substitute(const MultiPoly& p, std::span<const RatFunc> values) {
  if (static_cast<int>(values.size()) != p.nvars())
    throw std::invalid_argument("substitute: value count mismatch");
  if (p.nvars() == 0 || p.is_constant())
    return RatFunc(p.is_zero() ? Rational(0) : p.constant_value(),
                   values.empty() ? 0 : values[0].nvars());
  int out_vars = values[0].nvars();

  // Common denominator prod den_i^deg_i with per-variable power tables, so
  // a single reduction happens at the end.
  std::vector<int> degs(static_cast<size_t>(p.nvars()), 0);
  for (int i = 0; i < p.nvars(); ++i) degs[static_cast<size_t>(i)] = std::max(0, p.degree_in(i));

  std::vector<std::vector<MultiPoly>> npow, dpow;
  for (int i = 0; i < p.nvars(); ++i) {
    std::vector<MultiPoly> ns{MultiPoly::constant(out_vars, Rational(1))};
    std::vector<MultiPoly> ds{MultiPoly::constant(out_vars, Rational(1))};
    for (int k = 1; k <= degs[static_cast<size_t>(i)]; ++k) {
      ns.push_back(ns.back() * values[static_cast<size_t>(i)].num());
      ds.push_back(ds.back() * values[static_cast<size_t>(i)].den());
    }
    npow.push_back(std::move(ns));
    dpow.push_back(std::move(ds));
  }

  MultiPoly num(out_vars);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly t = MultiPoly::constant(out_vars, c);
    for (int i = 0; i < p.nvars(); ++i) {
      int k = e[static_cast<size_t>(i)];
      t *= npow[static_cast<size_t>(i)][static_cast<size_t>(k)];
      t *= dpow[static_cast<size_t>(i)][static_cast<size_t>(degs[static_cast<size_t>(i)] - k)];
    }
    num += t;
  }
  MultiPoly den = MultiPoly::constant(out_vars, Rational(1));
  for (int i = 0; i < p.nvars(); ++i) den *= dpow[static_cast<size_t>(i)].back();
  return reduce(num, den);
}

QPoly to_unipoly(const MultiPoly& p, int var) {
  for (int v : p.support())
    if (v != var)
      throw std::invalid_argument("to_unipoly: polynomial is not univariate in the given variable");
  std::vector<Rational> c(static_cast<size_t>(std::max(0, p.degree_in(var)) + 1), Rational(0));
  for (const auto& [e, coeff] : p.terms()) c[static_cast<size_t>(e[static_cast<size_t>(var)])] = coeff;
  return QPoly(std::move(c));
}

MultiPoly from_unipoly(const QPoly& p, int nvars, int var) {
  MultiPoly r(nvars);
  for (int k = 0; k <= p.degree(); ++k) {
    if (p.coeff(k).is_zero()) continue;
    ExpVec e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(var)] = k;
    r.add_term(e, p.coeff(k));
  }
  return r;
}

QPoly primitive_int(const QPoly& p) {
  if (p.is_zero()) return p;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const Rational& c : p.coeffs()) {
    if (c.is_zero()) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
  }
  mpq_class content(num_gcd, den_lcm);
  content.canonicalize();
  return p.scaled(Rational(content).inverse());
}

}  // namespace jaclab
