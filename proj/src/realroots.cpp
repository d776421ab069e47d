#include "jaclab/realroots.hpp"

#include <algorithm>
#include <deque>

namespace jaclab {

namespace {

int count_variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// Interval evaluation of p over [lo, hi] with exact rational bounds.
struct QInterval {
  Rational lo, hi;
};

QInterval iv_add(const QInterval& a, const QInterval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

QInterval iv_mul(const QInterval& a, const QInterval& b) {
  Rational c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
  return {min(min(c1, c2), min(c3, c4)), max(max(c1, c2), max(c3, c4))};
}

QInterval iv_eval(const QPoly& p, const QInterval& x) {
  QInterval acc{Rational(0), Rational(0)};
  for (int k = p.degree(); k >= 0; --k) {
    acc = iv_mul(acc, x);
    Rational c = p.coeff(k);
    acc = iv_add(acc, QInterval{c, c});
  }
  return acc;
}

}  // namespace

SturmChain SturmChain::build(const QPoly& p) {
  if (p.is_zero()) throw Error("ZeroPolynomial", "Sturm chain of the zero polynomial");
  SturmChain chain;
  QPoly p0 = primitive_int(squarefree_part(p));
  chain.seq.push_back(p0);
  if (p0.degree() == 0) return chain;
  QPoly p1 = primitive_int(p0.derivative());
  chain.seq.push_back(p1);
  while (chain.seq.back().degree() > 0) {
    const QPoly& a = chain.seq[chain.seq.size() - 2];
    const QPoly& b = chain.seq.back();
    auto [q, r] = QPoly::divmod(a, b);
    if (r.is_zero()) break;  // squarefree input: only at the constant tail
    chain.seq.push_back(primitive_int(-r));
  }
  return chain;
}

int SturmChain::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const QPoly& p : seq) signs.push_back(p.evaluate(x).sign());
  return count_variations(signs);
}

int SturmChain::variations_neg_inf() const {
  std::vector<int> signs;
  for (const QPoly& p : seq) {
    int s = p.is_zero() ? 0 : p.leading().sign();
    if (p.degree() % 2 != 0) s = -s;
    signs.push_back(s);
  }
  return count_variations(signs);
}

int SturmChain::variations_pos_inf() const {
  std::vector<int> signs;
  for (const QPoly& p : seq) signs.push_back(p.is_zero() ? 0 : p.leading().sign());
  return count_variations(signs);
}

int SturmChain::count_in(const Rational& lo, const Rational& hi) const {
  if (!(lo < hi)) return 0;
  return variations_at(lo) - variations_at(hi);
}

int SturmChain::count_all() const { return variations_neg_inf() - variations_pos_inf(); }

Rational cauchy_bound(const QPoly& p) {
  if (p.is_zero()) throw Error("ZeroPolynomial", "root bound of the zero polynomial");
  Rational m(0);
  Rational lead = p.leading().abs();
  for (int k = 0; k < p.degree(); ++k) m = max(m, p.coeff(k).abs() / lead);
  return Rational(1) + m;
}

int count_real_roots(const QPoly& p) { return SturmChain::build(p).count_all(); }

int count_real_roots(const QPoly& p, const Rational& lo, const Rational& hi) {
  return SturmChain::build(p).count_in(lo, hi);
}

namespace {

// Cut point near the middle of (lo, hi) that is not a root of p0.
Rational nonroot_cut(const QPoly& p0, const Rational& lo, const Rational& hi) {
  Rational mid = (lo + hi) / Rational(2);
  Rational offset = (hi - lo) / Rational(4);
  while (true) {
    if (sign_at(p0, mid) != 0) return mid;
    mid += offset;
    offset /= Rational(2);
  }
}

struct Segment {
  Rational lo, hi;
  int vlo, vhi;
};

}  // namespace

std::vector<RootBox> isolate_real_roots(const QPoly& p, const Rational& width) {
  if (width.sign() <= 0)
    throw std::invalid_argument("isolate_real_roots: width must be positive");
  SturmChain chain = SturmChain::build(p);
  const QPoly& p0 = chain.seq[0];
  std::vector<RootBox> out;
  if (p0.degree() <= 0) return out;
  Rational bound = cauchy_bound(p0);
  std::deque<Segment> work{
      Segment{-bound, bound, chain.variations_at(-bound), chain.variations_at(bound)}};
  while (!work.empty()) {
    Segment s = work.front();
    work.pop_front();
    int count = s.vlo - s.vhi;
    if (count <= 0) continue;
    if (count == 1 && s.hi - s.lo <= width) {
      out.push_back(RootBox{s.lo, s.hi, p0, true});
      continue;
    }
    Rational cut = nonroot_cut(p0, s.lo, s.hi);
    int vcut = chain.variations_at(cut);
    work.push_back(Segment{s.lo, cut, s.vlo, vcut});
    work.push_back(Segment{cut, s.hi, vcut, s.vhi});
  }
  std::sort(out.begin(), out.end(),
            [](const RootBox& a, const RootBox& b) { return a.lo < b.lo; });
  return out;
}

void refine_box(RootBox& box, const Rational& width) {
  if (box.hi - box.lo <= width) return;
  SturmChain chain = SturmChain::build(box.defining);
  int vlo = chain.variations_at(box.lo);
  while (box.hi - box.lo > width) {
    Rational cut = nonroot_cut(box.defining, box.lo, box.hi);
    int vcut = chain.variations_at(cut);
    if (vlo - vcut == 1) {
      box.hi = cut;
    } else {
      box.lo = cut;
      vlo = vcut;
    }
  }
}

std::optional<Rational> rational_root_value(const RootBox& box) {
  const QPoly& p = box.defining;
  if (p.degree() < 1) return std::nullopt;
  if (p.coeff(0).is_zero()) {
    // zero is a root of the (squarefree) defining polynomial
    if (box.lo.sign() < 0 && box.hi.sign() >= 0) return Rational(0);
    return std::nullopt;
  }
  // Rational root theorem on the integer-primitive form; divisor scans are
  // capped, larger roots simply stay boxed.
  QPoly pi = primitive_int(p);
  mpz_class a0 = pi.coeff(0).numerator();
  mpz_class ad = pi.leading().numerator();
  auto small_divisors = [](const mpz_class& n) {
    std::vector<mpz_class> ds;
    mpz_class a = abs(n);
    for (mpz_class d = 1; d * d <= a; ++d) {
      if (d > 65536) break;
      if (a % d == 0) {
        ds.push_back(d);
        ds.push_back(a / d);
      }
    }
    return ds;
  };
  for (const mpz_class& dn : small_divisors(a0))
    for (const mpz_class& dd : small_divisors(ad))
      for (int s = -1; s <= 1; s += 2) {
        Rational cand{mpq_class(s * dn, dd)};
        if (!(box.lo < cand) || !(cand <= box.hi)) continue;
        if (sign_at(p, cand) == 0) return cand;
      }
  return std::nullopt;
}

int sign_at(const QPoly& p, const Rational& x) { return p.evaluate(x).sign(); }

int sign_at(const QPoly& p, const RootBox& box) {
  if (p.is_zero()) return 0;
  if (p.degree() == 0) return p.coeff(0).sign();
  // gcd-based zero test: the box root is a root of p exactly when it is a
  // root of gcd(p, defining); never decided by epsilon comparison
  QPoly g = gcd(p, box.defining);
  if (g.degree() >= 1 && SturmChain::build(g).count_in(box.lo, box.hi) > 0) return 0;
  RootBox work = box;
  while (true) {
    QInterval img = iv_eval(p, QInterval{work.lo, work.hi});
    if (img.lo.sign() > 0) return 1;
    if (img.hi.sign() < 0) return -1;
    refine_box(work, work.width() / Rational(4));
  }
}

}  // namespace jaclab
