#include "jaclab/modp.hpp"

#include <array>

namespace jaclab::modp {

std::span<const uint64_t> primes() {
  // primes just below 2^62
  static const std::array<uint64_t, 24> ps = {
      4611686018427387847ULL, 4611686018427387817ULL, 4611686018427387787ULL,
      4611686018427387761ULL, 4611686018427387751ULL, 4611686018427387737ULL,
      4611686018427387733ULL, 4611686018427387709ULL, 4611686018427387701ULL,
      4611686018427387631ULL, 4611686018427387617ULL, 4611686018427387587ULL,
      4611686018427387461ULL, 4611686018427387421ULL, 4611686018427387409ULL,
      4611686018427387329ULL, 4611686018427387323ULL, 4611686018427387301ULL,
      4611686018427387271ULL, 4611686018427387241ULL, 4611686018427387139ULL,
      4611686018427387131ULL, 4611686018427387127ULL, 4611686018427387113ULL};
  return ps;
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

uint64_t reduce(const mpz_class& z, uint64_t p) {
  return mpz_fdiv_ui(z.get_mpz_t(), p);
}

bool reduce(const Rational& q, uint64_t p, uint64_t& out) {
  uint64_t d = reduce(q.denominator(), p);
  if (d == 0) return false;
  uint64_t n = reduce(q.numerator(), p);
  out = mul(n, inv(d, p), p);
  return true;
}

void trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

uint64_t eval(const FpPoly& f, uint64_t x, uint64_t p) {
  uint64_t acc = 0;
  for (size_t i = f.size(); i-- > 0;) acc = add(mul(acc, x, p), f[i], p);
  return acc;
}

FpPoly derivative(const FpPoly& f, uint64_t p) {
  FpPoly d;
  for (size_t k = 1; k < f.size(); ++k) d.push_back(mul(f[k], k % p, p));
  trim(d);
  return d;
}

FpPoly gcd(FpPoly a, FpPoly b, uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    uint64_t lb = inv(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
      uint64_t f = mul(a.back(), lb, p);
      size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i)
        a[shift + i] = sub(a[shift + i], mul(f, b[i], p), p);
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    uint64_t la = inv(a.back(), p);
    for (auto& c : a) c = mul(c, la, p);
  }
  return a;
}

int squarefree_degree(const FpPoly& f, uint64_t p) {
  if (f.empty()) return -1;
  FpPoly d = derivative(f, p);
  if (d.empty()) return 0;
  FpPoly g = gcd(f, d, p);
  return degree(f) - degree(g);
}

bool reduce_poly(const QPoly& f, uint64_t p, FpPoly& out) {
  out.assign(static_cast<size_t>(f.degree() + 1), 0);
  for (int k = 0; k <= f.degree(); ++k) {
    uint64_t c;
    if (!reduce(f.coeff(k), p, c)) return false;
    out[static_cast<size_t>(k)] = c;
  }
  trim(out);
  return true;
}

FpPoly interpolate(std::span<const uint64_t> xs, std::span<const uint64_t> ys, uint64_t p) {
  // Newton divided differences, then expansion in the monomial basis.
  size_t n = xs.size();
  std::vector<uint64_t> coef(ys.begin(), ys.end());
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n; i-- > j;) {
      uint64_t num = sub(coef[i], coef[i - 1], p);
      uint64_t den = sub(xs[i], xs[i - j], p);
      coef[i] = mul(num, inv(den, p), p);
    }
  if (n == 0) return {};
  FpPoly r{coef[n - 1]};
  for (size_t i = n - 1; i-- > 0;) {
    FpPoly nr(r.size() + 1, 0);
    for (size_t k = 0; k < r.size(); ++k) {
      nr[k + 1] = add(nr[k + 1], r[k], p);
      nr[k] = sub(nr[k], mul(r[k], xs[i], p), p);
    }
    nr[0] = add(nr[0], coef[i], p);
    r = std::move(nr);
  }
  trim(r);
  return r;
}

uint64_t det(std::vector<uint64_t>& mat, int n, uint64_t p) {
  uint64_t d = 1;
  bool neg = false;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r)
      if (mat[static_cast<size_t>(r) * n + k] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != k) {
      for (int j = 0; j < n; ++j)
        std::swap(mat[static_cast<size_t>(piv) * n + j], mat[static_cast<size_t>(k) * n + j]);
      neg = !neg;
    }
    uint64_t pk = mat[static_cast<size_t>(k) * n + k];
    d = mul(d, pk, p);
    uint64_t ipk = inv(pk, p);
    for (int r = k + 1; r < n; ++r) {
      uint64_t f = mul(mat[static_cast<size_t>(r) * n + k], ipk, p);
      if (f == 0) continue;
      for (int j = k; j < n; ++j)
        mat[static_cast<size_t>(r) * n + j] = sub(
            mat[static_cast<size_t>(r) * n + j], mul(f, mat[static_cast<size_t>(k) * n + j], p), p);
    }
  }
  return neg ? (d == 0 ? 0 : p - d) : d;
}

}  // namespace jaclab::modp
