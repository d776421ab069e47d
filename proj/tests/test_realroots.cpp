#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "jaclab/realroots.hpp"
#include "oracles.hpp"

using namespace jaclab;

namespace {

QPoly make(std::initializer_list<long> coeffs_low_to_high) {
  std::vector<Rational> c;
  for (long v : coeffs_low_to_high) c.emplace_back(v);
  return QPoly(std::move(c));
}

QPoly random_int_poly(std::mt19937_64& rng, int deg, int bound = 9) {
  std::uniform_int_distribution<int> cd(-bound, bound);
  QPoly p;
  for (int k = 0; k < deg; ++k) p.set_coeff(k, Rational(cd(rng)));
  int lead = 0;
  while (lead == 0) lead = cd(rng);
  p.set_coeff(deg, Rational(lead));
  return p;
}

}  // namespace

TEST_CASE("count_real_roots examples") {
  CHECK(count_real_roots(make({-2, 0, 1}), Rational(0), Rational(2)) == 1);  // x^2-2 on (0,2]
  CHECK(count_real_roots(make({0, -1, 0, 1})) == 3);                         // x^3-x
  CHECK(count_real_roots(make({1, 0, 1})) == 0);                             // x^2+1
  CHECK_THROWS_AS(count_real_roots(QPoly()), Error);
}

TEST_CASE("isolation examples") {
  auto boxes = isolate_real_roots(make({0, -1, 0, 1}), Rational(1, 4));
  REQUIRE(boxes.size() == 3);
  Rational roots[3] = {Rational(-1), Rational(0), Rational(1)};
  for (int i = 0; i < 3; ++i) {
    CHECK(boxes[static_cast<size_t>(i)].lo < roots[i]);
    CHECK(roots[i] <= boxes[static_cast<size_t>(i)].hi);
    CHECK(boxes[static_cast<size_t>(i)].width() <= Rational(1, 4));
  }

  // (x - 1/3)^2: squarefree part has the single root 1/3
  QPoly dbl = make({1, -6, 9});  // 9x^2 - 6x + 1 = (3x-1)^2
  auto b2 = isolate_real_roots(dbl, Rational(1, 10));
  REQUIRE(b2.size() == 1);
  CHECK(b2[0].lo < Rational(1, 3));
  CHECK(Rational(1, 3) <= b2[0].hi);
  CHECK(rational_root_value(b2[0]) == Rational(1, 3));
}

TEST_CASE("isolation matches the numeric oracle on random squarefree polynomials") {
  std::mt19937_64 rng(4242);
  int done = 0;
  while (done < 100) {
    QPoly p = random_int_poly(rng, 8);
    QPoly sf = squarefree_part(p);
    if (sf.degree() != 8) continue;  // keep the advertised degree
    auto boxes = isolate_real_roots(sf, Rational(1, 16));
    int oracle = oracles::real_root_count(sf);
    CHECK(static_cast<int>(boxes.size()) == oracle);
    CHECK(static_cast<int>(boxes.size()) == count_real_roots(sf));
    ++done;
  }
}

TEST_CASE("sign_at examples") {
  CHECK(sign_at(make({-1, 1}), Rational(2)) == 1);  // x-1 at 2

  QPoly x2m2 = make({-2, 0, 1});
  auto boxes = isolate_real_roots(x2m2, Rational(1, 8));
  REQUIRE(boxes.size() == 2);
  const RootBox& minus_sqrt2 = boxes[0];
  const RootBox& plus_sqrt2 = boxes[1];
  CHECK(sign_at(x2m2, plus_sqrt2) == 0);        // same algebraic number
  CHECK(sign_at(make({0, 0, 0, 1}), minus_sqrt2) == -1);  // x^3 at -sqrt(2)
  CHECK(sign_at(make({0, 0, 0, 1}), plus_sqrt2) == 1);
}

TEST_CASE("interval additivity at non-root split points") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> cd(-20, 20);
  int done = 0;
  while (done < 50) {
    QPoly p = random_int_poly(rng, 6);
    Rational a(-100), b(100), c(cd(rng), 1 + (rng() % 7));
    if (!(a < c && c < b)) continue;
    if (sign_at(squarefree_part(p), c) == 0) continue;
    int whole = count_real_roots(p, a, b);
    int left = count_real_roots(p, a, c);
    int right = count_real_roots(p, c, b);
    CHECK(whole == left + right);
    ++done;
  }
}

TEST_CASE("Descartes bound on (0, oo)") {
  std::mt19937_64 rng(123);
  for (int i = 0; i < 100; ++i) {
    QPoly p = random_int_poly(rng, 2 + static_cast<int>(rng() % 7));
    int variations = 0, last = 0;
    for (int k = 0; k <= p.degree(); ++k) {
      int s = p.coeff(k).sign();
      if (s == 0) continue;
      if (last != 0 && s != last) ++variations;
      last = s;
    }
    Rational bound = cauchy_bound(p);
    int positive_roots = count_real_roots(p, Rational(0), bound);
    CHECK(positive_roots <= variations);
  }
}

TEST_CASE("boxes are disjoint with opposite endpoint signs") {
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 40; ++i) {
    QPoly p = random_int_poly(rng, 7);
    auto boxes = isolate_real_roots(p, Rational(1, 8));
    QPoly sf = SturmChain::build(p).seq[0];
    for (size_t k = 0; k < boxes.size(); ++k) {
      int slo = sign_at(sf, boxes[k].lo), shi = sign_at(sf, boxes[k].hi);
      CHECK(slo != 0);
      CHECK(shi != 0);
      CHECK(slo != shi);
      if (k + 1 < boxes.size()) CHECK(boxes[k].hi <= boxes[k + 1].lo);
    }
  }
}

TEST_CASE("refinement keeps the root and narrows the box") {
  QPoly p = make({-2, 0, 1});
  auto boxes = isolate_real_roots(p, Rational(1));
  REQUIRE(boxes.size() == 2);
  RootBox b = boxes[1];
  refine_box(b, Rational(1, 1000));
  CHECK(b.width() <= Rational(1, 1000));
  CHECK(sign_at(p, b) == 0);
  CHECK(!rational_root_value(b).has_value());
}
