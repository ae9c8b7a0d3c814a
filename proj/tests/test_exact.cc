#include <doctest.h>

#include <random>
#include <set>

#include "wkalg/errors.h"
#include "wkalg/exact/poly.h"
#include "wkalg/exact/rat.h"
#include "wkalg/exact/ratfn.h"

using namespace wkalg;

TEST_CASE("rationals are kept in lowest terms") {
  CHECK(Rat(BigInt(2), BigInt(-4)) == Rat(-1, 2));
  CHECK(Rat(BigInt(0), BigInt(-7)) == Rat(0));
  CHECK(Rat(6, 3).is_integer());
  CHECK(Rat(-6, 4).str() == "-3/2");
  CHECK(Rat(5).str() == "5");
  CHECK(Rat(-1, 2).den() == 2);
  CHECK_THROWS_AS(Rat(BigInt(1), BigInt(0)), DivisionByZeroError);
  CHECK_THROWS_AS(Rat(0).inverse(), DivisionByZeroError);
  CHECK_THROWS_AS(Rat(1) / Rat(0), DivisionByZeroError);
}

TEST_CASE("rational arithmetic and order") {
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
  CHECK(Rat(-2, 3) * Rat(9, 4) == Rat(-3, 2));
  CHECK(Rat(-2, 3) / Rat(4, 9) == Rat(-3, 2));
  CHECK(Rat(-1, 3) < Rat(-1, 4));
  CHECK(Rat(7, 3) > Rat(2));
  CHECK(Rat(-5, 7).abs() == Rat(5, 7));
  CHECK(Rat(-5, 7).sign() == -1);
}

TEST_CASE("big values do not overflow") {
  const BigInt big = BigInt(1) << 200;
  const Rat r(big, BigInt(3));
  CHECK((r * Rat(3)).num() == big);
  CHECK((r * r / r) == r);
}

TEST_CASE("parsing exact rationals") {
  CHECK(Rat::parse("3/6") == Rat(1, 2));
  CHECK(Rat::parse("-7") == Rat(-7));
  CHECK(Rat::parse("+5") == Rat(5));
  CHECK(Rat::parse("-15/4") == Rat(-15, 4));
  for (const char* bad : {"", "1/0", "a", "1.5", "1/-2", "--1", "1/", "/2", " 1"}) {
    CHECK_THROWS_AS(Rat::parse(bad), ParseError);
  }
}

TEST_CASE("polynomial basics") {
  const Poly x = Poly::x();
  const Poly p = x * x - Poly(Rat(1));
  CHECK(p.degree() == 2);
  CHECK(Poly().degree() == -1);
  CHECK(p(Rat(3)) == Rat(8));
  CHECK((p - p).is_zero());
  CHECK(Poly({Rat(25), Rat(-19)}).str() == "-19*k + 25");
  CHECK(Poly({Rat(1), Rat(0), Rat(0)}).degree() == 0);
}

TEST_CASE("division identity on random polynomials") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> c(-20, 20);
  for (int i = 0; i < 50; ++i) {
    std::vector<Rat> a(6), b(3);
    for (auto& v : a) v = Rat(c(rng), 1 + (c(rng) + 20) % 5);
    for (auto& v : b) v = Rat(c(rng));
    b.back() = Rat(1 + i % 4);
    const Poly pa(a), pb(b);
    const auto [q, r] = Poly::divmod(pa, pb);
    CHECK(q * pb + r == pa);
    CHECK(r.degree() < pb.degree());
  }
}

TEST_CASE("polynomial gcd") {
  const Poly x = Poly::x();
  const Poly one(Rat(1));
  const Poly a = (x - one) * (x - Poly(Rat(2)));
  const Poly b = (x - Poly(Rat(2))) * (x + Poly(Rat(3)));
  CHECK(gcd(a, b) == x - Poly(Rat(2)));
  CHECK(gcd(a * Rat(7, 3), a) == a.monic());
  CHECK(gcd(a, one) == one);
  CHECK(gcd(Poly(), Poly()).is_zero());
  CHECK(gcd(Poly(), b) == b.monic());
}

TEST_CASE("rational roots on known polynomials") {
  const Poly x = Poly::x();
  auto lin = [&](Rat r) { return x - Poly(r); };

  auto roots = rational_roots(Poly({Rat(1), Rat(-5), Rat(6)}));  // 6k^2 - 5k + 1
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == RationalRoot{Rat(1, 3), 1});
  CHECK(roots[1] == RationalRoot{Rat(1, 2), 1});

  roots = rational_roots(x * x * x);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0] == RationalRoot{Rat(0), 3});

  roots = rational_roots(lin(Rat(2, 3)) * lin(Rat(2, 3)) * lin(Rat(-1)) * Rat(9));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == RationalRoot{Rat(-1), 1});
  CHECK(roots[1] == RationalRoot{Rat(2, 3), 2});

  CHECK(rational_roots(x * x + Poly(Rat(1))).empty());
  CHECK(rational_roots(Poly(Rat(4))).empty());
  CHECK_THROWS_AS(rational_roots(Poly()), ZeroPolynomialError);
}

TEST_CASE("rational roots recover planted roots") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 7);
  for (int i = 0; i < 40; ++i) {
    Poly p(Rat(den(rng)));
    std::multiset<Rat> planted;
    for (int f = 0; f < 1 + i % 5; ++f) {
      const Rat r(num(rng), den(rng));
      planted.insert(r);
      p *= Poly({-r, Rat(1)});
    }
    std::multiset<Rat> found;
    for (const RationalRoot& r : rational_roots(p)) {
      CHECK(p(r.value).is_zero());
      for (int j = 0; j < r.multiplicity; ++j) found.insert(r.value);
    }
    CHECK(found == planted);
  }
}

TEST_CASE("rational functions reduce to a canonical form") {
  const RationalFn k = RationalFn::var();
  const RationalFn f = (k * k - Rat(1)) / (k - Rat(1));
  CHECK(f.den() == Poly(Rat(1)));
  CHECK(f.num() == Poly({Rat(1), Rat(1)}));
  const RationalFn g = (k * Rat(2)) / (k * Rat(4) + Rat(2));
  CHECK(g.den().leading() == Rat(1));
  CHECK(g(Rat(1)) == Rat(1, 3));
  CHECK(g.str() == "(1/2*k)/(k + 1/2)");
  CHECK(g.has_pole_at(Rat(-1, 2)));
  CHECK_THROWS_AS(g(Rat(-1, 2)), PoleError);
  CHECK_THROWS_AS(k / RationalFn(), DivisionByZeroError);
}

TEST_CASE("rational function identities hold pointwise") {
  const RationalFn k = RationalFn::var();
  const RationalFn a = (k + Rat(3)) / (k * k - Rat(2));
  const RationalFn b = (k * Rat(5) - Rat(1)) / (k + Rat(7));
  const RationalFn expr = a * b - a / b + b * b;
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-50, 50);
  int tested = 0;
  while (tested < 20) {
    const Rat t(d(rng), 1 + (d(rng) + 50) % 9);
    const Rat an = t + Rat(3), ad = t * t - Rat(2), bn = t * Rat(5) - Rat(1), bd = t + Rat(7);
    if (ad.is_zero() || bd.is_zero() || bn.is_zero() || an.is_zero()) continue;
    const Rat av = an / ad, bv = bn / bd;
    CHECK(expr(t) == av * bv - av / bv + bv * bv);
    ++tested;
  }
  CHECK(equivalent(a * b, b * a));
  CHECK(equivalent((a + b) * (a - b), a * a - b * b));
  CHECK_FALSE(equivalent(a, b));
}
