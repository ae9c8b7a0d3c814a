#include <doctest.h>

#include <map>

#include "wkalg/errors.h"
#include "wkalg/liealg/grading.h"
#include "wkalg/walgebra/central_charge.h"
#include "wkalg/walgebra/coset.h"
#include "wkalg/walgebra/family.h"
#include "wkalg/walgebra/generators.h"

using namespace wkalg;

namespace {

const RationalFn K = RationalFn::var();

// Principal nilpotent: the W_N algebra.
RationalFn principal_c(int n) {
  const RationalFn shifted = K + Rat(n - 1);
  return RationalFn(Rat(n - 1)) * (RationalFn(Rat(1)) - RationalFn(Rat(n * (n + 1))) * shifted * shifted / (K + Rat(n)));
}

// Minimal nilpotent (2, 1^{N-2}).
RationalFn minimal_c(int n) { return K * Rat(n * n - 1) / (K + Rat(n)) - K * Rat(6) + Rat(n - 4); }

std::map<Rat, int> weight_multiset(const std::vector<GeneratorSpec>& specs) {
  std::map<Rat, int> w;
  for (const GeneratorSpec& s : specs) w[s.weight] += s.multiplicity;
  return w;
}

}  // namespace

TEST_CASE("family classification") {
  const FamilyParams h = FamilyParams::classify(Partition::parse("3,1,1"));
  CHECK(h.is_hook());
  CHECK(h.m() == 3);
  CHECK(h.n() == 2);
  CHECK(h.h_vee() == 5);
  CHECK(h.str() == "hook(m=3, n=2)");

  const FamilyParams r = FamilyParams::classify(Partition::parse("2,2,2"));
  CHECK(r.is_rectangular());
  CHECK(r.q() == 2);
  CHECK(r.m() == 3);
  CHECK(r.str() == "rect(q=2, m=3)");

  CHECK(FamilyParams::classify(Partition::parse("3,2")).family() == Family::General);
  CHECK(FamilyParams::classify(Partition::parse("4")).family() == Family::General);
  CHECK(FamilyParams::classify(Partition::parse("1,1,1")).is_hook());
  CHECK_THROWS_AS(FamilyParams::hook(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(FamilyParams::rectangular(1, 3), std::invalid_argument);
}

TEST_CASE("central charge of known W-algebras") {
  for (int n = 2; n <= 7; ++n) {
    CAPTURE(n);
    CHECK(equivalent(central_charge(Partition({n})), principal_c(n)));
    CHECK(equivalent(central_charge(FamilyParams::hook(1, n - 1)), K * Rat(n * n - 1) / (K + Rat(n))));
    if (n >= 3) CHECK(equivalent(central_charge(FamilyParams::hook(2, n - 2)), minimal_c(n)));
  }
}

TEST_CASE("hook central charge against the closed form") {
  const RationalFn c = central_charge(FamilyParams::hook(3, 2));
  CHECK(c.str() == "(-24*k^2 - 134*k - 190)/(k + 5)");
  CHECK(c(Rat(-3)) == Rat(-2));
  for (int m = 1; m <= 6; ++m) {
    for (int n = 1; n <= 6; ++n) CHECK(equivalent(central_charge(FamilyParams::hook(m, n)), hook_central_charge_closed(m, n)));
  }
}

TEST_CASE("rectangular central charge against C(k)") {
  // (2,2) by hand: C(k) = k(2(2-8)(k+4) + 15)/(k+4) - 8(8-8+1).
  const RationalFn want = K * (RationalFn(Rat(-12)) * (K + Rat(4)) + Rat(15)) / (K + Rat(4)) - Rat(8);
  CHECK(equivalent(central_charge(FamilyParams::rectangular(2, 2)), want));
  for (int q = 2; q <= 5; ++q) {
    for (int m = 2; m <= 5; ++m) {
      CHECK(equivalent(central_charge(FamilyParams::rectangular(q, m)), rectangular_central_charge_closed(q, m)));
    }
  }
}

TEST_CASE("hook strong generators") {
  const std::vector<GeneratorSpec> g = strong_generators(FamilyParams::hook(4, 3));
  REQUIRE(g.size() == 6);
  CHECK(g[0] == GeneratorSpec{Rat(1), {RepTag::AffinePart, Rat(0)}, 9});
  CHECK(g[1] == GeneratorSpec{Rat(2), {RepTag::VirasoroPart, Rat(0)}, 1});
  CHECK(g[2].weight == Rat(3));
  CHECK(g[3].weight == Rat(4));
  CHECK(g[4] == GeneratorSpec{Rat(5, 2), {RepTag::Vector, Rat(1)}, 3});
  CHECK(g[5] == GeneratorSpec{Rat(5, 2), {RepTag::Covector, Rat(-1)}, 3});
  CHECK(natural_algebra(FamilyParams::hook(4, 3)) == "gl(3)");
  CHECK(natural_algebra(FamilyParams::hook(1, 3)) == "sl(4)");
}

TEST_CASE("rectangular strong generators") {
  const std::vector<GeneratorSpec> g = strong_generators(FamilyParams::rectangular(3, 2));
  std::map<Rat, int> w = weight_multiset(g);
  CHECK(w[Rat(1)] == 3);
  CHECK(w[Rat(2)] == 4);  // L and an adjoint triple
  CHECK(w[Rat(3)] == 4);  // W_3 and an adjoint triple
  CHECK(natural_algebra(FamilyParams::rectangular(3, 2)) == "sl(2)");
}

TEST_CASE("generator weights follow graded g^f for every family") {
  for (const char* text : {"3,1,1", "4,1", "2,2,2", "3,3", "4,2,1", "3,2,2,1", "5,3", "1,1,1,1"}) {
    const Partition p = Partition::parse(text);
    std::map<Rat, int> want;
    for (const auto& [twice_j, dim] : graded_dims(dynkin_grading(p)).gf) want[Rat(-twice_j, 2) + Rat(1)] += dim;
    CHECK(weight_multiset(strong_generators(FamilyParams::classify(p))) == want);
  }
  CHECK(natural_algebra(FamilyParams::general(Partition::parse("3,3,2"))) == "s(gl(2)+gl(1))");
  CHECK(natural_algebra(FamilyParams::general(Partition::parse("4"))) == "0");
}

TEST_CASE("coset levels and charges") {
  const FamilyParams h = FamilyParams::hook(3, 2);
  const CosetLevels c = coset_levels(h, Rat(-3));
  REQUIRE(c.k0.has_value());
  CHECK(*c.k0 == Rat(1, 3));
  CHECK(c.k1 == Rat(-1));
  CHECK(coset_central_charge(h, Rat(-3)) == Rat(-3) / Rat(1) + Rat(1));
  // k0 = 0 at k = -10/3 drops the Heisenberg term.
  CHECK(coset_central_charge(h, Rat(-10, 3)) == Rat(-4, 3) * Rat(3) / Rat(2, 3));
  CHECK_THROWS_AS(coset_levels(h, Rat(-5)), CriticalLevelError);
  CHECK_THROWS_AS(coset_central_charge(h, Rat(-4)), CriticalLevelError);  // k1 = -2

  const FamilyParams r = FamilyParams::rectangular(2, 3);
  const CosetLevels cr = coset_levels(r, Rat(-4));
  CHECK_FALSE(cr.k0.has_value());
  CHECK(cr.k1 == Rat(-2));
  CHECK(coset_central_charge(r, Rat(-4)) == Rat(-16));
  CHECK_THROWS_AS(coset_levels(FamilyParams::general(Partition::parse("3,2")), Rat(0)), UnsupportedFamilyError);
}
