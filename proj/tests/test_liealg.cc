#include <doctest.h>

#include <numeric>

#include "wkalg/errors.h"
#include "wkalg/liealg/grading.h"
#include "wkalg/liealg/partition.h"
#include "wkalg/liealg/weights.h"

using namespace wkalg;

namespace {

// Weighted Dynkin diagram of the hook (m, 1^n) read off directly.
std::vector<Rat> hook_labels(int m, int n) {
  std::vector<Rat> l;
  if (m % 2 == 0) {
    for (int i = 0; i < m / 2 - 1; ++i) l.push_back(Rat(1));
    l.push_back(Rat(1, 2));
    for (int i = 0; i < n - 1; ++i) l.push_back(Rat(0));
    l.push_back(Rat(1, 2));
    for (int i = 0; i < m / 2 - 1; ++i) l.push_back(Rat(1));
  } else {
    for (int i = 0; i < (m - 1) / 2; ++i) l.push_back(Rat(1));
    for (int i = 0; i < n; ++i) l.push_back(Rat(0));
    for (int i = 0; i < (m - 1) / 2; ++i) l.push_back(Rat(1));
  }
  return l;
}

// Casimir through epsilon coordinates: lambda_i = sum_{j >= i} a_j, with
// the trace removed in the pairing.
Rat casimir_via_epsilon(int n, const std::vector<int>& a) {
  auto eps = [n](const std::vector<int>& w) {
    std::vector<Rat> e(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n - 1; ++j) e[i] += Rat(w[j]);
    }
    return e;
  };
  auto pair = [n](const std::vector<Rat>& x, const std::vector<Rat>& y) {
    Rat dot, sx, sy;
    for (int i = 0; i < n; ++i) {
      dot += x[i] * y[i];
      sx += x[i];
      sy += y[i];
    }
    return dot - sx * sy / Rat(n);
  };
  std::vector<int> shifted = a;
  for (int& v : shifted) v += 2;
  return pair(eps(a), eps(shifted));
}

}  // namespace

TEST_CASE("partitions parse, sort and transpose") {
  const Partition p = Partition::parse("1,3,1");
  CHECK(p.parts() == std::vector<int>{3, 1, 1});
  CHECK(p.size() == 5);
  CHECK(p.str() == "3,1,1");
  CHECK(p.dual() == std::vector<int>{3, 1, 1});
  CHECK(Partition({4, 2, 1}).dual() == std::vector<int>{3, 2, 1, 1});
  CHECK(Partition::hook(3, 2) == p);
  CHECK(Partition::rectangular(2, 3).parts() == std::vector<int>{2, 2, 2});
  CHECK_THROWS_AS(Partition::parse("0,1"), ParseError);
  CHECK_THROWS_AS(Partition::parse("3,,1"), ParseError);
  CHECK_THROWS_AS(Partition::parse("a"), ParseError);
  CHECK_THROWS_AS(Partition::parse("1"), ParseError);
  CHECK_THROWS_AS(Partition({}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("Dynkin labels of hooks") {
  for (int m = 2; m <= 8; ++m) {
    for (int n = 1; n <= 6; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      CHECK(dynkin_grading(Partition::hook(m, n)).labels == hook_labels(m, n));
    }
  }
}

TEST_CASE("Dynkin labels of rectangles") {
  // q-1 groups of (m-1 zeros, then 1), then m-1 zeros.
  for (int q = 2; q <= 5; ++q) {
    for (int m = 2; m <= 4; ++m) {
      std::vector<Rat> want;
      for (int g = 0; g < q - 1; ++g) {
        for (int i = 0; i < m - 1; ++i) want.push_back(Rat(0));
        want.push_back(Rat(1));
      }
      for (int i = 0; i < m - 1; ++i) want.push_back(Rat(0));
      CHECK(dynkin_grading(Partition::rectangular(q, m)).labels == want);
    }
  }
}

TEST_CASE("graded dimensions of (3,1,1) and (4,1,1)") {
  const GradedDims odd = graded_dims(dynkin_grading(Partition::hook(3, 2)));
  CHECK(odd.g_at(0) == 10);
  CHECK(odd.gf_at(0) == 4);
  CHECK(odd.g_at(-2) == 6);
  CHECK(odd.gf_at(-2) == 5);
  CHECK(odd.g_at(-4) == 1);
  CHECK(odd.gf_at(-4) == 1);
  CHECK(odd.g_at(2) == 6);
  CHECK(odd.total_g() == 24);
  CHECK(odd.total_gf() == 10);

  const GradedDims even = graded_dims(dynkin_grading(Partition::hook(4, 2)));
  CHECK(even.g_at(0) == 7);
  CHECK(even.gf_at(0) == 4);
  CHECK(even.g_at(-1) == 4);
  CHECK(even.gf_at(-1) == 0);
  CHECK(even.g_at(-3) == 4);
  CHECK(even.gf_at(-3) == 4);
  CHECK(even.g_at(-2) == 3);
  CHECK(even.g_at(-4) == 2);
  CHECK(even.gf_at(-4) == 1);
  CHECK(even.gf_at(-2) == 1);
  CHECK(even.g_at(-6) == 1);
  CHECK(even.total_gf() == 4 + 4 + 1 + 1 + 1);
}

TEST_CASE("Table 3 for rectangles") {
  for (int q = 2; q <= 6; ++q) {
    for (int m = 2; m <= 6; ++m) {
      const GradedDims d = graded_dims(dynkin_grading(Partition::rectangular(q, m)));
      CHECK(d.g_at(0) == m * m * q - 1);
      CHECK(d.gf_at(0) == m * m - 1);
      for (int j = 1; j <= q - 1; ++j) {
        CHECK(d.g_at(-2 * j) == m * m * (q - j));
        CHECK(d.gf_at(-2 * j) == m * m);
      }
      CHECK(d.total_g() == (m * q) * (m * q) - 1);
    }
  }
}

TEST_CASE("dim g^f from the dual partition") {
  for (const char* text : {"5,3,3,1", "4,4,2", "6,1", "2,2,1,1,1", "7,5,2,1"}) {
    const Partition p = Partition::parse(text);
    int want = -1;
    for (int c : p.dual()) want += c * c;
    CHECK(graded_dims(dynkin_grading(p)).total_gf() == want);
  }
}

TEST_CASE("(x|x) and (h_theta|x)") {
  for (const char* text : {"3,1,1", "4,2,2", "2,2,2", "5,1"}) {
    const DynkinGrading g = dynkin_grading(Partition::parse(text));
    Rat sum;
    for (const Rat& e : g.eigenvalues()) sum += e * e;
    CHECK(x_norm(g) == sum);
  }
  for (int m = 1; m <= 6; ++m) CHECK(theta_pairing(dynkin_grading(Partition::hook(m, 2))) == Rat(m - 1));
  CHECK(theta_pairing(dynkin_grading(Partition::rectangular(3, 2))) == Rat(2));
}

TEST_CASE("heights and N_p membership") {
  CHECK(height_and_np(Partition::hook(3, 2), 3).height == 4);
  for (int m = 2; m <= 8; ++m) {
    CHECK(height_and_np(Partition::hook(m, 3), m).in_np);
    CHECK_FALSE(height_and_np(Partition::hook(m, 3), m - 1).in_np);
  }
  CHECK(height_and_np(Partition::parse("1,1,1"), 1).height == 0);
  CHECK_THROWS_AS(height_and_np(Partition::hook(2, 1), 0), std::invalid_argument);
}

TEST_CASE("even good grading of hooks") {
  const HookGoodGrading g = hook_good_grading(3, 2);
  CHECK(g.eigenvalues.front() == Rat(7, 5));
  CHECK(g.eigenvalues.back() == Rat(-3, 5));
  CHECK(g.even);
  Rat trace;
  for (const Rat& e : g.eigenvalues) trace += e;
  CHECK(trace.is_zero());
  for (int m = 1; m <= 7; ++m) {
    for (int n = 1; n <= 5; ++n) CHECK(hook_good_grading_consistent(m, n));
  }
}

TEST_CASE("Casimir against the epsilon-coordinate oracle") {
  for (int n = 2; n <= 6; ++n) {
    std::vector<int> w(n - 1, 0);
    while (true) {
      CHECK(casimir_sl(n, w) == casimir_via_epsilon(n, w));
      int i = 0;
      while (i < n - 1 && w[i] == 3) w[i++] = 0;
      if (i == n - 1) break;
      ++w[i];
    }
  }
  CHECK(casimir_sl(3, adjoint_weight(3)) == Rat(6));
  CHECK(casimir_sl(2, fundamental_weight(2, 1)) == Rat(3, 2));
  CHECK_THROWS_AS(casimir_sl(3, std::vector<int>{1}), DimensionError);
}

TEST_CASE("Sugawara weights") {
  // The adjoint has weight n/(k+n); the vector (n^2-1)/(2n(k+n)).
  for (int n = 2; n <= 6; ++n) {
    const Rat k(3, 7);
    CHECK(sugawara_h(n, k, adjoint_weight(n)) == Rat(n) / (k + Rat(n)));
    CHECK(sugawara_h(n, k, fundamental_weight(n, 1)) == Rat(n * n - 1, 2 * n) / (k + Rat(n)));
    CHECK(sugawara_h(n, k, fundamental_weight(n, n - 1)) == sugawara_h(n, k, fundamental_weight(n, 1)));
  }
  CHECK(adjoint_weight(2) == std::vector<int>{2});
  CHECK_THROWS_AS(sugawara_h(3, Rat(-3), adjoint_weight(3)), CriticalLevelError);
}
