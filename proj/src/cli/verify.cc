#include "wkalg/cli/verify.h"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "wkalg/conformal/admissible.h"
#include "wkalg/conformal/collapse.h"
#include "wkalg/conformal/decomposition.h"
#include "wkalg/conformal/levels.h"
#include "wkalg/errors.h"
#include "wkalg/liealg/grading.h"
#include "wkalg/liealg/weights.h"
#include "wkalg/walgebra/central_charge.h"
#include "wkalg/walgebra/coset.h"
#include "wkalg/walgebra/generators.h"

namespace wkalg::cli {

namespace {

// Collects case outcomes for one check; the detail names the first few
// failures.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++cases_;
    if (!ok) failures_.push_back(what);
  }

  CheckResult result(std::string id, int criterion, std::string section, std::string title) const {
    CheckResult r{std::move(id), criterion, std::move(section), std::move(title), failures_.empty(), ""};
    if (failures_.empty()) {
      r.detail = std::to_string(cases_) + " cases";
    } else {
      r.detail = std::to_string(failures_.size()) + "/" + std::to_string(cases_) + " failed:";
      for (std::size_t i = 0; i < std::min<std::size_t>(3, failures_.size()); ++i) r.detail += " " + failures_[i] + ";";
    }
    return r;
  }

 private:
  int cases_ = 0;
  std::vector<std::string> failures_;
};

// Runs body, turning a library exception into a failed case.
void guarded(Tally& t, const std::string& what, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    t.expect(false, what + " threw: " + e.what());
  }
}

std::string hook_name(int m, int n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

// ---- oracles: independent closed forms ----

RationalFn oracle_hook_c(int m, int n) {
  const RationalFn k = RationalFn::var();
  const Rat h(m + n);
  const Rat mm(m);
  return -(k + k * (Rat(1) - h) * h + h * h) / (k + h) +
         RationalFn(mm) * (k - h - RationalFn(mm * mm) * (k + Rat(1) + h) + RationalFn(mm * (Rat(1) + Rat(3) * h)));
}

RationalFn oracle_rect_c(int q, int m) {
  const RationalFn k = RationalFn::var();
  const Rat qq(q);
  const Rat mm(m);
  const Rat mq = mm * qq;
  return k * (RationalFn(mm * (qq - qq * qq * qq)) * (k + mq) + mq * mq - Rat(1)) / (k + mq) -
         RationalFn(mm * mm * qq * (qq * qq * qq - Rat(2) * qq * qq + Rat(1)));
}

using DimTable = std::map<int, std::pair<int, int>>;  // 2j (j <= 0) -> (dim g_j, dim g^f_j)

// Table 1 (m odd) and Table 2 (m even) rows; Table 2's first row is read
// over integer j.
DimTable oracle_hook_table(int m, int n) {
  DimTable t;
  if (m % 2) {
    for (int j = (m + 1) / 2; j <= m - 1; ++j) t[-2 * j] = {m - j, 1};
    if (m >= 3) t[-(m - 1)] = {2 * n + (m + 1) / 2, 2 * n + 1};
    for (int j = 1; j <= (m - 3) / 2; ++j) t[-2 * j] = {2 * n + m - j, 1};
    t[0] = {n * n + 2 * n + m - 1, n * n};
  } else {
    for (int j = 1; j <= m - 1; ++j) t[-2 * j] = {m - j, 1};
    t[-(m - 1)] = {2 * n, 2 * n};
    for (int i = 0; i < m / 2 - 1; ++i) t[-(2 * i + 1)] = {2 * n, 0};
    t[0] = {n * n + m - 1, n * n};
  }
  return t;
}

DimTable oracle_rect_table(int q, int m) {
  DimTable t;
  for (int j = 1; j <= q - 1; ++j) t[-2 * j] = {m * m * (q - j), m * m};
  t[0] = {m * m * q - 1, m * m - 1};
  return t;
}

DimTable engine_table(const Partition& p) {
  const GradedDims d = graded_dims(dynkin_grading(p));
  DimTable t;
  for (const auto& [twice_j, dim] : d.g) {
    if (twice_j <= 0) t[twice_j] = {dim, d.gf_at(twice_j)};
  }
  return t;
}

int oracle_dual_total(const Partition& p) {
  int total = -1;
  for (int c : p.dual()) total += c * c;
  return total;
}

// Commutant of f between Jordan blocks a and b: min(a, b) maps, giving
// generators of conformal weight (a+b)/2 - s, s = 0..min-1; the trace is
// removed from weight 1.
std::map<Rat, int> oracle_generator_weights(const Partition& p) {
  std::map<Rat, int> w;
  for (int a : p.parts()) {
    for (int b : p.parts()) {
      for (int s = 0; s < std::min(a, b); ++s) ++w[Rat(a + b, 2) - Rat(s)];
    }
  }
  if (--w[Rat(1)] == 0) w.erase(Rat(1));
  return w;
}

std::set<Rat> oracle_hook_levels(int m, int n) {
  const int h = m + n;
  std::set<Rat> s;
  if (n > 1) s.insert(Rat(-m * h, m + 1));
  s.insert(Rat(-((m - 1) * h - 1), m));
  if (m > 1) s.insert(Rat(-((m - 2) * h + 1), m - 1));
  s.insert(Rat(-(m - 1) * h, m));
  return s;
}

std::set<Rat> oracle_rect_levels(int q, int m) {
  return {Rat(-m * q * q, q + 1), Rat(-m * q * q + m * q - 1, q), Rat(-m * q * q + m * q + 1, q)};
}

// (lambda, lambda + 2 rho) through the inverse Cartan matrix.
Rat oracle_casimir(int n, const std::vector<int>& lambda) {
  const int r = n - 1;
  std::vector<std::vector<Rat>> a(r, std::vector<Rat>(2 * r));
  for (int i = 0; i < r; ++i) {
    a[i][i] = Rat(2);
    if (i > 0) a[i][i - 1] = Rat(-1);
    if (i + 1 < r) a[i][i + 1] = Rat(-1);
    a[i][r + i] = Rat(1);
  }
  for (int c = 0; c < r; ++c) {
    int piv = c;
    while (a[piv][c].is_zero()) ++piv;
    std::swap(a[piv], a[c]);
    const Rat inv = a[c][c].inverse();
    for (auto& x : a[c]) x *= inv;
    for (int i = 0; i < r; ++i) {
      if (i == c || a[i][c].is_zero()) continue;
      const Rat f = a[i][c];
      for (int j = 0; j < 2 * r; ++j) a[i][j] -= f * a[c][j];
    }
  }
  Rat total;
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) total += Rat(lambda[i]) * Rat(lambda[j] + 2) * a[i][r + j];
  }
  return total;
}

Partition random_partition(std::mt19937& rng, int max_n) {
  const int n = std::uniform_int_distribution<int>(2, max_n)(rng);
  std::vector<int> parts;
  int left = n;
  while (left > 0) {
    const int part = std::uniform_int_distribution<int>(1, left)(rng);
    parts.push_back(part);
    left -= part;
  }
  return Partition(parts);
}

std::optional<Rat> closed_value(const FamilyParams& p, LevelTag tag) {
  for (const auto& [t, v] : closed_form_levels(p)) {
    if (t == tag) return v;
  }
  return std::nullopt;
}

// ---- checks ----

void check_central_charge(std::vector<CheckResult>& out) {
  Tally hook;
  for (int m = 1; m <= 8; ++m) {
    for (int n = 1; n <= 8; ++n) {
      guarded(hook, hook_name(m, n), [&] {
        hook.expect(equivalent(central_charge(FamilyParams::hook(m, n)), oracle_hook_c(m, n)), hook_name(m, n));
      });
    }
  }
  out.push_back(hook.result("cc.hook", 1, "central-charge", "hook central charge equals the closed form"));

  Tally rect;
  for (int q = 2; q <= 6; ++q) {
    for (int m = 2; m <= 6; ++m) {
      guarded(rect, hook_name(q, m), [&] {
        rect.expect(equivalent(central_charge(FamilyParams::rectangular(q, m)), oracle_rect_c(q, m)),
                    "rect" + hook_name(q, m));
      });
    }
  }
  out.push_back(rect.result("cc.rect", 2, "central-charge", "rectangular central charge equals C(k)"));
}

void check_tables(std::vector<CheckResult>& out) {
  Tally odd;
  Tally even;
  for (int m = 2; m <= 8; ++m) {
    for (int n = 1; n <= 6; ++n) {
      Tally& t = m % 2 ? odd : even;
      guarded(t, hook_name(m, n), [&] {
        t.expect(engine_table(Partition::hook(m, n)) == oracle_hook_table(m, n), hook_name(m, n));
      });
    }
  }
  out.push_back(odd.result("tables.hook-odd", 3, "tables", "Table 1 (m odd)"));
  out.push_back(even.result("tables.hook-even", 3, "tables", "Table 2 (m even)"));

  Tally rect;
  for (int q = 2; q <= 6; ++q) {
    for (int m = 2; m <= 6; ++m) {
      guarded(rect, hook_name(q, m), [&] {
        rect.expect(engine_table(Partition::rectangular(q, m)) == oracle_rect_table(q, m), "rect" + hook_name(q, m));
      });
    }
  }
  out.push_back(rect.result("tables.rect", 3, "tables", "Table 3 (rectangular)"));

  Tally dual;
  std::mt19937 rng(20240611);
  for (int i = 0; i < 50; ++i) {
    const Partition p = random_partition(rng, 12);
    guarded(dual, p.str(), [&] {
      dual.expect(graded_dims(dynkin_grading(p)).total_gf() == oracle_dual_total(p), p.str());
    });
  }
  out.push_back(dual.result("tables.dual-partition", 3, "tables", "dim g^f = sum of squared dual parts - 1"));
}

void check_levels(std::vector<CheckResult>& out) {
  Tally hook;
  Tally degenerate;
  Tally charges;
  for (int m = 1; m <= 8; ++m) {
    for (int n = 1; n <= 8; ++n) {
      const std::string name = hook_name(m, n);
      guarded(hook, name, [&] {
        const FamilyParams p = FamilyParams::hook(m, n);
        const std::vector<ConformalLevel> levels = conformal_levels(p);
        std::set<Rat> got;
        for (const ConformalLevel& l : levels) got.insert(l.k);
        hook.expect(got == oracle_hook_levels(m, n) && got.size() == levels.size(), name);

        const Rat k4(-(m - 1) * (m + n), m);
        int n_degenerate = 0;
        bool degenerate_is_k4 = true;
        for (const ConformalLevel& l : levels) {
          if (l.branch != Branch::Degenerate) continue;
          ++n_degenerate;
          degenerate_is_k4 = degenerate_is_k4 && l.k == k4 && l.has_tag(LevelTag::H4);
        }
        degenerate.expect(n_degenerate == 1 && degenerate_is_k4, name);

        const RationalFn c = central_charge(p);
        for (const ConformalLevel& l : levels) {
          charges.expect(c(l.k) == coset_central_charge(p, l.k), name + " k=" + l.k.str());
        }
      });
    }
  }

  Tally rect;
  for (int q = 2; q <= 6; ++q) {
    for (int m = 2; m <= 6; ++m) {
      const std::string name = "rect" + hook_name(q, m);
      guarded(rect, name, [&] {
        const FamilyParams p = FamilyParams::rectangular(q, m);
        const std::vector<ConformalLevel> levels = conformal_levels(p);
        std::set<Rat> got;
        for (const ConformalLevel& l : levels) got.insert(l.k);
        rect.expect(got == oracle_rect_levels(q, m) && got.size() == levels.size(), name);
        const RationalFn c = central_charge(p);
        for (const ConformalLevel& l : levels) {
          charges.expect(c(l.k) == coset_central_charge(p, l.k), name + " k=" + l.k.str());
        }
      });
    }
  }
  out.push_back(hook.result("levels.hook", 4, "levels", "hook conformal levels are exactly k^(1..4)"));
  out.push_back(rect.result("levels.rect", 4, "levels", "rectangular conformal levels are exactly k^[1..3]"));
  out.push_back(degenerate.result("levels.k0-zero", 4, "levels", "the k0 = 0 branch yields exactly k^(4)"));
  out.push_back(charges.result("levels.charges", 4, "levels", "central charges agree at every returned level"));
}

void check_verdicts(std::vector<CheckResult>& out) {
  Tally hook;
  for (int m = 1; m <= 8; ++m) {
    for (int n = 1; n <= 8; ++n) {
      const FamilyParams p = FamilyParams::hook(m, n);
      for (const auto& [tag, k] : closed_form_levels(p)) {
        const std::string name = hook_name(m, n) + " " + to_string(tag);
        guarded(hook, name, [&] {
          const Verdict v = collapse_check(p, k);
          CollapseStatus want = CollapseStatus::StronglyCollapsing;
          if (tag == LevelTag::H1 || tag == LevelTag::H2) want = CollapseStatus::NotStronglyCollapsing;
          if (tag == LevelTag::H3 && n == m - 1) want = CollapseStatus::NotStronglyCollapsing;
          hook.expect(v.status == want, name + " got " + to_string(v.status));
        });
      }
    }
  }
  out.push_back(hook.result("verdicts.hook", 5, "verdicts",
                            "H3 strongly collapsing iff n != m-1, H4 always, H1 and H2 never"));

  Tally rect;
  for (int q = 2; q <= 6; ++q) {
    for (int m = 2; m <= 6; ++m) {
      const FamilyParams p = FamilyParams::rectangular(q, m);
      const std::string sl = "(sl(" + std::to_string(m) + "))";
      for (const auto& [tag, k] : closed_form_levels(p)) {
        const std::string name = "rect" + hook_name(q, m) + " " + to_string(tag);
        guarded(rect, name, [&] {
          const Verdict v = collapse_check(p, k);
          CollapseStatus want = CollapseStatus::StronglyCollapsing;
          std::string target;
          if (tag == LevelTag::R1) target = "V_{" + Rat(-m * q, q + 1).str() + "}" + sl;
          if (tag == LevelTag::R2) {
            if (m == 2) {
              want = CollapseStatus::Inconclusive;
            } else {
              target = "V_{-1}" + sl;
            }
          }
          if (tag == LevelTag::R3) target = "V_{1}" + sl;
          rect.expect(v.status == want && v.target == target, name + " got " + to_string(v.status) + " " + v.target);
        });
      }
    }
  }
  out.push_back(rect.result("verdicts.rect", 5, "verdicts",
                            "R1, R3 strongly collapsing; R2 for m >= 3, Inconclusive at m = 2"));
}

void check_c_values(std::vector<CheckResult>& out) {
  Tally hook;
  for (int m = 1; m <= 8; ++m) {
    for (int n = 1; n <= 8; ++n) {
      const FamilyParams p = FamilyParams::hook(m, n);
      for (const auto& [tag, k] : closed_form_levels(p)) {
        Rat want;
        switch (tag) {
          case LevelTag::H1:
          case LevelTag::H2: want = Rat(m + 1, 2); break;
          case LevelTag::H3: want = Rat((m - 1) * (m + n * n + n - 1), 2 * n * n); break;
          case LevelTag::H4: want = Rat(m * (n * n - 1), 2 * n * n); break;
          default: break;
        }
        const std::string name = hook_name(m, n) + " " + to_string(tag);
        guarded(hook, name, [&] {
          const Verdict v = collapse_check(p, k);
          int seen = 0;
          for (const CValue& cv : v.c_values) {
            if (cv.rep.tag != RepTag::Vector && cv.rep.tag != RepTag::Covector) continue;
            ++seen;
            hook.expect(cv.c == want, name + " C=" + cv.c.str() + " want " + want.str());
          }
          hook.expect(seen == 2, name + " missing G^+-");
        });
      }
    }
  }
  out.push_back(hook.result("cvalues.hook", 6, "c-values", "G^+- Sugawara weights at k^(1..4)"));

  Tally rect;
  for (int q = 2; q <= 6; ++q) {
    for (int m = 2; m <= 6; ++m) {
      const FamilyParams p = FamilyParams::rectangular(q, m);
      for (const auto& [tag, k] : closed_form_levels(p)) {
        const Rat want = tag == LevelTag::R1   ? Rat(q + 1)
                         : tag == LevelTag::R2 ? Rat(m, m - 1)
                                               : Rat(m, m + 1);
        const std::string name = "rect" + hook_name(q, m) + " " + to_string(tag);
        guarded(rect, name, [&] {
          const Verdict v = collapse_check(p, k);
          int seen = 0;
          for (const CValue& cv : v.c_values) {
            if (cv.rep.tag == RepTag::Adjoint) {
              ++seen;
              rect.expect(cv.c == want, name + " C=" + cv.c.str());
            } else {
              rect.expect(cv.c.is_zero(), name + " trivial C=" + cv.c.str());
            }
          }
          rect.expect(seen == q - 1, name + " adjoint count");
        });
      }
    }
  }
  out.push_back(rect.result("cvalues.rect", 6, "c-values", "adjoint C = q+1, m/(m-1), m/(m+1) at k^[1..3]"));
}

void check_admissibility(std::vector<CheckResult>& out) {
  Tally hook;
  for (int m = 2; m <= 10; ++m) {
    for (int n = 2; n <= 10; ++n) {
      const FamilyParams p = FamilyParams::hook(m, n);
      const std::string name = hook_name(m, n);
      guarded(hook, name, [&] {
        const AdmissibleForm a1 = admissibility(p, *closed_value(p, LevelTag::H1));
        const AdmissibleForm a2 = admissibility(p, *closed_value(p, LevelTag::H2));
        hook.expect(a1.admissible == (std::gcd(n - 1, m + 1) == 1), name + " H1");
        hook.expect(a2.admissible == (std::gcd(n + 1, m) == 1), name + " H2");
        for (const AdmissibleForm* a : {&a1, &a2}) {
          if (a->admissible) hook.expect(a->d_kW && *a->d_kW == Rat(2), name + " d_kW");
        }
      });
    }
  }
  out.push_back(hook.result("admissible.lemma94", 7, "admissibility",
                            "p'/p test matches the gcd criteria; d_kW = 2 when admissible"));

  Tally rect;
  for (int q = 2; q <= 6; ++q) {
    for (int m = 2; m <= 6; ++m) {
      const FamilyParams p = FamilyParams::rectangular(q, m);
      const std::string name = "rect" + hook_name(q, m);
      guarded(rect, name, [&] {
        rect.expect(admissibility(p, *closed_value(p, LevelTag::R1)).admissible == (std::gcd(m, q + 1) == 1),
                    name + " R1");
        rect.expect(!admissibility(p, *closed_value(p, LevelTag::R2)).admissible, name + " R2");
        rect.expect(admissibility(p, *closed_value(p, LevelTag::R3)).admissible, name + " R3");
      });
    }
  }
  out.push_back(rect.result("admissible.rect", 7, "admissibility",
                            "k^[2] never admissible, k^[3] always, k^[1] iff gcd(m, q+1) = 1"));
}

void check_heights(std::vector<CheckResult>& out) {
  Tally t;
  for (int m = 2; m <= 8; ++m) {
    for (int n = 1; n <= 6; ++n) {
      const std::string name = hook_name(m, n);
      guarded(t, name, [&] {
        const Partition p = Partition::hook(m, n);
        const HeightInfo in_m = height_and_np(p, m);
        const HeightInfo in_prev = height_and_np(p, m - 1);
        t.expect(in_m.height == 2 * (m - 1) && in_m.in_np && !in_prev.in_np, name);
      });
    }
  }
  out.push_back(t.result("heights.hook", 8, "heights", "height 2(m-1) and f in N_m minus N_{m-1}"));
}

void check_h_mu(std::vector<CheckResult>& out) {
  Tally agree;
  Tally integral;
  for (int m = 2; m <= 8; ++m) {
    for (int n = 2; n <= 8; ++n) {
      const FamilyParams p = FamilyParams::hook(m, n);
      const std::string name = hook_name(m, n);
      guarded(agree, name, [&] {
        const Rat closed = h_mu(p, 1);
        agree.expect(closed == h_mu_sugawara(p, 1), name + " i=1");
        agree.expect(h_mu(p, 2) == h_mu_sugawara(p, 2), name + " i=2");
        integral.expect(closed.is_integer() == ((m + 1) % (n - 1) == 0), name);
      });
    }
  }
  out.push_back(agree.result("hmu.sugawara", 9, "h-mu", "closed-form h_mu equals the Sugawara weight of the adjoint"));
  out.push_back(integral.result("hmu.integrality", 9, "h-mu", "h_mu^(1) integral iff (n-1) | (m+1)"));
}

void check_properties(std::vector<CheckResult>& out) {
  Tally gens;
  std::mt19937 rng(1729);
  for (int i = 0; i < 20; ++i) {
    const Partition part = random_partition(rng, 12);
    guarded(gens, part.str(), [&] {
      std::map<Rat, int> got;
      for (const GeneratorSpec& g : strong_generators(FamilyParams::classify(part))) got[g.weight] += g.multiplicity;
      std::map<Rat, int> from_dims;
      for (const auto& [twice_j, dim] : graded_dims(dynkin_grading(part)).gf) from_dims[Rat(-twice_j, 2) + Rat(1)] += dim;
      gens.expect(got == oracle_generator_weights(part) && got == from_dims, part.str());
    });
  }
  out.push_back(gens.result("props.generators", 10, "properties",
                            "generator weights match graded g^f on random partitions"));

  Tally roots;
  auto verify_roots = [&roots](const Poly& p, const std::string& name) {
    for (const RationalRoot& r : rational_roots(p)) {
      const Poly lin({-r.value, Rat(1)});
      Poly power(Rat(1));
      for (int i = 0; i < r.multiplicity; ++i) power *= lin;
      const bool divides = Poly::divmod(p, power).second.is_zero();
      const bool exact = !Poly::divmod(p, power * lin).second.is_zero();
      roots.expect(p(r.value).is_zero() && divides && exact, name + " root " + r.value.str());
    }
  };
  for (int m = 1; m <= 8; ++m) {
    for (int n = 1; n <= 8; ++n) {
      const FamilyParams p = FamilyParams::hook(m, n);
      guarded(roots, hook_name(m, n), [&] {
        verify_roots((central_charge(p) - coset_central_charge_symbolic(p)).num(), hook_name(m, n));
      });
    }
  }
  std::mt19937 prng(4242);
  for (int i = 0; i < 30; ++i) {
    std::uniform_int_distribution<int> small(-9, 9);
    std::uniform_int_distribution<int> pos(1, 6);
    Poly p(Rat(pos(prng)));
    std::multiset<Rat> planted;
    const int factors = std::uniform_int_distribution<int>(1, 5)(prng);
    for (int f = 0; f < factors; ++f) {
      const Rat r(small(prng), pos(prng));
      planted.insert(r);
      p *= Poly({-r, Rat(1)});
    }
    // An irreducible quadratic factor must not contribute roots.
    if (i % 3 == 0) p *= Poly({Rat(2), Rat(0), Rat(1)});
    const std::string name = "random#" + std::to_string(i);
    guarded(roots, name, [&] {
      std::multiset<Rat> found;
      for (const RationalRoot& r : rational_roots(p)) {
        for (int j = 0; j < r.multiplicity; ++j) found.insert(r.value);
      }
      roots.expect(found == planted, name);
      verify_roots(p, name);
    });
  }
  out.push_back(roots.result("props.roots", 10, "properties", "rational roots re-evaluate to zero with exact multiplicity"));

  Tally cas;
  for (int n = 2; n <= 6; ++n) {
    std::vector<int> w(n - 1, 0);
    // Every weight with coordinates in {0, 1, 2}.
    while (true) {
      guarded(cas, "sl(" + std::to_string(n) + ")", [&] {
        cas.expect(casimir_sl(n, w) == oracle_casimir(n, w), "sl(" + std::to_string(n) + ")");
      });
      int i = 0;
      while (i < n - 1 && w[i] == 2) w[i++] = 0;
      if (i == n - 1) break;
      ++w[i];
    }
  }
  out.push_back(cas.result("props.casimir", 10, "properties", "Casimir agrees with the inverse-Cartan oracle, n <= 6"));

  Tally good;
  for (int m = 1; m <= 8; ++m) {
    for (int n = 1; n <= 6; ++n) {
      guarded(good, hook_name(m, n), [&] { good.expect(hook_good_grading_consistent(m, n), hook_name(m, n)); });
    }
  }
  out.push_back(good.result("props.good-grading", 10, "properties", "hook even good grading is even with g_0 = g^f_0"));
}

using SectionFn = void (*)(std::vector<CheckResult>&);

const std::vector<std::pair<std::string, SectionFn>>& sections() {
  static const std::vector<std::pair<std::string, SectionFn>> s = {
      {"central-charge", check_central_charge}, {"tables", check_tables},
      {"levels", check_levels},                 {"verdicts", check_verdicts},
      {"c-values", check_c_values},             {"admissibility", check_admissibility},
      {"heights", check_heights},               {"h-mu", check_h_mu},
      {"properties", check_properties},
  };
  return s;
}

}  // namespace

const std::vector<std::string>& check_sections() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : sections()) v.push_back(name);
    return v;
  }();
  return names;
}

std::vector<CheckResult> run_checks(const std::optional<std::string>& section) {
  if (section && std::find(check_sections().begin(), check_sections().end(), *section) == check_sections().end()) {
    throw ParseError("unknown section '" + *section + "'");
  }
  std::vector<CheckResult> out;
  for (const auto& [name, fn] : sections()) {
    if (!section || *section == name) fn(out);
  }
  return out;
}

}  // namespace wkalg::cli
