#include "wkalg/conformal/collapse.h"

#include <algorithm>

#include "wkalg/conformal/admissible.h"
#include "wkalg/liealg/weights.h"

namespace wkalg {

std::string to_string(CollapseStatus s) {
  switch (s) {
    case CollapseStatus::StronglyCollapsing: return "StronglyCollapsing";
    case CollapseStatus::NotStronglyCollapsing: return "NotStronglyCollapsing";
    case CollapseStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

Rat hook_g_c_value(const FamilyParams& p, const Rat& k) {
  const CosetLevels levels = coset_levels(p, k);
  const int m = p.m();
  const int n = p.n();
  Rat c;
  if (!levels.k0->is_zero()) c += Rat(m + n, 2 * m * n) / *levels.k0;
  if (n >= 2) c += sugawara_h(n, levels.k1, fundamental_weight(n, 1));
  return c;
}

Rat rectangular_adjoint_c_value(const FamilyParams& p, const Rat& k) {
  const CosetLevels levels = coset_levels(p, k);
  return sugawara_h(p.m(), levels.k1, adjoint_weight(p.m()));
}

namespace {

std::string level_str(const Rat& k) { return k.str(); }

std::string hook_target(const FamilyParams& p, const CosetLevels& levels) {
  std::vector<std::string> factors;
  // The simple affine quotient at level 0 is the trivial algebra.
  if (p.n() >= 2 && !levels.k1.is_zero()) {
    factors.push_back("V_{" + level_str(levels.k1) + "}(sl(" + std::to_string(p.n()) + "))");
  }
  if (!levels.k0->is_zero()) factors.push_back("M(" + levels.k0->str() + ")");
  if (factors.empty()) return "C";
  std::string s = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) s += " ⊗ " + factors[i];
  return s;
}

std::vector<CValue> hook_c_values(const FamilyParams& p, const Rat& k) {
  std::vector<CValue> out;
  const int m = p.m();
  for (int i = 3; i <= m; ++i) {
    out.push_back({"W_" + std::to_string(i), RepLabel{RepTag::Trivial, Rat(0)}, Rat(i), Rat(0), 1});
  }
  // For m = 1 the off-diagonal blocks of sl(n+1) play the role of G^+-.
  const Rat delta(m + 1, 2);
  const Rat c = hook_g_c_value(p, k);
  out.push_back({"G^+", RepLabel{RepTag::Vector, Rat(1)}, delta, c, p.n()});
  out.push_back({"G^-", RepLabel{RepTag::Covector, Rat(-1)}, delta, c, p.n()});
  return out;
}

std::vector<CValue> rectangular_c_values(const FamilyParams& p, const Rat& k) {
  std::vector<CValue> out;
  const Rat c = rectangular_adjoint_c_value(p, k);
  const int adj = p.m() * p.m() - 1;
  for (const GeneratorSpec& g : strong_generators(p)) {
    const RepTag tag = g.rep.tag;
    if (tag == RepTag::AffinePart || tag == RepTag::VirasoroPart) continue;
    const std::string wt = g.weight.str();
    if (tag == RepTag::Adjoint) {
      out.push_back({"J_" + wt + "(adj)", g.rep, g.weight, c, adj});
    } else {
      out.push_back({"W_" + wt, g.rep, g.weight, Rat(0), g.multiplicity});
    }
  }
  return out;
}

void annotate_hook(const FamilyParams& p, Verdict& v) {
  const int m = p.m();
  const int n = p.n();
  const ConformalLevel& lvl = v.level;
  const bool h1 = lvl.has_tag(LevelTag::H1);
  const bool h2 = lvl.has_tag(LevelTag::H2);
  if (h1 || h2) {
    v.status = CollapseStatus::NotStronglyCollapsing;
    v.notes.push_back({"C(G^+-) = (m+1)/2 = Delta: not strongly collapsing", "Theorem collnc"});
  }
  if (h1) {
    v.notes.push_back({"expected never collapsing at k^(1)", "Conjecture non-coll-1"});
    if (n == 2) {
      v.notes.push_back({"W_k = R^(" + std::to_string(m + 1) + "), not collapsing", "Theorem rp"});
    }
  }
  if (h2 && n == 2 && m % 3 == 0) {
    const int pp = m / 3;
    v.notes.push_back({"collapsing though not strongly: W_k = V_{" + Rat(-2 * pp + 1, pp).str() +
                           "}(sl(2)) ⊗ M(" + v.coset.k0->str() + ")",
                       "Prop. collapsing-3p2"});
  }
  if ((h1 || h2) && admissibility(p, lvl.k).admissible) {
    v.notes.push_back({"admissible, hence not collapsing", "Theorem non-collapsing-admissible"});
  }
  if (v.status == CollapseStatus::StronglyCollapsing) {
    if (lvl.has_tag(LevelTag::H3) || lvl.has_tag(LevelTag::H4)) {
      v.notes.push_back({"strongly collapsing", "Theorem coll"});
    }
  }
}

void annotate_rectangular(const FamilyParams& p, Verdict& v) {
  const ConformalLevel& lvl = v.level;
  if (v.status == CollapseStatus::StronglyCollapsing) {
    v.notes.push_back({"W_k = " + v.target, "Theorem collapsing-rectangular"});
  }
  if (lvl.has_tag(LevelTag::R2) && p.m() == 2) {
    v.notes.push_back({"C = m/(m-1) = 2 meets the weight-2 adjoint generators; collapsing is open here",
                       "Theorem collapsing-rectangular (excluded case k^[2]_{2,q})"});
    if (p.q() == 2) {
      v.notes.push_back({"k = -5/2 for sl(4), f_sh is known not to be collapsing",
                         "Remark after Theorem collapsing-rectangular"});
    }
  }
  if (lvl.has_tag(LevelTag::R2)) {
    v.notes.push_back({"k^[2] is never admissible", "Remark after Theorem collapsing-rectangular"});
  }
}

}  // namespace

Verdict collapse_check(const FamilyParams& p, const Rat& k) {
  Verdict v;
  v.level = require_conformal(p, k);
  v.coset = coset_levels(p, k);
  v.c_values = p.is_hook() ? hook_c_values(p, k) : rectangular_c_values(p, k);

  const bool strong = std::none_of(v.c_values.begin(), v.c_values.end(),
                                   [](const CValue& cv) { return cv.saturated(); });
  if (strong) {
    v.status = CollapseStatus::StronglyCollapsing;
    v.target = p.is_hook()
                   ? hook_target(p, v.coset)
                   : "V_{" + v.coset.k1.str() + "}(sl(" + std::to_string(p.m()) + "))";
    v.notes.push_back({"C != Delta for every generator outside the affine and Virasoro lines",
                       "Theorem Criterion2"});
  } else {
    v.status = CollapseStatus::Inconclusive;
  }

  if (p.is_hook()) {
    annotate_hook(p, v);
  } else {
    annotate_rectangular(p, v);
  }
  return v;
}

}  // namespace wkalg
