#include "wkalg/conformal/levels.h"

#include <algorithm>
#include <stdexcept>

#include "wkalg/exact/poly.h"
#include "wkalg/walgebra/central_charge.h"
#include "wkalg/walgebra/coset.h"

namespace wkalg {

std::string to_string(LevelTag tag) {
  switch (tag) {
    case LevelTag::H1: return "H1";
    case LevelTag::H2: return "H2";
    case LevelTag::H3: return "H3";
    case LevelTag::H4: return "H4";
    case LevelTag::R1: return "R1";
    case LevelTag::R2: return "R2";
    case LevelTag::R3: return "R3";
  }
  return "?";
}

bool ConformalLevel::has_tag(LevelTag t) const {
  return std::find(tags.begin(), tags.end(), t) != tags.end();
}

std::vector<std::pair<LevelTag, Rat>> closed_form_levels(const FamilyParams& p) {
  std::vector<std::pair<LevelTag, Rat>> out;
  if (p.is_hook()) {
    const long long m = p.m();
    const long long h = p.h_vee();
    if (p.n() > 1) out.emplace_back(LevelTag::H1, Rat(-m * h, m + 1));
    out.emplace_back(LevelTag::H2, Rat(-((m - 1) * h - 1), m));
    if (m > 1) out.emplace_back(LevelTag::H3, Rat(-((m - 2) * h + 1), m - 1));
    out.emplace_back(LevelTag::H4, Rat(-(m - 1) * h, m));
  } else if (p.is_rectangular()) {
    const long long m = p.m();
    const long long q = p.q();
    out.emplace_back(LevelTag::R1, Rat(-m * q * q, q + 1));
    out.emplace_back(LevelTag::R2, Rat(-m * q * q + m * q - 1, q));
    out.emplace_back(LevelTag::R3, Rat(-m * q * q + m * q + 1, q));
  }
  return out;
}

std::vector<LevelTag> tags_at(const FamilyParams& p, const Rat& k) {
  std::vector<LevelTag> tags;
  for (const auto& [tag, value] : closed_form_levels(p)) {
    if (value == k) tags.push_back(tag);
  }
  return tags;
}

std::vector<ConformalLevel> conformal_levels(const FamilyParams& p) {
  if (p.family() == Family::General) {
    throw UnsupportedFamilyError("conformal levels need a hook or rectangular nilpotent, got " + p.str());
  }
  const RationalFn c_w = central_charge(p);
  const RationalFn c_generic = coset_central_charge_symbolic(p, true);
  const Rat critical(-p.h_vee());

  std::vector<ConformalLevel> out;
  const RationalFn diff = c_w - c_generic;
  if (diff.is_zero()) throw std::logic_error("central charges agree identically for " + p.str());

  for (const auto& root : rational_roots(diff.num())) {
    const Rat& k = root.value;
    if (k == critical || c_w.has_pole_at(k) || c_generic.has_pole_at(k)) continue;
    // The generic branch assumes a nondegenerate Heisenberg factor.
    if (p.is_hook() && coset_k0(p)(k).is_zero()) continue;
    if (c_w(k) != c_generic(k)) continue;
    out.push_back({k, Branch::Generic, {}});
  }

  if (p.is_hook()) {
    // k0 = 0 is an isolated candidate: the Heisenberg term drops there.
    const Rat k(-static_cast<long long>(p.m() - 1) * p.h_vee(), p.m());
    const RationalFn c_degenerate = coset_central_charge_symbolic(p, false);
    if (k != critical && !c_w.has_pole_at(k) && !c_degenerate.has_pole_at(k) &&
        c_w(k) == c_degenerate(k)) {
      out.push_back({k, Branch::Degenerate, {}});
    }
  }

  std::sort(out.begin(), out.end(),
            [](const ConformalLevel& a, const ConformalLevel& b) { return a.k < b.k; });
  for (auto& level : out) level.tags = tags_at(p, level.k);
  return out;
}

ConformalLevel require_conformal(const FamilyParams& p, const Rat& k) {
  if (p.family() == Family::General) {
    throw UnsupportedFamilyError("conformal analysis needs a hook or rectangular nilpotent, got " + p.str());
  }
  std::optional<Rat> c_w;
  std::optional<Rat> c_coset;
  const RationalFn c = central_charge(p);
  if (!c.has_pole_at(k)) c_w = c(k);
  try {
    c_coset = coset_central_charge(p, k);
  } catch (const CriticalLevelError&) {
  }
  if (!c_w || !c_coset || *c_w != *c_coset) {
    std::string what = "k = " + k.str() + " is not a conformal level of " + p.str() + ": c = " +
                       (c_w ? c_w->str() : "undefined") + ", c_natural = " +
                       (c_coset ? c_coset->str() : "undefined");
    throw NotConformalError(what, c_w, c_coset);
  }
  ConformalLevel level{k, Branch::Generic, tags_at(p, k)};
  if (p.is_hook() && coset_k0(p)(k).is_zero()) level.branch = Branch::Degenerate;
  return level;
}

}  // namespace wkalg
