#include "wkalg/conformal/decomposition.h"

#include <stdexcept>

#include "wkalg/conformal/admissible.h"
#include "wkalg/liealg/weights.h"

namespace wkalg {

namespace {

void require_case(const FamilyParams& p, int i) {
  if (!p.is_hook()) throw UnsupportedFamilyError("decomposition needs a hook, got " + p.str());
  if (p.n() < 2) throw std::invalid_argument("decomposition needs n >= 2, got " + p.str());
  if (i != 1 && i != 2) throw std::invalid_argument("case must be 1 or 2");
}

Rat level_of_case(const FamilyParams& p, int i) {
  const LevelTag want = i == 1 ? LevelTag::H1 : LevelTag::H2;
  for (const auto& [tag, value] : closed_form_levels(p)) {
    if (tag == want) return value;
  }
  throw std::logic_error("no closed-form level " + to_string(want) + " for " + p.str());
}

}  // namespace

Rat h_mu(const FamilyParams& p, int i) {
  require_case(p, i);
  const int m = p.m();
  const int n = p.n();
  if (i == 1) return Rat(m + 1) + Rat(m + 1, n - 1);
  return Rat(m) - Rat(m, n + 1);
}

Rat h_mu_sugawara(const FamilyParams& p, int i) {
  require_case(p, i);
  const CosetLevels levels = coset_levels(p, level_of_case(p, i));
  return sugawara_h(p.n(), levels.k1, adjoint_weight(p.n()));
}

Decomposition decomposition(const FamilyParams& p, int i, int range) {
  require_case(p, i);
  if (range < 0) throw std::invalid_argument("range must be >= 0");
  const int m = p.m();
  const int n = p.n();

  if (i == 1 && (m + 1) % (n - 1) == 0) {
    const std::string cond = "(m+1)/(n-1) = " + std::to_string((m + 1) / (n - 1)) + " is an integer";
    if (n == 2) {
      throw HypothesisError(cond + "; W_k = R^(" + std::to_string(m + 1) + ") and the decomposition is infinite",
                            "Theorem rp");
    }
    throw HypothesisError(cond, "Theorem decomp");
  }
  if (i == 2 && m % (n + 1) == 0) {
    const std::string cond = "m/(n+1) = " + std::to_string(m / (n + 1)) + " is an integer";
    if (n == 2 && m % 3 == 0) {
      throw HypothesisError(cond + "; the level is collapsing", "Prop. collapsing-3p2");
    }
    throw HypothesisError(cond, "Theorem decomp");
  }

  Decomposition out;
  out.k = level_of_case(p, i);
  out.coset = coset_levels(p, out.k);
  if (admissibility(p, out.k).admissible) {
    out.conditional_on_noncollapsing = false;
    out.notes.push_back({"admissible, hence not collapsing", "Theorem non-collapsing-admissible"});
  } else {
    out.notes.push_back({"conditional on non-collapsing",
                         i == 1 ? "Conjecture non-coll-1" : "Theorem decomp"});
  }
  out.notes.push_back({"h_mu = " + h_mu(p, i).str() + " is not an integer", "Theorem decomp"});

  for (int l = -range; l <= range; ++l) {
    DecompSummand s;
    s.charge = l;
    s.sl_weight = l >= 0 ? fundamental_weight(n, 1, l) : fundamental_weight(n, n - 1, -l);
    s.heis_label = Rat(l);
    s.top_weight_sl = sugawara_h(n, out.coset.k1, s.sl_weight);
    out.summands.push_back(std::move(s));
  }
  return out;
}

}  // namespace wkalg
