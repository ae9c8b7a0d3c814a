#pragma once

#include <optional>

#include "wkalg/exact/rat.h"
#include "wkalg/walgebra/family.h"

namespace wkalg {

// k + h^vee = p_prime / p in lowest terms (p > 0). Admissible iff
// p_prime >= h^vee, and then d_kW = (p_prime + 1 - h^vee)(p - (h_theta|x)).
struct AdmissibleForm {
  BigInt p_prime;
  BigInt p;
  bool admissible = false;
  Rat theta_x;  // (h_theta|x)
  std::optional<Rat> d_kW;
};

/// Throws CriticalLevelError at k = -h^vee.
AdmissibleForm admissibility(const FamilyParams& p, const Rat& k);

}  // namespace wkalg
