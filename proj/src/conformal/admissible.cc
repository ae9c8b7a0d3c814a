#include "wkalg/conformal/admissible.h"

#include "wkalg/errors.h"
#include "wkalg/liealg/grading.h"

namespace wkalg {

AdmissibleForm admissibility(const FamilyParams& p, const Rat& k) {
  const Rat shifted = k + Rat(p.h_vee());
  if (shifted.is_zero()) {
    throw CriticalLevelError("critical level k = " + k.str() + " for sl(" + std::to_string(p.h_vee()) + ")");
  }
  AdmissibleForm out;
  out.p_prime = shifted.num();
  out.p = shifted.den();
  out.theta_x = theta_pairing(dynkin_grading(p.partition()));
  out.admissible = out.p_prime >= p.h_vee();
  if (out.admissible) {
    out.d_kW = (Rat(out.p_prime, 1) + Rat(1 - p.h_vee())) * (Rat(out.p, 1) - out.theta_x);
  }
  return out;
}

}  // namespace wkalg
