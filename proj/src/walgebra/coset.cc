#include "wkalg/walgebra/coset.h"

#include "wkalg/errors.h"

namespace wkalg {

namespace {

void require_coset_family(const FamilyParams& p) {
  if (p.family() == Family::General) {
    throw UnsupportedFamilyError("no affine coset data for " + p.str() +
                                 "; only hooks and rectangles are supported");
  }
}

void require_noncritical(const FamilyParams& p, const Rat& k) {
  if (k == Rat(-p.h_vee())) {
    throw CriticalLevelError("critical level k = " + k.str() + " for sl(" +
                             std::to_string(p.h_vee()) + ")");
  }
}

}  // namespace

int coset_simple_rank(const FamilyParams& p) {
  require_coset_family(p);
  return p.is_hook() ? p.n() : p.m();
}

RationalFn coset_k1(const FamilyParams& p) {
  require_coset_family(p);
  const RationalFn k = RationalFn::var();
  if (p.is_hook()) return k + Rat(p.m() - 1);
  const Rat q(p.q());
  const Rat m(p.m());
  return k * q + (m * q * q - m * q);
}

RationalFn coset_k0(const FamilyParams& p) {
  if (!p.is_hook()) throw UnsupportedFamilyError("k0 exists only for hooks");
  return RationalFn::var() + Rat(static_cast<long long>(p.m() - 1) * (p.m() + p.n()), p.m());
}

CosetLevels coset_levels(const FamilyParams& p, const Rat& k) {
  require_coset_family(p);
  require_noncritical(p, k);
  CosetLevels out;
  out.k1 = coset_k1(p)(k);
  if (p.is_hook()) {
    out.k0 = coset_k0(p)(k);
    out.type = CosetType::GLn;
  } else {
    out.type = CosetType::SLm;
  }
  return out;
}

RationalFn coset_central_charge_symbolic(const FamilyParams& p, bool heisenberg) {
  const int rank = coset_simple_rank(p);
  RationalFn c;
  if (rank >= 2) {
    const RationalFn k1 = coset_k1(p);
    c = k1 * Rat(rank * rank - 1) / (k1 + Rat(rank));
  }
  if (p.is_hook() && heisenberg) c += Rat(1);
  return c;
}

Rat coset_central_charge(const FamilyParams& p, const Rat& k) {
  const CosetLevels levels = coset_levels(p, k);
  const int rank = coset_simple_rank(p);
  Rat c;
  if (rank >= 2) {
    const Rat shifted = levels.k1 + Rat(rank);
    if (shifted.is_zero()) {
      throw CriticalLevelError("coset sl(" + std::to_string(rank) + ") is critical at k = " + k.str());
    }
    c = levels.k1 * Rat(rank * rank - 1) / shifted;
  }
  if (levels.k0 && !levels.k0->is_zero()) c += Rat(1);
  return c;
}

}  // namespace wkalg
