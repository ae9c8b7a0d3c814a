#pragma once

#include <optional>

#include "wkalg/exact/ratfn.h"
#include "wkalg/walgebra/family.h"

namespace wkalg {

enum class CosetType { GLn, SLm };

// Levels of the affine subalgebra V(g^natural) inside the W-algebra.
// Hooks: g^natural = gl(n) = C varpi + sl(n) with
//   k0 = k + (m-1)(m+n)/m,  k1 = k + m - 1.
// Rectangles: g^natural = sl(m) with k1 = q k + m q^2 - m q and no k0.
struct CosetLevels {
  std::optional<Rat> k0;
  Rat k1;
  CosetType type = CosetType::GLn;
};

/// Throws CriticalLevelError at k = -h^vee and UnsupportedFamilyError for
/// partitions outside the hook and rectangular families.
CosetLevels coset_levels(const FamilyParams& p, const Rat& k);

/// Sugawara central charge of the affine subalgebra at level k, adding the
/// Heisenberg 1 exactly when k0 != 0. Throws CriticalLevelError when the
/// simple factor sits at its critical level (k1 = -n, resp. -m).
Rat coset_central_charge(const FamilyParams& p, const Rat& k);

/// The same charge as a function of k on one branch: heisenberg = true is
/// the k0 != 0 branch (always true for rectangles, which have no k0).
RationalFn coset_central_charge_symbolic(const FamilyParams& p, bool heisenberg = true);

/// k0 and k1 as functions of k.
RationalFn coset_k1(const FamilyParams& p);
RationalFn coset_k0(const FamilyParams& p);  // hooks only

/// Rank of the simple part: n for hooks, m for rectangles.
int coset_simple_rank(const FamilyParams& p);

}  // namespace wkalg
