#pragma once

#include "wkalg/exact/ratfn.h"
#include "wkalg/liealg/partition.h"
#include "wkalg/walgebra/family.h"

namespace wkalg {

/// Central charge of W^k(sl(N), x, f) as a function of k, from the graded
/// dimensions of the Dynkin grading:
///   k dim g/(k + N) - 12 k (x|x) - sum_{j>0} dim g_j (12 j^2 - 12 j + 2)
///   - dim g_{1/2} / 2.
RationalFn central_charge(const Partition& p);
RationalFn central_charge(const FamilyParams& p);

/// Closed form for the hook (m, 1^n).
RationalFn hook_central_charge_closed(int m, int n);

/// Closed form for the rectangle (q^m).
RationalFn rectangular_central_charge_closed(int q, int m);

}  // namespace wkalg
