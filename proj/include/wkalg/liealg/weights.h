#pragma once

#include <span>
#include <vector>

#include "wkalg/exact/rat.h"

namespace wkalg {

// sl(n) weights are given by their n-1 coordinates in the fundamental-weight
// basis, with the normalization (theta|theta) = 2.

std::vector<int> fundamental_weight(int n, int i, int multiple = 1);
/// omega_1 + omega_{n-1} (2 omega_1 when n = 2).
std::vector<int> adjoint_weight(int n);

/// (lambda, lambda + 2 rho). Throws DimensionError when the weight does not
/// have n-1 entries and std::invalid_argument when n < 2.
Rat casimir_sl(int n, std::span<const int> weight);

/// Sugawara L(0) eigenvalue on the top of the level-k module of highest
/// weight lambda: casimir / (2(k + n)). Throws CriticalLevelError at k = -n.
Rat sugawara_h(int n, const Rat& k, std::span<const int> weight);

}  // namespace wkalg
