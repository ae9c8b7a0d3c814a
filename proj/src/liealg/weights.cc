#include "wkalg/liealg/weights.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "wkalg/errors.h"

namespace wkalg {

std::vector<int> fundamental_weight(int n, int i, int multiple) {
  if (n < 2 || i < 1 || i > n - 1) throw std::invalid_argument("no such fundamental weight");
  std::vector<int> w(static_cast<std::size_t>(n - 1), 0);
  w[static_cast<std::size_t>(i - 1)] = multiple;
  return w;
}

std::vector<int> adjoint_weight(int n) {
  std::vector<int> w = fundamental_weight(n, 1);
  w.back() += 1;
  return w;
}

Rat casimir_sl(int n, std::span<const int> weight) {
  if (n < 2) throw std::invalid_argument("sl(n) needs n >= 2");
  if (weight.size() != static_cast<std::size_t>(n - 1)) {
    throw DimensionError("sl(" + std::to_string(n) + ") weight needs " + std::to_string(n - 1) +
                         " coordinates, got " + std::to_string(weight.size()));
  }
  // (omega_i, omega_j) = min(i,j) - ij/n; rho has every coordinate 1.
  Rat total;
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      const int li = weight[static_cast<std::size_t>(i - 1)];
      const int lj = weight[static_cast<std::size_t>(j - 1)];
      if (li == 0) continue;
      Rat pairing = Rat(std::min(i, j)) - Rat(i * j, n);
      total += Rat(li) * Rat(lj + 2) * pairing;
    }
  }
  return total;
}

Rat sugawara_h(int n, const Rat& k, std::span<const int> weight) {
  Rat shifted = k + Rat(n);
  if (shifted.is_zero()) {
    throw CriticalLevelError("critical level k = " + k.str() + " for sl(" + std::to_string(n) + ")");
  }
  return casimir_sl(n, weight) / (Rat(2) * shifted);
}

}  // namespace wkalg
