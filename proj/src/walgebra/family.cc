#include "wkalg/walgebra/family.h"

#include <algorithm>
#include <stdexcept>

namespace wkalg {

FamilyParams FamilyParams::hook(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("hook(m, n) needs m >= 1 and n >= 1");
  return FamilyParams(Family::Hook, Partition::hook(m, n), m, n, 0);
}

FamilyParams FamilyParams::rectangular(int q, int m) {
  if (q < 2 || m < 2) throw std::invalid_argument("rect(q, m) needs q >= 2 and m >= 2");
  return FamilyParams(Family::Rectangular, Partition::rectangular(q, m), m, 0, q);
}

FamilyParams FamilyParams::general(const Partition& p) {
  return FamilyParams(Family::General, p, 0, 0, 0);
}

FamilyParams FamilyParams::classify(const Partition& p) {
  const auto& parts = p.parts();
  const bool tail_ones = std::all_of(parts.begin() + 1, parts.end(), [](int x) { return x == 1; });
  if (parts.size() >= 2 && tail_ones) {
    return hook(parts.front(), static_cast<int>(parts.size()) - 1);
  }
  const bool all_equal = std::all_of(parts.begin(), parts.end(), [&](int x) { return x == parts.front(); });
  if (parts.size() >= 2 && all_equal && parts.front() >= 2) {
    return rectangular(parts.front(), static_cast<int>(parts.size()));
  }
  return general(p);
}

std::string FamilyParams::str() const {
  switch (family_) {
    case Family::Hook:
      return "hook(m=" + std::to_string(m_) + ", n=" + std::to_string(n_) + ")";
    case Family::Rectangular:
      return "rect(q=" + std::to_string(q_) + ", m=" + std::to_string(m_) + ")";
    case Family::General:
      break;
  }
  return "partition(" + partition_.str() + ")";
}

}  // namespace wkalg
