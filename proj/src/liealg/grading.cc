#include "wkalg/liealg/grading.h"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace wkalg {

std::vector<Rat> DynkinGrading::eigenvalues() const {
  std::vector<Rat> out;
  out.reserve(twice_eigenvalues.size());
  for (int t : twice_eigenvalues) out.emplace_back(t, 2);
  return out;
}

int GradedDims::g_at(int twice_j) const {
  auto it = g.find(twice_j);
  return it == g.end() ? 0 : it->second;
}

int GradedDims::gf_at(int twice_j) const {
  auto it = gf.find(twice_j);
  return it == gf.end() ? 0 : it->second;
}

int GradedDims::total_g() const {
  int s = 0;
  for (const auto& [j, d] : g) s += d;
  return s;
}

int GradedDims::total_gf() const {
  int s = 0;
  for (const auto& [j, d] : gf) s += d;
  return s;
}

DynkinGrading dynkin_grading(const Partition& p) {
  DynkinGrading out;
  for (int part : p.parts()) {
    for (int t = part - 1; t >= -(part - 1); t -= 2) out.twice_eigenvalues.push_back(t);
  }
  std::sort(out.twice_eigenvalues.begin(), out.twice_eigenvalues.end(), std::greater<>());
  for (std::size_t i = 0; i + 1 < out.twice_eigenvalues.size(); ++i) {
    out.labels.emplace_back(out.twice_eigenvalues[i] - out.twice_eigenvalues[i + 1], 2);
  }
  return out;
}

GradedDims graded_dims(const DynkinGrading& grading) {
  GradedDims out;
  // Multiplicity of each doubled eigenvalue; pairs are counted in bulk.
  std::map<int, int> mult;
  for (int t : grading.twice_eigenvalues) ++mult[t];
  for (const auto& [u, mu] : mult) {
    for (const auto& [v, mv] : mult) out.g[u - v] += mu * mv;
  }
  out.g[0] -= 1;
  for (auto it = out.g.begin(); it != out.g.end();) {
    it = it->second == 0 ? out.g.erase(it) : std::next(it);
  }
  for (const auto& [j, d] : out.g) {
    if (j > 0) continue;
    int gf = d - out.g_at(j - 2);
    if (gf != 0) out.gf[j] = gf;
  }
  return out;
}

Rat x_norm(const DynkinGrading& grading) {
  long long s = 0;
  for (int t : grading.twice_eigenvalues) s += static_cast<long long>(t) * t;
  return Rat(s) / Rat(4);
}

Rat theta_pairing(const DynkinGrading& grading) {
  const auto& e = grading.twice_eigenvalues;
  return Rat(e.front() - e.back(), 2);
}

HeightInfo height_and_np(const Partition& p, int pp) {
  if (pp < 1) throw std::invalid_argument("N_p needs p >= 1");
  DynkinGrading g = dynkin_grading(p);
  // theta(2x) = 2 (x_max - x_min); in doubled units that is t_max - t_min.
  HeightInfo out;
  out.height = g.twice_eigenvalues.front() - g.twice_eigenvalues.back();
  out.in_np = out.height < 2 * pp;
  return out;
}

HookGoodGrading hook_good_grading(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("hook needs m, n >= 1");
  HookGoodGrading out;
  const Rat top(static_cast<long long>(m + 2 * n) * (m - 1), 2 * (m + n));
  for (int i = 0; i < m; ++i) out.eigenvalues.push_back(top - Rat(i));
  const Rat tail(-static_cast<long long>(m) * (m - 1), 2 * (m + n));
  for (int i = 0; i < n; ++i) out.eigenvalues.push_back(tail);

  out.even = true;
  int zero_pairs = 0;
  for (const auto& u : out.eigenvalues) {
    for (const auto& v : out.eigenvalues) {
      Rat d = u - v;
      if (!d.is_integer()) out.even = false;
      if (d.is_zero()) ++zero_pairs;
    }
  }
  out.dim_g0 = zero_pairs - 1;
  return out;
}

bool hook_good_grading_consistent(int m, int n) {
  HookGoodGrading good = hook_good_grading(m, n);
  GradedDims dyn = graded_dims(dynkin_grading(Partition::hook(m, n)));
  return good.even && good.dim_g0 == dyn.total_gf();
}

}  // namespace wkalg
