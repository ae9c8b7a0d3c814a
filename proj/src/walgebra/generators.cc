#include "wkalg/walgebra/generators.h"

#include <map>

#include "wkalg/liealg/grading.h"

namespace wkalg {

std::string to_string(RepTag tag) {
  switch (tag) {
    case RepTag::Trivial: return "trivial";
    case RepTag::Vector: return "vector";
    case RepTag::Covector: return "covector";
    case RepTag::Adjoint: return "adjoint";
    case RepTag::AffinePart: return "affine";
    case RepTag::VirasoroPart: return "virasoro";
  }
  return "?";
}

namespace {

GeneratorSpec spec(const Rat& weight, RepTag tag, int mult, const Rat& charge = Rat(0)) {
  return GeneratorSpec{weight, RepLabel{tag, charge}, mult};
}

std::vector<GeneratorSpec> hook_generators(int m, int n) {
  if (m == 1) return {spec(Rat(1), RepTag::AffinePart, (n + 1) * (n + 1) - 1)};
  std::vector<GeneratorSpec> out;
  out.push_back(spec(Rat(1), RepTag::AffinePart, n * n));
  out.push_back(spec(Rat(2), RepTag::VirasoroPart, 1));
  for (int i = 3; i <= m; ++i) out.push_back(spec(Rat(i), RepTag::Trivial, 1));
  const Rat g_weight(m + 1, 2);
  out.push_back(spec(g_weight, RepTag::Vector, n, Rat(1)));
  out.push_back(spec(g_weight, RepTag::Covector, n, Rat(-1)));
  return out;
}

std::vector<GeneratorSpec> rectangular_generators(int q, int m) {
  const int adj = m * m - 1;
  std::vector<GeneratorSpec> out;
  out.push_back(spec(Rat(1), RepTag::AffinePart, adj));
  out.push_back(spec(Rat(2), RepTag::VirasoroPart, 1));
  // Each g^f_{-r} = gl(m) splits as sl(m) + the trace line; the degree-1
  // trace line is the Virasoro field.
  for (int i = 2; i <= q; ++i) {
    if (i >= 3) out.push_back(spec(Rat(i), RepTag::Trivial, 1));
    out.push_back(spec(Rat(i), RepTag::Adjoint, adj));
  }
  return out;
}

std::vector<GeneratorSpec> general_generators(const Partition& p) {
  const GradedDims dims = graded_dims(dynkin_grading(p));
  std::vector<GeneratorSpec> out;
  // gf keys are 2j for j <= 0, so descend from 0.
  for (auto it = dims.gf.rbegin(); it != dims.gf.rend(); ++it) {
    const auto [twice_j, dim] = *it;
    const Rat weight = Rat(-twice_j, 2) + Rat(1);
    if (twice_j == 0) {
      out.push_back(spec(weight, RepTag::AffinePart, dim));
    } else if (twice_j == -2) {
      out.push_back(spec(weight, RepTag::VirasoroPart, 1));
      if (dim > 1) out.push_back(spec(weight, RepTag::Trivial, dim - 1));
    } else {
      out.push_back(spec(weight, RepTag::Trivial, dim));
    }
  }
  return out;
}

}  // namespace

std::vector<GeneratorSpec> strong_generators(const FamilyParams& p) {
  switch (p.family()) {
    case Family::Hook: return hook_generators(p.m(), p.n());
    case Family::Rectangular: return rectangular_generators(p.q(), p.m());
    case Family::General: break;
  }
  return general_generators(p.partition());
}

std::string natural_algebra(const FamilyParams& p) {
  switch (p.family()) {
    case Family::Hook:
      if (p.m() == 1) return "sl(" + std::to_string(p.n() + 1) + ")";
      return "gl(" + std::to_string(p.n()) + ")";
    case Family::Rectangular:
      return "sl(" + std::to_string(p.m()) + ")";
    case Family::General:
      break;
  }
  // s(+_i gl(r_i)), r_i the number of blocks of each size.
  std::map<int, int> blocks;
  for (int part : p.partition().parts()) ++blocks[part];
  if (blocks.size() == 1) {
    const int r = blocks.begin()->second;
    return r == 1 ? "0" : "sl(" + std::to_string(r) + ")";
  }
  std::string s = "s(";
  bool first = true;
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    if (!first) s += "+";
    s += "gl(" + std::to_string(it->second) + ")";
    first = false;
  }
  return s + ")";
}

}  // namespace wkalg
