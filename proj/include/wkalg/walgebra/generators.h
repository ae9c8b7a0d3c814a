#pragma once

#include <string>
#include <vector>

#include "wkalg/exact/rat.h"
#include "wkalg/walgebra/family.h"

namespace wkalg {

enum class RepTag { Trivial, Vector, Covector, Adjoint, AffinePart, VirasoroPart };

std::string to_string(RepTag tag);

// g^natural-representation carried by a family of strong generators. The
// charge is the J(0)-eigenvalue for hooks (G^+ : +1, G^- : -1), else 0.
struct RepLabel {
  RepTag tag = RepTag::Trivial;
  Rat charge;

  friend bool operator==(const RepLabel&, const RepLabel&) = default;
};

struct GeneratorSpec {
  Rat weight;  // conformal weight
  RepLabel rep;
  int multiplicity = 1;

  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

/// Strong generators of W^k(sl(N), x, f), one spec per graded piece of g^f
/// (split by representation where the family fixes it). A piece g^f_{-j}
/// contributes generators of conformal weight j + 1.
std::vector<GeneratorSpec> strong_generators(const FamilyParams& p);

/// "gl(2)", "sl(3)", ... : the centralizer of the sl(2)-triple. For the zero
/// nilpotent this is sl(N) itself.
std::string natural_algebra(const FamilyParams& p);

}  // namespace wkalg
