#pragma once

#include <string>
#include <vector>

#include "wkalg/conformal/levels.h"
#include "wkalg/walgebra/coset.h"
#include "wkalg/walgebra/generators.h"

namespace wkalg {

enum class CollapseStatus { StronglyCollapsing, NotStronglyCollapsing, Inconclusive };

std::string to_string(CollapseStatus s);

// One generator family outside the affine and Virasoro lines: its Sugawara
// weight C under the affine subalgebra against its conformal weight.
struct CValue {
  std::string name;  // "W_3", "G^+", "J_2(adj)", ...
  RepLabel rep;
  Rat delta;
  Rat c;
  int multiplicity = 1;

  bool saturated() const { return c == delta; }
};

struct Annotation {
  std::string text;
  std::string cite;
};

struct Verdict {
  ConformalLevel level;
  CosetLevels coset;
  std::vector<CValue> c_values;
  CollapseStatus status = CollapseStatus::Inconclusive;
  std::string target;  // set only when strongly collapsing
  std::vector<Annotation> notes;
};

/// C for the hook G^+ / G^- family at level k (both share it).
Rat hook_g_c_value(const FamilyParams& p, const Rat& k);

/// C for a rectangular adjoint generator: Casimir / (2(k1 + m)).
Rat rectangular_adjoint_c_value(const FamilyParams& p, const Rat& k);

/// Classifies a conformal level. Throws NotConformalError when k is not
/// one, UnsupportedFamilyError outside hooks and rectangles.
Verdict collapse_check(const FamilyParams& p, const Rat& k);

}  // namespace wkalg
