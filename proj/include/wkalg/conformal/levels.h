#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wkalg/errors.h"
#include "wkalg/exact/rat.h"
#include "wkalg/walgebra/family.h"

namespace wkalg {

// Closed-form conformal levels: H1..H4 are k^(1..4)_{m,n} for hooks, R1..R3
// are k^[1..3]_{m,q} for rectangles.
enum class LevelTag { H1, H2, H3, H4, R1, R2, R3 };

std::string to_string(LevelTag tag);

// Generic: the Heisenberg factor is nondegenerate (k0 != 0, or no k0 at
// all). Degenerate: k0 = 0.
enum class Branch { Generic, Degenerate };

struct ConformalLevel {
  Rat k;
  Branch branch = Branch::Generic;
  std::vector<LevelTag> tags;  // several when closed forms coincide

  bool has_tag(LevelTag t) const;
};

/// The displayed closed forms that apply to p, honoring their side
/// conditions (H1 needs n > 1, H3 needs m > 1). Coincident values appear
/// once per tag.
std::vector<std::pair<LevelTag, Rat>> closed_form_levels(const FamilyParams& p);

/// Every level at which the affine subalgebra embeds conformally, solved
/// from the central charges, ascending by k. Hooks and rectangles only;
/// throws UnsupportedFamilyError otherwise.
std::vector<ConformalLevel> conformal_levels(const FamilyParams& p);

/// Closed-form tags whose value equals k.
std::vector<LevelTag> tags_at(const FamilyParams& p, const Rat& k);

class NotConformalError : public Error {
 public:
  NotConformalError(const std::string& what, std::optional<Rat> c_w, std::optional<Rat> c_coset)
      : Error(what), c_w_(std::move(c_w)), c_coset_(std::move(c_coset)) {}

  /// Central charge of the W-algebra (absent at a pole).
  const std::optional<Rat>& c_w() const { return c_w_; }
  /// Sugawara charge of the affine subalgebra (absent at a coset pole).
  const std::optional<Rat>& c_coset() const { return c_coset_; }

 private:
  std::optional<Rat> c_w_;
  std::optional<Rat> c_coset_;
};

/// Checks that k is a conformal level of p and classifies it. Throws
/// NotConformalError otherwise.
ConformalLevel require_conformal(const FamilyParams& p, const Rat& k);

}  // namespace wkalg
