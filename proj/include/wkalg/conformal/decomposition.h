#pragma once

#include <string>
#include <vector>

#include "wkalg/conformal/collapse.h"
#include "wkalg/errors.h"
#include "wkalg/walgebra/family.h"

namespace wkalg {

// Charge-l piece of W_k at k = k^(i)_{m,n}: L^{sl(n)}_{k1}(l omega_1) for
// l >= 0, L^{sl(n)}_{k1}(|l| omega_{n-1}) for l < 0, tensored with M(k0, l).
struct DecompSummand {
  int charge = 0;
  std::vector<int> sl_weight;  // fundamental-weight coordinates
  Rat heis_label;
  Rat top_weight_sl;  // Sugawara weight of the sl(n) top space
};

struct Decomposition {
  Rat k;
  CosetLevels coset;
  std::vector<DecompSummand> summands;  // charge ascending
  bool conditional_on_noncollapsing = true;
  std::vector<Annotation> notes;
};

// A hypothesis of the decomposition theorem fails; carries the condition
// and the result that governs the case instead.
class HypothesisError : public Error {
 public:
  HypothesisError(const std::string& condition, std::string cite)
      : Error("hypothesis fails: " + condition), condition_(condition), cite_(std::move(cite)) {}

  const std::string& condition() const { return condition_; }
  const std::string& cite() const { return cite_; }

 private:
  std::string condition_;
  std::string cite_;
};

/// Hooks with n >= 2, i in {1, 2}, range >= 0. Throws HypothesisError,
/// UnsupportedFamilyError or std::invalid_argument.
Decomposition decomposition(const FamilyParams& p, int i, int range);

/// Conformal weight of a primitive vector of weight omega_1 + omega_{n-1}
/// at k^(i): the closed forms m+1+(m+1)/(n-1) and m-m/(n+1).
Rat h_mu(const FamilyParams& p, int i);

/// The same weight as the Sugawara value of the adjoint at k1(k^(i)).
Rat h_mu_sugawara(const FamilyParams& p, int i);

}  // namespace wkalg
