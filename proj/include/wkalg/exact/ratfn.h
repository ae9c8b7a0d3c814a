#pragma once

#include <string>
#include <string_view>

#include "wkalg/exact/poly.h"

namespace wkalg {

// Ratio of polynomials in one indeterminate (the level k). Kept reduced:
// gcd(num, den) = 1 and den monic, so structurally equal functions have
// identical fields.
class RationalFn {
 public:
  RationalFn() : den_(Rat(1)) {}
  RationalFn(const Rat& constant) : num_(constant), den_(Rat(1)) {}  // NOLINT
  explicit RationalFn(Poly num, Poly den = Poly(Rat(1)));

  /// The indeterminate k as a rational function.
  static RationalFn var();

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool has_pole_at(const Rat& k) const { return den_(k).is_zero(); }

  /// Exact value at k; throws PoleError when den(k) = 0.
  Rat operator()(const Rat& k) const;

  RationalFn operator-() const;
  RationalFn& operator+=(const RationalFn& o);
  RationalFn& operator-=(const RationalFn& o);
  RationalFn& operator*=(const RationalFn& o);
  RationalFn& operator/=(const RationalFn& o);

  friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
  friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
  friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
  friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }

  std::string str(std::string_view var = "k") const;

 private:
  void reduce();

  Poly num_;
  Poly den_;
};

/// num(f)*den(g) == num(g)*den(f) as polynomials.
bool equivalent(const RationalFn& f, const RationalFn& g);

}  // namespace wkalg
