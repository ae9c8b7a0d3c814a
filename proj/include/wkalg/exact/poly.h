#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wkalg/exact/rat.h"

namespace wkalg {

// Univariate polynomial over Q. Coefficients ascend by degree; trailing
// zeros are stripped so the zero polynomial has an empty coefficient list.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  explicit Poly(const Rat& constant);

  /// The indeterminate itself.
  static Poly x();
  static Poly monomial(const Rat& coeff, int degree);

  const std::vector<Rat>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rat leading() const { return is_zero() ? Rat(0) : coeffs_.back(); }
  Rat coeff(int i) const;

  Rat operator()(const Rat& at) const;

  Poly monic() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) = default;

  /// Euclidean division over Q: a = q*b + r with deg r < deg b.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

  /// Integer coefficients of c*p for the unique c in Q making them coprime
  /// with a positive leading entry. Empty for the zero polynomial.
  std::vector<BigInt> primitive_integer() const;
  static Poly from_integer(const std::vector<BigInt>& coeffs);

  std::string str(std::string_view var = "k") const;

 private:
  void trim();

  std::vector<Rat> coeffs_;
};

/// Monic gcd, computed by a primitive pseudo-remainder sequence on the
/// integer-cleared inputs. gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

struct RationalRoot {
  Rat value;
  int multiplicity = 1;

  friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

/// Every rational root of p with multiplicity, ascending by value.
/// Throws ZeroPolynomialError for p = 0.
std::vector<RationalRoot> rational_roots(const Poly& p);

}  // namespace wkalg
