#pragma once

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace wkalg {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Always held in lowest terms with a positive
/// denominator, so two equal values have identical fields.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  template <std::integral I>
  Rat(I value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rat(BigInt num, BigInt den);

  /// Accepts "p", "-p", "+p" and "p/q" with decimal integers.
  static Rat parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  Rat abs() const;
  Rat inverse() const;

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

BigInt gcd(const BigInt& a, const BigInt& b);

}  // namespace wkalg
