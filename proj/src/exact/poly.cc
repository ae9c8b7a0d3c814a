#include "wkalg/exact/poly.h"

#include <algorithm>
#include <sstream>

#include "wkalg/errors.h"

namespace wkalg {

namespace {

using IntPoly = std::vector<BigInt>;

void trim_int(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

// Primitive part with positive leading coefficient.
IntPoly primitive_part(IntPoly p) {
  trim_int(p);
  if (p.empty()) return p;
  BigInt g = content(p);
  if (p.back() < 0) g = -g;
  for (auto& c : p) c /= g;
  return p;
}

// lc(b)^e * a mod b, one leading term at a time. Only the primitive part of
// the result is used, so the exact power of lc(b) does not matter.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const BigInt& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    BigInt la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim_int(a);
  }
  return a;
}

// Divides out the linear factor (den*x - num), which must divide p exactly.
IntPoly deflate(const IntPoly& p, const BigInt& num, const BigInt& den) {
  const std::size_t n = p.size() - 1;
  IntPoly s(n);
  s[n - 1] = p[n] / den;
  for (std::size_t i = n - 1; i >= 1; --i) s[i - 1] = (p[i] + num * s[i]) / den;
  return s;
}

bool is_root(const IntPoly& p, const BigInt& num, const BigInt& den) {
  // sum p_i num^i den^(n-i), Horner in homogeneous form.
  BigInt acc = 0;
  BigInt den_pow = 1;
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = acc * num + p[i] * den_pow;
    den_pow *= den;
  }
  return acc == 0;
}

std::vector<BigInt> positive_divisors(BigInt n) {
  n = boost::multiprecision::abs(n);
  std::vector<std::pair<BigInt, int>> factors;
  for (BigInt d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    factors.emplace_back(d, e);
  }
  if (n > 1) factors.emplace_back(n, 1);

  std::vector<BigInt> divisors{1};
  for (const auto& [prime, exp] : factors) {
    const std::size_t count = divisors.size();
    BigInt power = 1;
    for (int e = 1; e <= exp; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < count; ++i) divisors.push_back(divisors[i] * power);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

}  // namespace

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(const Rat& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Poly Poly::x() { return monomial(Rat(1), 1); }

Poly Poly::monomial(const Rat& coeff, int degree) {
  if (coeff.is_zero()) return Poly();
  std::vector<Rat> c(static_cast<std::size_t>(degree) + 1);
  c.back() = coeff;
  return Poly(std::move(c));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rat Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rat(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Rat Poly::operator()(const Rat& at) const {
  Rat acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  Poly q;
  Poly r = a;
  const Rat lead_inv = b.leading().inverse();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    Poly term = monomial(r.leading() * lead_inv, r.degree() - b.degree());
    q += term;
    r -= term * b;
  }
  return {q, r};
}

std::vector<BigInt> Poly::primitive_integer() const {
  if (is_zero()) return {};
  BigInt lcm = 1;
  for (const auto& c : coeffs_) lcm = lcm / gcd(lcm, c.den()) * c.den();
  IntPoly out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.num() * (lcm / c.den()));
  return primitive_part(std::move(out));
}

Poly Poly::from_integer(const std::vector<BigInt>& coeffs) {
  std::vector<Rat> c;
  c.reserve(coeffs.size());
  for (const auto& v : coeffs) c.emplace_back(v, 1);
  return Poly(std::move(c));
}

std::string Poly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rat c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    c = c.abs();
    if (i == 0) {
      os << c;
    } else {
      if (c != Rat(1)) os << c << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
  IntPoly x = a.primitive_integer();
  IntPoly y = b.primitive_integer();
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    IntPoly r = primitive_part(pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return Poly::from_integer(x).monic();
}

std::vector<RationalRoot> rational_roots(const Poly& p) {
  if (p.is_zero()) throw ZeroPolynomialError("rational_roots of the zero polynomial");
  IntPoly q = p.primitive_integer();

  std::vector<RationalRoot> roots;
  std::size_t zeros = 0;
  while (zeros < q.size() && q[zeros] == 0) ++zeros;
  if (zeros > 0) {
    roots.push_back({Rat(0), static_cast<int>(zeros)});
    q.erase(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(zeros));
  }

  if (q.size() > 1) {
    // Any root num/den in lowest terms has num | q_0 and den | q_n.
    const auto nums = positive_divisors(q.front());
    const auto dens = positive_divisors(q.back());
    for (const auto& d : dens) {
      for (const auto& a : nums) {
        if (gcd(a, d) != 1) continue;
        for (const BigInt& num : {BigInt(a), BigInt(-a)}) {
          int mult = 0;
          while (q.size() > 1 && is_root(q, num, d)) {
            q = deflate(q, num, d);
            ++mult;
          }
          if (mult > 0) roots.push_back({Rat(num, d), mult});
        }
        if (q.size() <= 1) break;
      }
      if (q.size() <= 1) break;
    }
  }

  std::sort(roots.begin(), roots.end(),
            [](const RationalRoot& l, const RationalRoot& r) { return l.value < r.value; });
  return roots;
}

}  // namespace wkalg
