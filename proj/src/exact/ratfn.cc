#include "wkalg/exact/ratfn.h"

#include "wkalg/errors.h"

namespace wkalg {

RationalFn::RationalFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
  reduce();
}

RationalFn RationalFn::var() { return RationalFn(Poly::x()); }

void RationalFn::reduce() {
  if (num_.is_zero()) {
    den_ = Poly(Rat(1));
    return;
  }
  Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = Poly::divmod(num_, g).first;
    den_ = Poly::divmod(den_, g).first;
  }
  Rat lead = den_.leading();
  if (lead != Rat(1)) {
    Rat inv = lead.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

Rat RationalFn::operator()(const Rat& k) const {
  Rat d = den_(k);
  if (d.is_zero()) throw PoleError("pole at k = " + k.str() + " of " + str());
  return num_(k) / d;
}

RationalFn RationalFn::operator-() const {
  RationalFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFn& RationalFn::operator+=(const RationalFn& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  reduce();
  return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& o) { return *this += -o; }

RationalFn& RationalFn::operator*=(const RationalFn& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

RationalFn& RationalFn::operator/=(const RationalFn& o) {
  if (o.is_zero()) throw DivisionByZeroError("rational function division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  reduce();
  return *this;
}

std::string RationalFn::str(std::string_view var) const {
  if (den_.degree() == 0) return num_.str(var);  // den is monic, hence 1
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

bool equivalent(const RationalFn& f, const RationalFn& g) {
  return f.num() * g.den() == g.num() * f.den();
}

}  // namespace wkalg
