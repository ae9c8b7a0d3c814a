#include "wkalg/walgebra/central_charge.h"

#include "wkalg/liealg/grading.h"

namespace wkalg {

RationalFn central_charge(const Partition& p) {
  const DynkinGrading grading = dynkin_grading(p);
  const GradedDims dims = graded_dims(grading);
  const int big_n = p.size();
  const RationalFn k = RationalFn::var();

  RationalFn c = k * Rat(big_n * big_n - 1) / (k + Rat(big_n));
  c -= k * (Rat(12) * x_norm(grading));

  Rat shift;
  for (const auto& [twice_j, dim] : dims.g) {
    if (twice_j <= 0) continue;
    const Rat j(twice_j, 2);
    shift += Rat(dim) * (Rat(12) * j * j - Rat(12) * j + Rat(2));
  }
  shift += Rat(dims.g_at(1), 2);
  return c - shift;
}

RationalFn central_charge(const FamilyParams& p) { return central_charge(p.partition()); }

RationalFn hook_central_charge_closed(int m, int n) {
  const RationalFn k = RationalFn::var();
  const Rat mr(m);
  const Rat h(m + n);
  RationalFn first = -(k + k * ((Rat(1) - h) * h) + h * h) / (k + h);
  RationalFn second =
      k - h - (mr * mr) * (Rat(1) + k + h) + mr * (Rat(1) + Rat(3) * h);
  return first + second * mr;
}

RationalFn rectangular_central_charge_closed(int q, int m) {
  const RationalFn k = RationalFn::var();
  const Rat qr(q);
  const Rat mr(m);
  const Rat mq = mr * qr;
  RationalFn inner = (k + mq) * (mr * (qr - qr * qr * qr)) + (mq * mq - Rat(1));
  return k * inner / (k + mq) - mr * mr * qr * (qr * qr * qr - Rat(2) * qr * qr + Rat(1));
}

}  // namespace wkalg
