#pragma once

#include <string>

#include "wkalg/liealg/partition.h"

namespace wkalg {

enum class Family { Hook, Rectangular, General };

// A nilpotent of sl(N) together with the family data that the closed
// formulas are written in. Hook(m, n) is the partition (m, 1^n) of m + n;
// Rectangular(q, m) is (q^m), i.e. m blocks of size q.
class FamilyParams {
 public:
  /// m >= 1, n >= 1.
  static FamilyParams hook(int m, int n);
  /// q >= 2, m >= 2.
  static FamilyParams rectangular(int q, int m);
  static FamilyParams general(const Partition& p);
  /// Recognizes hooks and rectangles; anything else is General.
  static FamilyParams classify(const Partition& p);

  Family family() const { return family_; }
  const Partition& partition() const { return partition_; }
  int m() const { return m_; }
  int n() const { return n_; }
  int q() const { return q_; }
  int h_vee() const { return partition_.size(); }

  bool is_hook() const { return family_ == Family::Hook; }
  bool is_rectangular() const { return family_ == Family::Rectangular; }

  /// "hook(m=3, n=2)", "rect(q=2, m=3)" or "partition(3,2,2)".
  std::string str() const;

 private:
  FamilyParams(Family f, Partition p, int m, int n, int q)
      : family_(f), partition_(std::move(p)), m_(m), n_(n), q_(q) {}

  Family family_;
  Partition partition_;
  int m_ = 0;
  int n_ = 0;
  int q_ = 0;
};

}  // namespace wkalg
