#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace wkalg {

// Jordan type of a nilpotent element of sl(N): a weakly decreasing list of
// positive block sizes summing to N >= 2.
class Partition {
 public:
  /// Sorts the parts descending. Throws std::invalid_argument for an empty
  /// list, a non-positive part, or N < 2.
  explicit Partition(std::vector<int> parts);

  /// "a,b,c,..." in any order. Throws ParseError.
  static Partition parse(std::string_view text);

  /// (m, 1^n)
  static Partition hook(int m, int n);
  /// (q^m): m blocks of size q.
  static Partition rectangular(int q, int m);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }

  /// Transposed Young diagram. May have a single part.
  std::vector<int> dual() const;

  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

}  // namespace wkalg
