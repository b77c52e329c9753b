#pragma once

#include <compare>
#include <string>
#include <vector>

namespace pknuth {

// Integer partition: weakly decreasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // Staircase (n-1, n-2, ..., 1); empty for n <= 1.
  static Partition stair(int n);

  const std::vector<int>& parts() const { return parts_; }
  // 1-based part access; parts beyond the length are 0.
  int part(int i) const;
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }

  bool contained_in(const Partition& mu) const;
  Partition conjugate() const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// All partitions of n, lexicographically increasing.
std::vector<Partition> partitions_of(int n);

// All partitions contained in Stair(n), lexicographically increasing.
std::vector<Partition> partitions_inside_stair(int n);

// Number of standard Young tableaux of shape la (hook length formula).
long long syt_count(const Partition& la);

}  // namespace pknuth
