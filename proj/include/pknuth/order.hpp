#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "pknuth/partition.hpp"

namespace pknuth {

// Finite poset on [1,m] stored as a strict comparability table.
class AbstractPoset {
 public:
  AbstractPoset() = default;
  AbstractPoset(int m, std::vector<char> less);

  int size() const { return m_; }
  bool precedes(int a, int b) const { return less_[idx(a, b)] != 0; }
  bool incomparable(int a, int b) const {
    return a != b && !precedes(a, b) && !precedes(b, a);
  }

  friend bool operator==(const AbstractPoset&, const AbstractPoset&) = default;

 private:
  size_t idx(int a, int b) const { return static_cast<size_t>(a - 1) * m_ + (b - 1); }
  int m_ = 0;
  std::vector<char> less_;
};

// Natural unit interval order P_{lambda,n} on [1,n]: a < b are comparable
// (a before b) exactly when a <= lambda_{n+1-b}.
class UnitIntervalOrder {
 public:
  UnitIntervalOrder() = default;

  static UnitIntervalOrder from_partition(const Partition& lambda, int n);
  // i precedes j iff y_i + 1 < y_j; y must be strictly increasing.
  static UnitIntervalOrder from_intervals(const std::vector<double>& y);

  int n() const { return n_; }
  const Partition& shape() const { return lambda_; }

  // a strictly below b in P; dense table lookup.
  bool precedes(int a, int b) const {
    if (a < 1 || a > n_ || b < 1 || b > n_) throw std::out_of_range("element out of range");
    return less_[static_cast<size_t>(a - 1) * n_ + (b - 1)] != 0;
  }
  bool incomparable(int a, int b) const {
    return a != b && !precedes(a, b) && !precedes(b, a);
  }
  // a < b as integers but incomparable in P.
  bool below_incomparable(int a, int b) const {
    return a < b && !precedes(a, b);
  }

  AbstractPoset as_poset() const;
  // Comparabilities inherited and relabeled 1..|subset|; subset must be
  // sorted, in range, and duplicate-free.
  AbstractPoset restrict(const std::vector<int>& subset) const;
  // True iff no |pattern|-subset of [1,n] restricts to the pattern under the
  // order-preserving relabeling.
  bool avoids(const AbstractPoset& pattern) const;

  // subset sorted ascending; true iff its restriction is P_{Stair(m-1),m}.
  bool is_ladder(const std::vector<int>& subset) const;

  struct Climber {
    int x;
    std::vector<int> ladder;
  };
  // Witness x with y_1 below x below y_k for a ladder {y_1..y_k} avoiding x.
  std::optional<Climber> find_climber() const;
  bool is_ladder_climbing() const { return find_climber().has_value(); }
  bool avoids_climbing_patterns() const;

  // Lemma-style suborder scans.
  bool contains_3plus1() const;
  bool contains_2plus2() const;

  // Reversed order: P_{lambda',n}, where a is below b iff n+1-b is below
  // n+1-a in this order.
  UnitIntervalOrder hat() const;

  friend bool operator==(const UnitIntervalOrder&, const UnitIntervalOrder&) = default;

 private:
  int n_ = 0;
  Partition lambda_;
  std::vector<char> less_;
};

AbstractPoset pattern_311_5();   // P_{(3,1,1),5}
AbstractPoset pattern_4211_6();  // P_{(4,2,1,1),6}

// All natural unit interval orders on [1,n], lambda in lexicographic order.
std::vector<UnitIntervalOrder> enumerate_orders(int n);

// Deterministic interval realization of P_{lambda,n}: y_1 = 0 and each later
// y_j is the smallest value compatible with gap 1.5 for comparable and 0.5
// for incomparable predecessors.
std::vector<double> canonical_intervals(const Partition& lambda, int n);

}  // namespace pknuth
