#include "pknuth/order.hpp"

#include <algorithm>
#include <stdexcept>

namespace pknuth {

AbstractPoset::AbstractPoset(int m, std::vector<char> less)
    : m_(m), less_(std::move(less)) {
  if (less_.size() != static_cast<size_t>(m) * m)
    throw std::invalid_argument("poset table size mismatch");
  for (int a = 1; a <= m; ++a) {
    if (less_[idx(a, a)]) throw std::invalid_argument("poset relation not irreflexive");
    for (int b = 1; b <= m; ++b) {
      if (less_[idx(a, b)] && less_[idx(b, a)])
        throw std::invalid_argument("poset relation not antisymmetric");
      for (int c = 1; c <= m; ++c)
        if (less_[idx(a, b)] && less_[idx(b, c)] && !less_[idx(a, c)])
          throw std::invalid_argument("poset relation not transitive");
    }
  }
}

UnitIntervalOrder UnitIntervalOrder::from_partition(const Partition& lambda, int n) {
  if (n < 1) throw std::invalid_argument("ground set must be nonempty");
  if (!lambda.contained_in(Partition::stair(n)))
    throw std::invalid_argument("lambda is not contained in Stair(n)");
  UnitIntervalOrder o;
  o.n_ = n;
  o.lambda_ = lambda;
  o.less_.assign(static_cast<size_t>(n) * n, 0);
  for (int b = 1; b <= n; ++b)
    for (int a = 1; a < b; ++a)
      if (a <= lambda.part(n + 1 - b))
        o.less_[static_cast<size_t>(a - 1) * n + (b - 1)] = 1;
  return o;
}

UnitIntervalOrder UnitIntervalOrder::from_intervals(const std::vector<double>& y) {
  int n = static_cast<int>(y.size());
  if (n < 1) throw std::invalid_argument("need at least one interval");
  for (int i = 0; i + 1 < n; ++i)
    if (!(y[i] < y[i + 1]))
      throw std::invalid_argument("interval start points must be strictly increasing");
  // lambda_i = number of elements below n+1-i.
  std::vector<int> parts;
  for (int i = 1; i <= n; ++i) {
    int b = n + 1 - i;
    int count = 0;
    for (int a = 1; a < b; ++a)
      if (y[a - 1] + 1 < y[b - 1]) ++count;
    parts.push_back(count);
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return from_partition(Partition(std::move(parts)), n);
}

AbstractPoset UnitIntervalOrder::as_poset() const {
  std::vector<char> less(static_cast<size_t>(n_) * n_, 0);
  for (int a = 1; a <= n_; ++a)
    for (int b = 1; b <= n_; ++b)
      less[static_cast<size_t>(a - 1) * n_ + (b - 1)] = precedes(a, b) ? 1 : 0;
  return AbstractPoset(n_, std::move(less));
}

AbstractPoset UnitIntervalOrder::restrict(const std::vector<int>& subset) const {
  int m = static_cast<int>(subset.size());
  for (int i = 0; i < m; ++i) {
    if (subset[i] < 1 || subset[i] > n_) throw std::out_of_range("subset element out of range");
    if (i + 1 < m && !(subset[i] < subset[i + 1]))
      throw std::invalid_argument("subset must be sorted and duplicate-free");
  }
  std::vector<char> less(static_cast<size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      less[static_cast<size_t>(i) * m + j] = precedes(subset[i], subset[j]) ? 1 : 0;
  return AbstractPoset(m, std::move(less));
}

namespace {

bool next_subset(std::vector<int>& s, int n) {
  int m = static_cast<int>(s.size());
  int i = m - 1;
  while (i >= 0 && s[i] == n - (m - 1 - i)) --i;
  if (i < 0) return false;
  ++s[i];
  for (int j = i + 1; j < m; ++j) s[j] = s[j - 1] + 1;
  return true;
}

}  // namespace

bool UnitIntervalOrder::avoids(const AbstractPoset& pattern) const {
  int m = pattern.size();
  if (m > n_) return true;
  std::vector<int> s(m);
  for (int i = 0; i < m; ++i) s[i] = i + 1;
  do {
    if (restrict(s) == pattern) return false;
  } while (next_subset(s, n_));
  return true;
}

bool UnitIntervalOrder::is_ladder(const std::vector<int>& subset) const {
  int m = static_cast<int>(subset.size());
  for (int i = 0; i + 1 < m; ++i)
    if (!(subset[i] < subset[i + 1]))
      throw std::invalid_argument("ladder subset must be sorted");
  // P_{Stair(m-1),m}: comparable exactly when indices differ by >= 2.
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      bool want = (j - i >= 2);
      if (precedes(subset[i], subset[j]) != want) return false;
    }
  return true;
}

std::optional<UnitIntervalOrder::Climber> UnitIntervalOrder::find_climber() const {
  // Witnesses need a ladder of size >= 4 plus a climber.
  for (int mask = 0; mask < (1 << n_); ++mask) {
    std::vector<int> ys;
    for (int v = 1; v <= n_; ++v)
      if (mask & (1 << (v - 1))) ys.push_back(v);
    if (ys.size() < 2) continue;
    if (!is_ladder(ys)) continue;
    for (int x = 1; x <= n_; ++x) {
      if (mask & (1 << (x - 1))) continue;
      if (precedes(ys.front(), x) && precedes(x, ys.back()))
        return Climber{x, ys};
    }
  }
  return std::nullopt;
}

bool UnitIntervalOrder::avoids_climbing_patterns() const {
  return avoids(pattern_311_5()) && avoids(pattern_4211_6());
}

bool UnitIntervalOrder::contains_3plus1() const {
  for (int a = 1; a <= n_; ++a)
    for (int b = 1; b <= n_; ++b)
      for (int c = 1; c <= n_; ++c)
        for (int d = 1; d <= n_; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          if (precedes(c, b) && precedes(b, a) && incomparable(a, d) && incomparable(d, c))
            return true;
        }
  return false;
}

bool UnitIntervalOrder::contains_2plus2() const {
  for (int a = 1; a <= n_; ++a)
    for (int b = 1; b <= n_; ++b)
      for (int c = 1; c <= n_; ++c)
        for (int d = 1; d <= n_; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          if (precedes(b, a) && precedes(d, c) && incomparable(c, b) && incomparable(a, d))
            return true;
        }
  return false;
}

UnitIntervalOrder UnitIntervalOrder::hat() const {
  return from_partition(lambda_.conjugate(), n_);
}

AbstractPoset pattern_311_5() {
  return UnitIntervalOrder::from_partition(Partition({3, 1, 1}), 5).as_poset();
}

AbstractPoset pattern_4211_6() {
  return UnitIntervalOrder::from_partition(Partition({4, 2, 1, 1}), 6).as_poset();
}

std::vector<UnitIntervalOrder> enumerate_orders(int n) {
  std::vector<UnitIntervalOrder> out;
  for (const Partition& la : partitions_inside_stair(n))
    out.push_back(UnitIntervalOrder::from_partition(la, n));
  return out;
}

std::vector<double> canonical_intervals(const Partition& lambda, int n) {
  UnitIntervalOrder::from_partition(lambda, n);  // validate
  // Difference constraints on D-scaled integer start points: strict
  // relations demand a gap above D, incomparable pairs cap the gap at D.
  const long long D = 3 * n + 1;
  struct Edge {
    int from, to;
    long long w;  // Y_to <= Y_from + w
  };
  std::vector<Edge> edges;
  auto pred_top = [&](int j) { return lambda.part(n + 1 - j); };
  for (int j = 2; j <= n; ++j) {
    edges.push_back({j, j - 1, -1});
    int p = pred_top(j);
    if (p >= 1) edges.push_back({j, p, -(D + 1)});
    if (p + 1 < j) edges.push_back({p + 1, j, D});
  }
  std::vector<long long> d(n + 1, 0);
  for (int round = 0; round <= n + 1; ++round) {
    bool changed = false;
    for (const Edge& e : edges)
      if (d[e.from] + e.w < d[e.to]) {
        d[e.to] = d[e.from] + e.w;
        changed = true;
      }
    if (!changed) break;
    if (round == n + 1) throw std::logic_error("interval realization infeasible");
  }
  // Shrink slightly so both the strict and the capped inequalities end up
  // with slack well above double rounding.
  const double scale = static_cast<double>(2 * D + 1) /
                       (static_cast<double>(D) * static_cast<double>(2 * D + 2));
  std::vector<double> y(n);
  for (int j = 1; j <= n; ++j)
    y[j - 1] = static_cast<double>(d[j] - d[1]) * scale;
  return y;
}

}  // namespace pknuth
