#include "pknuth/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pknuth {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::stair(int n) {
  std::vector<int> p;
  for (int k = n - 1; k >= 1; --k) p.push_back(k);
  return Partition(std::move(p));
}

int Partition::part(int i) const {
  if (i < 1) throw std::out_of_range("part index is 1-based");
  return i <= length() ? parts_[i - 1] : 0;
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contained_in(const Partition& mu) const {
  for (int i = 1; i <= length(); ++i)
    if (part(i) > mu.part(i)) return false;
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int i = 1; i <= part(1); ++i) {
    int count = 0;
    for (int p : parts_)
      if (p >= i) ++count;
    c.push_back(count);
  }
  return Partition(std::move(c));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  s += ")";
  return s;
}

namespace {

void collect_bounded(int remaining, int maxpart, std::vector<int>& cur,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, maxpart); p >= 1; --p) {
    cur.push_back(p);
    collect_bounded(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

void collect_inside(const Partition& bound, int row, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  out.emplace_back(cur);
  if (row > bound.length()) return;
  int cap = bound.part(row);
  if (row > 1) cap = std::min(cap, cur[row - 2]);
  for (int p = 1; p <= cap; ++p) {
    cur.push_back(p);
    collect_inside(bound, row + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  collect_bounded(n, n, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_inside_stair(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  collect_inside(Partition::stair(n), 1, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

long long syt_count(const Partition& la) {
  if (la.empty()) return 1;
  int n = la.size();
  if (n > 20) throw std::invalid_argument("syt_count limited to n <= 20");
  Partition conj = la.conjugate();
  __int128 fact = 1, hooks = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  for (int r = 1; r <= la.length(); ++r)
    for (int c = 1; c <= la.part(r); ++c)
      hooks *= (la.part(r) - c) + (conj.part(c) - r) + 1;
  return static_cast<long long>(fact / hooks);
}

}  // namespace pknuth
