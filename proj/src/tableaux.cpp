#include "pknuth/tableaux.hpp"

#include <algorithm>
#include <stdexcept>

namespace pknuth {

int Tableau::size() const {
  int s = 0;
  for (const auto& c : columns) s += static_cast<int>(c.size());
  return s;
}

std::vector<int> Tableau::column_lengths() const {
  std::vector<int> lens;
  for (const auto& c : columns) lens.push_back(static_cast<int>(c.size()));
  return lens;
}

bool Tableau::has_partition_shape() const {
  auto lens = column_lengths();
  for (size_t i = 0; i < lens.size(); ++i) {
    if (lens[i] <= 0) return false;
    if (i + 1 < lens.size() && lens[i] < lens[i + 1]) return false;
  }
  return true;
}

std::optional<Partition> Tableau::shape() const {
  if (!has_partition_shape()) return std::nullopt;
  if (columns.empty()) return Partition();
  return Partition(column_lengths()).conjugate();
}

std::vector<int> Tableau::row(int r) const {
  std::vector<int> out;
  for (const auto& c : columns)
    if (static_cast<int>(c.size()) >= r) out.push_back(c[r - 1]);
  return out;
}

int Tableau::row_count() const {
  int m = 0;
  for (const auto& c : columns) m = std::max(m, static_cast<int>(c.size()));
  return m;
}

std::string Tableau::to_string() const {
  std::string s;
  for (int r = 1; r <= row_count(); ++r) {
    auto rw = row(r);
    for (size_t i = 0; i < rw.size(); ++i) {
      if (i) s += " ";
      s += std::to_string(rw[i]);
    }
    if (r < row_count()) s += "\n";
  }
  return s;
}

Tableau Tableau::from_rows(const std::vector<std::vector<int>>& rows) {
  Tableau t;
  size_t width = rows.empty() ? 0 : rows[0].size();
  t.columns.assign(width, {});
  for (const auto& r : rows) {
    if (r.size() > width) throw std::invalid_argument("rows must weakly shrink");
    for (size_t k = 0; k < r.size(); ++k) t.columns[k].push_back(r[k]);
    width = r.size();
  }
  return t;
}

bool is_chain(const UnitIntervalOrder& o, const Chain& c) {
  for (size_t i = 0; i + 1 < c.size(); ++i)
    if (!o.precedes(c[i], c[i + 1])) return false;
  return true;
}

bool is_p_tableau(const UnitIntervalOrder& o, const Tableau& t) {
  if (!t.has_partition_shape()) return false;
  for (const auto& c : t.columns)
    if (!is_chain(o, c)) return false;
  for (size_t k = 0; k + 1 < t.columns.size(); ++k) {
    const auto& left = t.columns[k];
    const auto& right = t.columns[k + 1];
    for (size_t r = 0; r < right.size(); ++r)
      if (o.precedes(right[r], left[r])) return false;
  }
  return true;
}

bool is_standard_tableau(const Tableau& t, int n) {
  if (!t.has_partition_shape()) return false;
  if (!contains_each_once(t, n)) return false;
  for (const auto& c : t.columns)
    for (size_t i = 0; i + 1 < c.size(); ++i)
      if (!(c[i] < c[i + 1])) return false;
  for (size_t k = 0; k + 1 < t.columns.size(); ++k)
    for (size_t r = 0; r < t.columns[k + 1].size(); ++r)
      if (!(t.columns[k][r] < t.columns[k + 1][r])) return false;
  return true;
}

bool contains_each_once(const Tableau& t, int n) {
  std::vector<char> seen(n + 1, 0);
  int count = 0;
  for (const auto& c : t.columns)
    for (int v : c) {
      if (v < 1 || v > n || seen[v]) return false;
      seen[v] = 1;
      ++count;
    }
  return count == n;
}

Word reading_word(const Tableau& t) {
  Word w;
  for (const auto& c : t.columns)
    for (auto it = c.rbegin(); it != c.rend(); ++it) w.push_back(*it);
  return w;
}

std::vector<int> des(const Tableau& t) {
  int n = t.size();
  std::vector<int> rowof(n + 1, 0);
  for (const auto& c : t.columns)
    for (size_t d = 0; d < c.size(); ++d) {
      if (c[d] < 1 || c[d] > n || rowof[c[d]])
        throw std::invalid_argument("descents need entries 1..n without repeats");
      rowof[c[d]] = static_cast<int>(d) + 1;
    }
  std::vector<int> out;
  for (int i = 1; i < n; ++i)
    if (rowof[i] < rowof[i + 1]) out.push_back(i);
  return out;
}

Tableau superstandard(const Partition& la) {
  Tableau t;
  Partition cols = la.conjugate();
  int next = 1;
  for (int k = 1; k <= cols.length(); ++k) {
    std::vector<int> col;
    for (int j = 0; j < cols.part(k); ++j) col.push_back(next++);
    t.columns.push_back(std::move(col));
  }
  return t;
}

namespace {

// Row-major grid with -1 holes.
std::vector<std::vector<int>> to_grid(const Tableau& t) {
  std::vector<std::vector<int>> g(t.row_count());
  for (int r = 1; r <= t.row_count(); ++r) g[r - 1] = t.row(r);
  return g;
}

Tableau from_grid(const std::vector<std::vector<int>>& g) {
  return Tableau::from_rows(g);
}

}  // namespace

Tableau evacuation(const Tableau& t) {
  int n = t.size();
  if (n == 0) return t;
  auto grid = to_grid(t);
  std::vector<std::vector<int>> out(grid.size());
  for (size_t r = 0; r < grid.size(); ++r) out[r].assign(grid[r].size(), 0);

  for (int step = 1; step <= n; ++step) {
    // Slide the hole created at the corner cell (0,0) inward.
    size_t r = 0, c = 0;
    while (true) {
      bool has_right = c + 1 < grid[r].size();
      bool has_down = r + 1 < grid.size() && c < grid[r + 1].size();
      if (!has_right && !has_down) break;
      if (!has_down || (has_right && grid[r][c + 1] < grid[r + 1][c])) {
        grid[r][c] = grid[r][c + 1];
        ++c;
      } else {
        grid[r][c] = grid[r + 1][c];
        ++r;
      }
    }
    out[r][c] = n + 1 - step;
    grid[r].pop_back();
    if (grid[r].empty()) grid.pop_back();
    for (auto& row : grid)
      for (int& v : row) --v;
  }
  return from_grid(out);
}

std::vector<Tableau> enumerate_syt(const Partition& la) {
  std::vector<Tableau> out;
  int n = la.size();
  std::vector<int> fill(la.length(), 0);
  std::vector<std::vector<int>> rows(la.length());
  auto rec = [&](auto&& self, int next) -> void {
    if (next > n) {
      out.push_back(Tableau::from_rows(rows));
      return;
    }
    for (int r = 0; r < la.length(); ++r) {
      if (fill[r] >= la.part(r + 1)) continue;
      if (r > 0 && fill[r - 1] <= fill[r]) continue;
      rows[r].push_back(next);
      ++fill[r];
      self(self, next + 1);
      --fill[r];
      rows[r].pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

namespace {

void chains_from(const UnitIntervalOrder& o, const std::vector<int>& avail,
                 const std::vector<int>* left_col, int want, size_t start,
                 std::vector<int>& cur, const std::vector<char>& used,
                 std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == want) {
    out.push_back(cur);
    return;
  }
  for (size_t i = start; i < avail.size(); ++i) {
    int v = avail[i];
    if (used[v]) continue;
    if (!cur.empty() && !o.precedes(cur.back(), v)) continue;
    size_t depth = cur.size();
    // Row condition against the column to the left, checked as cells fill.
    if (left_col && o.precedes(v, (*left_col)[depth])) continue;
    cur.push_back(v);
    chains_from(o, avail, left_col, want, i + 1, cur, used, out);
    cur.pop_back();
  }
}

void ptab_rec(const UnitIntervalOrder& o, const std::vector<int>& col_lens, size_t k,
              std::vector<std::vector<int>>& cols, std::vector<char>& used,
              std::vector<Tableau>& out) {
  if (k == col_lens.size()) {
    Tableau t;
    t.columns = cols;
    out.push_back(std::move(t));
    return;
  }
  std::vector<int> avail;
  for (int v = 1; v <= o.n(); ++v)
    if (!used[v]) avail.push_back(v);
  std::vector<std::vector<int>> choices;
  std::vector<int> cur;
  const std::vector<int>* left = k > 0 ? &cols[k - 1] : nullptr;
  chains_from(o, avail, left, col_lens[k], 0, cur, used, choices);
  for (auto& ch : choices) {
    for (int v : ch) used[v] = 1;
    cols.push_back(ch);
    ptab_rec(o, col_lens, k + 1, cols, used, out);
    cols.pop_back();
    for (int v : ch) used[v] = 0;
  }
}

}  // namespace

std::vector<Tableau> enumerate_p_tableaux(const UnitIntervalOrder& o, const Partition& la) {
  std::vector<Tableau> out;
  if (la.size() != o.n()) return out;
  std::vector<int> col_lens = la.conjugate().parts();
  std::vector<std::vector<int>> cols;
  std::vector<char> used(o.n() + 1, 0);
  ptab_rec(o, col_lens, 0, cols, used, out);
  return out;
}

std::vector<Tableau> enumerate_p_tableaux(const UnitIntervalOrder& o, int n) {
  std::vector<Tableau> out;
  for (const Partition& la : partitions_of(n)) {
    auto part = enumerate_p_tableaux(o, la);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

int finv_p_tab(const UnitIntervalOrder& o, const Tableau& t) {
  return finv_count(o, reading_word(t));
}

}  // namespace pknuth
