#include "pknuth/words.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pknuth {

bool is_permutation(const Word& w, int n) {
  if (static_cast<int>(w.size()) != n) return false;
  std::vector<char> seen(n + 1, 0);
  for (int v : w) {
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

void validate_word(const Word& w, int n) {
  std::vector<char> seen(n + 1, 0);
  for (int v : w) {
    if (v == kInf) continue;
    if (v < 1 || v > n) throw std::invalid_argument("word entry out of range");
    if (seen[v]) throw std::invalid_argument("finite word entries must be distinct");
    seen[v] = 1;
  }
}

Word operator+(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word strip_inf(const Word& w) {
  Word out;
  for (int v : w)
    if (v != kInf) out.push_back(v);
  return out;
}

std::string word_to_string(const Word& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += (w[i] == kInf) ? "inf" : std::to_string(w[i]);
  }
  return s;
}

Word parse_word(const std::string& text) {
  Word out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                  : comma - pos);
    if (tok == "inf" || tok == "Inf" || tok == "INF") {
      out.push_back(kInf);
    } else if (!tok.empty()) {
      out.push_back(std::stoi(tok));
    } else {
      throw std::invalid_argument("empty token in word");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<int> des_p(const UnitIntervalOrder& o, const Perm& w) {
  if (!is_permutation(w, o.n())) throw std::invalid_argument("not a permutation");
  std::vector<int> des;
  for (int i = 0; i + 1 < static_cast<int>(w.size()); ++i)
    if (o.precedes(w[i + 1], w[i])) des.push_back(i + 1);
  return des;
}

std::vector<std::pair<int, int>> ginv_p(const UnitIntervalOrder& o, const Perm& w) {
  if (!is_permutation(w, o.n())) throw std::invalid_argument("not a permutation");
  int n = o.n();
  // reach[i][j]: subword from position i to j whose consecutive letters all
  // satisfy "later is smaller and incomparable".
  auto dr = [&](int x, int y) { return o.below_incomparable(y, x); };
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (int i = n - 2; i >= 0; --i)
    for (int j = i + 1; j < n; ++j) {
      if (dr(w[i], w[j])) {
        reach[i][j] = 1;
        continue;
      }
      for (int p = i + 1; p < j && !reach[i][j]; ++p)
        if (dr(w[i], w[p]) && reach[p][j]) reach[i][j] = 1;
    }
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (o.precedes(w[j], w[i]) && !reach[i][j]) out.emplace_back(w[i], w[j]);
  std::sort(out.begin(), out.end());
  return out;
}

int ght_p(const UnitIntervalOrder& o, const Perm& w) {
  auto inv = ginv_p(o, w);
  if (inv.empty()) return 1;
  int n = o.n();
  std::vector<std::vector<int>> succ(n + 1);
  for (auto& [a, b] : inv) succ[a].push_back(b);
  // Edges go to strictly smaller values, so ascending order is topological.
  std::vector<int> len(n + 1, 1);
  int best = 1;
  for (int a = 1; a <= n; ++a) {
    for (int b : succ[a]) len[a] = std::max(len[a], len[b] + 1);
    best = std::max(best, len[a]);
  }
  return best;
}

std::vector<std::pair<int, int>> finv_p(const UnitIntervalOrder& o, const Perm& w) {
  if (!is_permutation(w, o.n())) throw std::invalid_argument("not a permutation");
  std::vector<std::pair<int, int>> out;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (o.below_incomparable(w[j], w[i])) out.emplace_back(w[i], w[j]);
  std::sort(out.begin(), out.end());
  return out;
}

int finv_count(const UnitIntervalOrder& o, const Perm& w) {
  return static_cast<int>(finv_p(o, w).size());
}

std::vector<Perm> all_permutations(int n) {
  Perm w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace pknuth
