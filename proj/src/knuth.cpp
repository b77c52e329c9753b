#include "pknuth/knuth.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pknuth {

namespace {

// Definition of the moves on a window holding {a,b,c}, a<b<c, a below c.
// Each case contributes unordered pairs of arrangements.
struct Rule {
  std::array<int, 3> from, to;  // entries are 0,1,2 meaning a,b,c
};

std::vector<Rule> rules_for(const UnitIntervalOrder& o, int a, int b, int c) {
  bool ab = o.precedes(a, b);
  bool bc = o.precedes(b, c);
  const std::array<int, 3> bca = {1, 2, 0}, cab = {2, 0, 1}, bac = {1, 0, 2},
                           cba = {2, 1, 0}, acb = {0, 2, 1};
  std::vector<Rule> rules;
  if (!ab && !bc) {  // (1)
    rules.push_back({bca, cab});
  } else if (ab && !bc) {  // (2)
    rules.push_back({bca, bac});
    rules.push_back({cba, cab});
  } else if (!ab && bc) {  // (3)
    rules.push_back({bca, cba});
    rules.push_back({acb, cab});
  } else {  // (4)
    rules.push_back({bca, bac});
    rules.push_back({acb, cab});
  }
  return rules;
}

}  // namespace

std::vector<Move> knuth_neighbors(const UnitIntervalOrder& o, const Perm& w) {
  if (!is_permutation(w, o.n())) throw std::invalid_argument("not a permutation");
  std::vector<Move> out;
  int n = o.n();
  for (int i = 2; i <= n - 1; ++i) {
    std::array<int, 3> win = {w[i - 2], w[i - 1], w[i]};
    std::array<int, 3> s = win;
    std::sort(s.begin(), s.end());
    int a = s[0], b = s[1], c = s[2];
    if (!o.precedes(a, c)) continue;
    auto arrangement = [&](const std::array<int, 3>& pat) {
      return std::array<int, 3>{s[pat[0]], s[pat[1]], s[pat[2]]};
    };
    for (const Rule& rule : rules_for(o, a, b, c)) {
      std::array<int, 3> from = arrangement(rule.from);
      std::array<int, 3> to = arrangement(rule.to);
      std::array<int, 3> res;
      if (win == from)
        res = to;
      else if (win == to)
        res = from;
      else
        continue;
      Perm w2 = w;
      w2[i - 2] = res[0];
      w2[i - 1] = res[1];
      w2[i] = res[2];
      out.push_back(Move{std::move(w2), i});
    }
  }
  return out;
}

std::vector<Perm> equivalence_class(const UnitIntervalOrder& o, const Perm& w) {
  std::set<Perm> seen{w};
  std::vector<Perm> queue{w};
  while (!queue.empty()) {
    Perm cur = std::move(queue.back());
    queue.pop_back();
    for (auto& mv : knuth_neighbors(o, cur))
      if (seen.insert(mv.target).second) queue.push_back(mv.target);
  }
  return {seen.begin(), seen.end()};
}

int KnuthGraph::index_of(const Perm& w) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
  if (it == vertices.end() || *it != w) return -1;
  return static_cast<int>(it - vertices.begin());
}

KnuthGraph build_graph(const UnitIntervalOrder& o, std::vector<Perm> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  KnuthGraph g;
  g.n = o.n();
  g.vertices = std::move(vertices);
  for (const Perm& w : g.vertices) g.sigma.push_back(des_p(o, w));
  for (int vi = 0; vi < static_cast<int>(g.vertices.size()); ++vi) {
    for (auto& mv : knuth_neighbors(o, g.vertices[vi])) {
      int vj = g.index_of(mv.target);
      if (vj < 0) {
        std::ostringstream msg;
        msg << "vertex set not closed under moves: " << word_to_string(g.vertices[vi])
            << " -> " << word_to_string(mv.target) << " at position " << mv.position;
        throw std::invalid_argument(msg.str());
      }
      g.edges[mv.position].insert({std::min(vi, vj), std::max(vi, vj)});
    }
  }
  return g;
}

namespace {

bool sigma_has(const std::vector<int>& des, int i) {
  return std::binary_search(des.begin(), des.end(), i);
}

std::string perm_str(const KnuthGraph& g, int v) { return word_to_string(g.vertices[v]); }

}  // namespace

AxiomReport check_d_graph_axioms(const KnuthGraph& g) {
  AxiomReport rep;
  int n = g.n;
  int m = static_cast<int>(g.vertices.size());
  // Partner lookup per color.
  std::vector<std::map<int, std::vector<int>>> partners(m);
  for (const auto& [color, pairs] : g.edges)
    for (auto [u, v] : pairs) {
      partners[u][color].push_back(v);
      partners[v][color].push_back(u);
    }

  for (int w = 0; w < m; ++w) {
    for (int i = 2; i <= n - 1; ++i) {
      int cnt = (sigma_has(g.sigma[w], i - 1) ? 1 : 0) + (sigma_has(g.sigma[w], i) ? 1 : 0);
      auto it = partners[w].find(i);
      int deg = it == partners[w].end() ? 0 : static_cast<int>(it->second.size());
      if ((cnt == 1) != (deg >= 1) || deg > 1) {
        rep.ax1 = false;
        rep.failures.push_back("Ax1: vertex " + perm_str(g, w) + " color " +
                               std::to_string(i) + " has " + std::to_string(deg) +
                               " partner(s), |sigma cap {i-1,i}| = " + std::to_string(cnt));
      }
    }
  }

  for (const auto& [i, pairs] : g.edges) {
    for (auto [w, x] : pairs) {
      if (sigma_has(g.sigma[w], i) == sigma_has(g.sigma[x], i)) {
        rep.ax2 = false;
        rep.failures.push_back("Ax2: edge {" + perm_str(g, w) + ", " + perm_str(g, x) +
                               "} color " + std::to_string(i) + " agrees at i");
      }
      for (int h = 1; h <= n - 1; ++h) {
        if (h >= i - 2 && h <= i + 1) continue;
        if (sigma_has(g.sigma[w], h) != sigma_has(g.sigma[x], h)) {
          rep.ax2 = false;
          rep.failures.push_back("Ax2: edge {" + perm_str(g, w) + ", " + perm_str(g, x) +
                                 "} color " + std::to_string(i) + " differs at " +
                                 std::to_string(h));
        }
      }
      for (auto [u, v] : {std::pair{w, x}, std::pair{x, w}}) {
        if (sigma_has(g.sigma[u], i - 2) != sigma_has(g.sigma[v], i - 2)) {
          int cnt = (sigma_has(g.sigma[u], i - 2) ? 1 : 0) +
                    (sigma_has(g.sigma[u], i - 1) ? 1 : 0);
          if (cnt != 1) {
            rep.ax3 = false;
            rep.failures.push_back("Ax3: edge {" + perm_str(g, u) + ", " + perm_str(g, v) +
                                   "} color " + std::to_string(i) + " at i-2");
          }
        }
        if (sigma_has(g.sigma[u], i + 1) != sigma_has(g.sigma[v], i + 1)) {
          int cnt =
              (sigma_has(g.sigma[u], i) ? 1 : 0) + (sigma_has(g.sigma[u], i + 1) ? 1 : 0);
          if (cnt != 1) {
            rep.ax3 = false;
            rep.failures.push_back("Ax3: edge {" + perm_str(g, u) + ", " + perm_str(g, v) +
                                   "} color " + std::to_string(i) + " at i+1");
          }
        }
      }
    }
  }

  for (const auto& [i, pairs_i] : g.edges)
    for (const auto& [j, pairs_j] : g.edges) {
      if (i - j < 3 && j - i < 3) continue;
      for (auto [u, v] : pairs_i)
        for (auto [w, x] : {std::pair{u, v}, std::pair{v, u}}) {
          auto jt = partners[x].find(j);
          if (jt == partners[x].end()) continue;
          for (int y : jt->second) {
            bool found = false;
            auto wt = partners[w].find(j);
            if (wt != partners[w].end())
              for (int vp : wt->second)
                if (pairs_i.count({std::min(vp, y), std::max(vp, y)})) {
                  found = true;
                  break;
                }
            if (!found) {
              rep.ax5 = false;
              rep.failures.push_back("Ax5: path " + perm_str(g, w) + " -E" +
                                     std::to_string(i) + "- " + perm_str(g, x) + " -E" +
                                     std::to_string(j) + "- " + perm_str(g, y) +
                                     " has no completing square");
            }
          }
        }
    }

  return rep;
}

std::vector<std::vector<Perm>> components(const UnitIntervalOrder& o, int n) {
  auto perms = all_permutations(n);
  std::map<Perm, int> index;
  for (int i = 0; i < static_cast<int>(perms.size()); ++i) index[perms[i]] = i;
  std::vector<int> parent(perms.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < static_cast<int>(perms.size()); ++i)
    for (auto& mv : knuth_neighbors(o, perms[i])) {
      int j = index.at(mv.target);
      parent[find(i)] = find(j);
    }
  std::map<int, std::vector<Perm>> groups;
  for (int i = 0; i < static_cast<int>(perms.size()); ++i)
    groups[find(i)].push_back(perms[i]);
  std::vector<std::vector<Perm>> out;
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::string to_dot(const UnitIntervalOrder& o, const KnuthGraph& g) {
  std::ostringstream out;
  out << "graph knuth {\n";
  out << "  node [shape=box];\n";
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
    out << "  v" << v << " [label=\"";
    for (int x : g.vertices[v]) out << x;
    out << "\\ndes={";
    const auto& des = g.sigma[v];
    for (size_t i = 0; i < des.size(); ++i) {
      if (i) out << ",";
      out << des[i];
    }
    out << "}\"];\n";
  }
  // Merge colors per vertex pair for readability.
  std::map<std::pair<int, int>, std::vector<int>> labels;
  for (const auto& [color, pairs] : g.edges)
    for (auto pr : pairs) labels[pr].push_back(color);
  for (const auto& [pr, colors] : labels) {
    out << "  v" << pr.first << " -- v" << pr.second << " [label=\"";
    for (size_t i = 0; i < colors.size(); ++i) {
      if (i) out << ",";
      out << colors[i];
    }
    out << "\"];\n";
  }
  out << "}\n";
  (void)o;
  return out.str();
}

}  // namespace pknuth
