#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pknuth/order.hpp"
#include "pknuth/words.hpp"

namespace pknuth {

struct Move {
  Perm target;
  int position;  // i in [2, n-1]; letters at positions i-1, i, i+1 move

  bool operator==(const Move&) const = default;
};

// All single P-Knuth moves from w, with their positions.
std::vector<Move> knuth_neighbors(const UnitIntervalOrder& o, const Perm& w);

// Closure of {w} under P-Knuth moves, sorted.
std::vector<Perm> equivalence_class(const UnitIntervalOrder& o, const Perm& w);

// Signed colored graph of a move-closed vertex set.
struct KnuthGraph {
  int n = 0;
  std::vector<Perm> vertices;               // sorted
  std::vector<std::vector<int>> sigma;      // P-descent set per vertex
  // color -> unordered vertex pairs (indices into vertices, first < second)
  std::map<int, std::set<std::pair<int, int>>> edges;

  int index_of(const Perm& w) const;  // -1 when absent
};

// Throws when V is not closed under moves, naming an escaping move.
KnuthGraph build_graph(const UnitIntervalOrder& o, std::vector<Perm> vertices);

struct AxiomReport {
  bool ax1 = true, ax2 = true, ax3 = true, ax5 = true;
  std::vector<std::string> failures;  // one line per violation, with witness
  std::string note = "dual equivalence axioms 4 and 6 not checked";
  bool all_pass() const { return ax1 && ax2 && ax3 && ax5; }
};

AxiomReport check_d_graph_axioms(const KnuthGraph& g);

// Partition of S_n into P-Knuth classes, each sorted; classes ordered by
// their smallest element.
std::vector<std::vector<Perm>> components(const UnitIntervalOrder& o, int n);

std::string to_dot(const UnitIntervalOrder& o, const KnuthGraph& g);

}  // namespace pknuth
