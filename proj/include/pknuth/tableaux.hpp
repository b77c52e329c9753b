#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pknuth/order.hpp"
#include "pknuth/words.hpp"

namespace pknuth {

// One-column chain, stored ascending: entries[0] is the top cell (smallest),
// entries increase downward in the column.
using Chain = std::vector<int>;

// Tableau as a list of columns, each ascending. Column k's entry at depth d
// sits in row d+1 (row 1 on top).
struct Tableau {
  std::vector<std::vector<int>> columns;

  bool operator==(const Tableau&) const = default;
  auto operator<=>(const Tableau&) const = default;

  int size() const;
  // Column lengths as a sequence; the shape is its conjugate partition.
  std::vector<int> column_lengths() const;
  bool has_partition_shape() const;
  std::optional<Partition> shape() const;  // nullopt when not a tableau shape
  // Row r (1-based) left to right.
  std::vector<int> row(int r) const;
  int row_count() const;
  // English layout, row per line.
  std::string to_string() const;
  // Construct from rows (top row first).
  static Tableau from_rows(const std::vector<std::vector<int>>& rows);
};

bool is_chain(const UnitIntervalOrder& o, const Chain& c);

// Column and row conditions plus partition shape; content is not constrained.
bool is_p_tableau(const UnitIntervalOrder& o, const Tableau& t);
// Full check: standard Young tableau on [1,n].
bool is_standard_tableau(const Tableau& t, int n);
bool contains_each_once(const Tableau& t, int n);

// Columns left to right, each read bottom to top (largest first).
Word reading_word(const Tableau& t);

// Descents of a standard tableau: i with i strictly above i+1.
std::vector<int> des(const Tableau& t);

// Column i filled with consecutive integers continuing from column i-1.
Tableau superstandard(const Partition& la);

// Schutzenberger evacuation (involution on standard tableaux).
Tableau evacuation(const Tableau& t);

std::vector<Tableau> enumerate_syt(const Partition& la);
std::vector<Tableau> enumerate_p_tableaux(const UnitIntervalOrder& o, const Partition& la);
// All shapes of size n.
std::vector<Tableau> enumerate_p_tableaux(const UnitIntervalOrder& o, int n);

int finv_p_tab(const UnitIntervalOrder& o, const Tableau& t);

}  // namespace pknuth
