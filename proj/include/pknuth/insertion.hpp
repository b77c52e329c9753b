#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pknuth/order.hpp"
#include "pknuth/tableaux.hpp"
#include "pknuth/words.hpp"

namespace pknuth {

// One processed step of the column insertion. Positions are 1-based
// processing indices: position p is the p-th letter from the right end of
// the displayed word.
struct InsertStep {
  enum class Case { c1a, c1b, c2a, c2b, c3a, c3b };
  Case kind;
  int p = 0;
  int r = -1;                                      // cases 1 and 2
  int h = -1, q = -1;                              // case 2
  std::vector<std::pair<int, int>> candidates;     // the set A, case 2
  Chain chain_after;                               // ascending snapshot

  static std::string case_name(Case c);
};

struct InsertResult {
  Chain chain;  // ascending
  Word word;    // display order, same length as the input word
};

// Column insertion: inserts the word into the chain, returning the new chain
// and output word. Input word entries and chain entries must be disjoint.
InsertResult phi(const UnitIntervalOrder& o, const Word& alpha, const Chain& c,
                 std::vector<InsertStep>* trace = nullptr);

// Variant that additionally drags the bottom chain entry out at positions in
// X when the processed letter is the top sentinel. Psi with empty X is phi.
InsertResult psi(const UnitIntervalOrder& o, const std::set<int>& X, const Word& alpha,
                 const Chain& c, std::vector<InsertStep>* trace = nullptr);

struct PrsResult {
  std::vector<Chain> pt_columns;
  std::vector<std::vector<int>> qt_columns;  // ascending recording columns
  bool pt_valid = false;
  bool qt_valid = false;

  Tableau pt() const;
  Tableau qt() const;
};

// Robinson-Schensted style correspondence: repeatedly insert into an empty
// chain, collecting the chains and the positions consumed per round. Never
// throws on ladder-climbing orders; validity is reported via the flags.
PrsResult prs(const UnitIntervalOrder& o, const Word& w,
              std::vector<std::vector<InsertStep>>* traces = nullptr);

// Reconstructs the unique word mapping to (pt, qt) under prs. Requires the
// order to avoid both climbing patterns and the shapes to match.
Word inverse_prs(const UnitIntervalOrder& o, const Tableau& pt, const Tableau& qt);

// Complement a -> n+1-a on entries combined with display reversal; sentinel
// entries are fixed. Involution exchanging the order with its hat.
Word hat_word(const Word& w, int n);
Chain hat_chain(const Chain& c, int n);

}  // namespace pknuth
