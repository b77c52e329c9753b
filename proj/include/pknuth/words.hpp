#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pknuth/order.hpp"

namespace pknuth {

// Sentinel for the adjoined top element; larger than every finite entry.
inline constexpr int kInf = 1 << 30;

// Words are stored in display order: w[0] is the leftmost letter. The
// insertion algorithms process letters from the right end.
using Word = std::vector<int>;
using Perm = std::vector<int>;

bool is_permutation(const Word& w, int n);
// Distinct finite entries within [1,n]; kInf may repeat.
void validate_word(const Word& w, int n);

// Concatenation.
Word operator+(const Word& a, const Word& b);
// Finite entries only, display order preserved.
Word strip_inf(const Word& w);

std::string word_to_string(const Word& w);
Word parse_word(const std::string& text);  // comma-separated, "inf" allowed

// P-descents: positions i in [1,n-1] with w_i above w_{i+1} in P.
std::vector<int> des_p(const UnitIntervalOrder& o, const Perm& w);

// Genuine P-inversions (i,j): i above j in P, i before j in w, and no
// connecting subword of pairwise-incomparable letters. Computed via the
// descending-incomparable-chain characterization.
std::vector<std::pair<int, int>> ginv_p(const UnitIntervalOrder& o, const Perm& w);

// Genuine P-height: longest chain of genuine inversions (1 when none).
int ght_p(const UnitIntervalOrder& o, const Perm& w);

// Fake P-inversions (i,j): j < i incomparable, i before j in w.
std::vector<std::pair<int, int>> finv_p(const UnitIntervalOrder& o, const Perm& w);
int finv_count(const UnitIntervalOrder& o, const Perm& w);

std::vector<Perm> all_permutations(int n);

}  // namespace pknuth
