#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "pknuth/order.hpp"
#include "pknuth/words.hpp"

using namespace pknuth;

namespace {

UnitIntervalOrder make(std::vector<int> la, int n) {
  return UnitIntervalOrder::from_partition(Partition(std::move(la)), n);
}

UnitIntervalOrder usual_order(int n) {
  std::vector<int> la;
  for (int k = n - 1; k >= 1; --k) la.push_back(k);
  return make(la, n);
}

// Longest strictly decreasing subsequence: patience sorting on negated values.
int patience_decreasing(const Perm& w) {
  std::vector<int> tails;
  for (int v : w) {
    auto it = std::lower_bound(tails.begin(), tails.end(), -v);
    if (it == tails.end())
      tails.push_back(-v);
    else
      *it = -v;
  }
  return static_cast<int>(tails.size());
}

const UnitIntervalOrder kFig = make({7, 5, 4, 3, 2, 2, 1}, 9);
const Perm kWord = {9, 5, 1, 8, 4, 7, 3, 6, 2};

}  // namespace

TEST_CASE("word helpers") {
  CHECK(parse_word("9,5,1") == Word{9, 5, 1});
  CHECK(parse_word("inf,3,inf") == Word{kInf, 3, kInf});
  CHECK(word_to_string({kInf, 3}) == "inf,3");
  CHECK(strip_inf({kInf, 3, kInf, 1}) == Word{3, 1});
  CHECK((Word{1, 2} + Word{3}) == Word{1, 2, 3});
  CHECK(is_permutation({2, 1, 3}, 3));
  CHECK_FALSE(is_permutation({2, 2, 3}, 3));
  CHECK_THROWS(validate_word({1, 1}, 4));
  CHECK_NOTHROW(validate_word({kInf, kInf, 2}, 4));
}

TEST_CASE("descents") {
  CHECK(des_p(kFig, kWord) == std::vector<int>{1, 2, 4, 6, 8});
  auto u = usual_order(4);
  CHECK(des_p(u, {1, 2, 3, 4}).empty());
  CHECK(des_p(make({}, 4), {4, 3, 2, 1}).empty());
}

TEST_CASE("genuine inversions") {
  std::vector<std::pair<int, int>> expected = {{5, 1}, {6, 2}, {7, 2}, {7, 3},
                                               {8, 2}, {8, 3}, {8, 4}, {9, 1},
                                               {9, 2}, {9, 3}, {9, 4}, {9, 5}};
  CHECK(ginv_p(kFig, kWord) == expected);
  // Usual order: the plain inversion set.
  auto u = usual_order(5);
  for (const Perm& w : all_permutations(5)) {
    std::vector<std::pair<int, int>> inv;
    for (size_t i = 0; i < w.size(); ++i)
      for (size_t j = i + 1; j < w.size(); ++j)
        if (w[i] > w[j]) inv.emplace_back(w[i], w[j]);
    std::sort(inv.begin(), inv.end());
    CHECK(ginv_p(u, w) == inv);
  }
  // Trivial order: empty.
  auto t = make({}, 5);
  for (const Perm& w : all_permutations(5)) CHECK(ginv_p(t, w).empty());
}

TEST_CASE("height") {
  CHECK(ght_p(kFig, kWord) == 3);
  auto u = usual_order(6);
  for (const Perm& w : all_permutations(6)) CHECK(ght_p(u, w) == patience_decreasing(w));
  auto t = make({}, 4);
  for (const Perm& w : all_permutations(4)) CHECK(ght_p(t, w) == 1);
}

TEST_CASE("fake inversions") {
  std::vector<std::pair<int, int>> expected = {{3, 2}, {4, 3}, {5, 3}, {5, 4},
                                               {7, 6}, {8, 6}, {8, 7}, {9, 8}};
  CHECK(finv_p(kFig, kWord) == expected);
  CHECK(finv_count(kFig, kWord) == 8);
  auto u = usual_order(5);
  for (const Perm& w : all_permutations(5)) CHECK(finv_p(u, w).empty());
  // Trivial order: the plain inversion set.
  auto t = make({}, 4);
  for (const Perm& w : all_permutations(4)) {
    std::vector<std::pair<int, int>> inv;
    for (size_t i = 0; i < w.size(); ++i)
      for (size_t j = i + 1; j < w.size(); ++j)
        if (w[i] > w[j]) inv.emplace_back(w[i], w[j]);
    std::sort(inv.begin(), inv.end());
    CHECK(finv_p(t, w) == inv);
  }
}
