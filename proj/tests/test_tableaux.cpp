#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>

#include "doctest.h"
#include "pknuth/order.hpp"
#include "pknuth/tableaux.hpp"
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

const UnitIntervalOrder kFig = make({7, 5, 4, 3, 2, 2, 1}, 9);

}  // namespace

TEST_CASE("tableau construction and shape") {
  Tableau t = Tableau::from_rows({{1, 3, 5, 8}, {2, 6, 7}, {4}});
  CHECK(t.columns == std::vector<std::vector<int>>{{1, 2, 4}, {3, 6}, {5, 7}, {8}});
  CHECK(t.size() == 8);
  CHECK(*t.shape() == Partition({4, 3, 1}));
  CHECK(t.row(2) == std::vector<int>{2, 6, 7});
  Tableau bad;
  bad.columns = {{1}, {2, 3}};
  CHECK_FALSE(bad.has_partition_shape());
  CHECK_FALSE(bad.shape().has_value());
}

TEST_CASE("tableau condition") {
  Tableau t = Tableau::from_rows({{1, 4, 3, 2}, {5, 8, 7, 6}, {9}});
  CHECK(is_p_tableau(kFig, t));
  auto o5 = make({3, 1, 1}, 5);
  Tableau bad = Tableau::from_rows({{3, 1, 2}, {5, 4}});
  CHECK_FALSE(is_p_tableau(o5, bad));  // 3 sits above 1 in the first row
  Tableau chain;
  chain.columns = {{1, 4}};
  CHECK(is_p_tableau(make({3, 1}, 5), chain));
  Tableau notchain;
  notchain.columns = {{1, 4, 5}};  // 4 and 5 are incomparable
  CHECK_FALSE(is_p_tableau(make({3, 1}, 5), notchain));
}

TEST_CASE("reading words") {
  Tableau t = Tableau::from_rows({{1, 3, 5, 8}, {2, 6, 7}, {4}});
  CHECK(reading_word(t) == Word{4, 2, 1, 6, 3, 7, 5, 8});
  Tableau col;
  col.columns = {{1, 2, 5}};
  CHECK(reading_word(col) == Word{5, 2, 1});
  Tableau sq = Tableau::from_rows({{2, 1}, {4, 3}});
  CHECK(reading_word(sq) == Word{4, 2, 3, 1});
}

TEST_CASE("descents of standard tableaux") {
  CHECK(des(Tableau::from_rows({{1, 3, 5, 8}, {2, 6, 7}, {4}})) ==
        std::vector<int>{1, 3, 5});
  CHECK(des(superstandard(Partition({4, 3, 1}))) == std::vector<int>{1, 2, 4, 6});
  CHECK(des(superstandard(Partition({5}))).empty());
}

TEST_CASE("superstandard filling") {
  CHECK(superstandard(Partition({4, 3, 1})) ==
        Tableau::from_rows({{1, 4, 6, 8}, {2, 5, 7}, {3}}));
  CHECK(superstandard(Partition({3})) == Tableau::from_rows({{1, 2, 3}}));
  CHECK(superstandard(Partition({1, 1, 1})) == Tableau::from_rows({{1}, {2}, {3}}));
}

TEST_CASE("evacuation") {
  Tableau fixed = Tableau::from_rows({{1, 3}, {2, 4}});
  CHECK(evacuation(fixed) == fixed);
  CHECK(evacuation(Tableau::from_rows({{1, 3, 4}, {2}})) ==
        Tableau::from_rows({{1, 2, 3}, {4}}));
  Tableau row = Tableau::from_rows({{1, 2, 3, 4, 5}});
  CHECK(evacuation(row) == row);
  for (int n = 1; n <= 7; ++n)
    for (const Partition& la : partitions_of(n))
      for (const Tableau& t : enumerate_syt(la)) {
        CHECK(evacuation(evacuation(t)) == t);
        std::vector<int> want;
        for (int x : des(t)) want.push_back(n - x);
        std::sort(want.begin(), want.end());
        CHECK(des(evacuation(t)) == want);
      }
}

TEST_CASE("standard tableau enumeration") {
  CHECK(enumerate_syt(Partition({2, 2})).size() == 2);
  CHECK(enumerate_syt(Partition({3, 1})).size() == 3);
  for (int n = 1; n <= 7; ++n)
    for (const Partition& la : partitions_of(n))
      CHECK(static_cast<long long>(enumerate_syt(la).size()) == syt_count(la));
}

TEST_CASE("tableau enumeration for an order") {
  // The five-vertex class of the four-element example uses these two shapes.
  auto o = make({2, 1}, 4);
  auto t22 = enumerate_p_tableaux(o, Partition({2, 2}));
  auto t31 = enumerate_p_tableaux(o, Partition({3, 1}));
  Tableau want22 = Tableau::from_rows({{2, 1}, {4, 3}});
  Tableau want31 = Tableau::from_rows({{1, 3, 2}, {4}});
  CHECK(std::count(t22.begin(), t22.end(), want22) == 1);
  CHECK(std::count(t31.begin(), t31.end(), want31) == 1);
  // Standard tableaux are the special case of the usual order.
  for (int n = 1; n <= 6; ++n)
    for (const Partition& la : partitions_of(n))
      CHECK(enumerate_p_tableaux(usual_order(n), la).size() ==
            enumerate_syt(la).size());
}

TEST_CASE("adjacent column comparisons") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& o : enumerate_orders(n))
      for (const Tableau& t : enumerate_p_tableaux(o, n))
        for (size_t k = 0; k + 1 < t.columns.size(); ++k) {
          const auto& a = t.columns[k];
          const auto& b = t.columns[k + 1];
          for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) {
              if (a[i] > b[j]) CHECK(i >= j);
              if (o.precedes(b[j], a[i])) CHECK(i > j);
              if (i < j) CHECK(a[i] < b[j]);
            }
        }
}

TEST_CASE("tableau counting identity") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& o : enumerate_orders(n)) {
      if (!o.avoids_climbing_patterns()) continue;
      long long total = 0;
      for (const Partition& la : partitions_of(n))
        total += static_cast<long long>(enumerate_p_tableaux(o, la).size()) *
                 syt_count(la);
      long long factorial = 1;
      for (int k = 2; k <= n; ++k) factorial *= k;
      CHECK(total == factorial);
    }
}

TEST_CASE("fake inversions of tableaux") {
  Tableau t = Tableau::from_rows({{1, 4, 3, 2}, {5, 8, 7, 6}, {9}});
  CHECK(finv_p_tab(kFig, t) == 8);
  Tableau col;
  col.columns = {{1, 2, 3}};
  CHECK(finv_p_tab(make({2, 1}, 3), col) == 0);
  for (const Tableau& t4 : enumerate_syt(Partition({2, 2})))
    CHECK(finv_p_tab(usual_order(4), t4) == 0);
}

TEST_CASE("column-position fake inversions match the reading word") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& o : enumerate_orders(n))
      for (const Tableau& t : enumerate_p_tableaux(o, n)) {
        int by_columns = 0;
        for (size_t k = 0; k < t.columns.size(); ++k)
          for (size_t k2 = k + 1; k2 < t.columns.size(); ++k2)
            for (int i : t.columns[k])
              for (int j : t.columns[k2])
                if (o.below_incomparable(j, i)) ++by_columns;
        CHECK(by_columns == finv_p_tab(o, t));
      }
}
