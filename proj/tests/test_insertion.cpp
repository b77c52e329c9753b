#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "pknuth/insertion.hpp"
#include "pknuth/knuth.hpp"
#include "pknuth/order.hpp"

using namespace pknuth;

namespace {

UnitIntervalOrder make(std::vector<int> la, int n) {
  return UnitIntervalOrder::from_partition(Partition(std::move(la)), n);
}

Perm digits(const std::string& s) {
  Perm w;
  for (char ch : s) w.push_back(ch - '0');
  return w;
}

// Random member of the insertion domain: a word with sentinel padding plus a
// disjoint chain.
std::pair<Word, Chain> random_input(const UnitIntervalOrder& o, std::mt19937_64& rng) {
  int n = o.n();
  std::vector<int> values(n);
  std::iota(values.begin(), values.end(), 1);
  std::shuffle(values.begin(), values.end(), rng);
  size_t word_count = rng() % (n + 1);
  Word alpha(values.begin(), values.begin() + word_count);
  for (size_t i = 0; i < alpha.size(); ++i)
    if (rng() % 4 == 0) alpha.insert(alpha.begin() + i, kInf);
  // Greedily grow a chain from the leftover values.
  Chain c;
  for (size_t i = word_count; i < values.size(); ++i) {
    int v = values[i];
    auto sorted = c;
    sorted.push_back(v);
    std::sort(sorted.begin(), sorted.end());
    if (is_chain(o, sorted)) c = sorted;
  }
  return {alpha, c};
}

}  // namespace

TEST_CASE("worked insertion runs") {
  auto o1 = make({5, 3, 2, 1}, 6);
  InsertResult r1 = phi(o1, {4, 3, 2}, {1, 5, 6});
  CHECK(r1.chain == Chain{1, 5, 6});
  CHECK(r1.word == Word{4, 3, 2});

  auto o2 = make({5, 4, 3, 2, 1}, 7);
  InsertResult r2 = phi(o2, {7, 5, 4, 2}, {1, 3, 6});
  CHECK(r2.chain == Chain{2, 5, 7});
  CHECK(r2.word == Word{6, 4, 3, 1});

  auto o3 = make({2, 1, 1}, 5);
  std::vector<InsertStep> trace;
  InsertResult r3 = phi(o3, {5, 4, 2}, {1, 3}, &trace);
  CHECK(r3.chain == Chain{1, 5});
  CHECK(r3.word == Word{4, 3, 2});
  REQUIRE(trace.size() == 3);
  CHECK(trace[0].kind == InsertStep::Case::c2a);
  CHECK(trace[0].h == 1);
  CHECK(trace[0].q == 0);
  // The longer-ladder option (0,2) loses the lexicographic comparison.
  auto& A = trace[0].candidates;
  CHECK(std::find(A.begin(), A.end(), std::pair{0, 2}) != A.end());
  CHECK(trace[1].kind == InsertStep::Case::c2b);
  CHECK(trace[2].kind == InsertStep::Case::c2b);

  auto o4 = make({7, 6, 5, 4, 3, 2, 1}, 9);
  InsertResult r4 = phi(o4, {9, 8, 7, 5, 6, 3, 2, 4, 1}, {});
  CHECK(r4.chain == Chain{1, 5, 9});
  CHECK(r4.word == Word{8, 7, 6, 4, kInf, 3, 2, kInf, kInf});
}

TEST_CASE("small bumping example") {
  // With 1 below both 2 and 3, inserting 2 into the chain {1,3} bumps 3.
  auto o = make({1, 1}, 3);
  InsertResult r = phi(o, {2}, {1, 3});
  CHECK(r.chain == Chain{1, 2});
  CHECK(r.word == Word{3});
}

TEST_CASE("dragged runs") {
  auto o = make({7, 6, 5, 4, 3, 2, 1}, 9);
  InsertResult r = psi(o, {5, 8, 9}, {kInf, kInf, 8, 7, kInf, 6, 4, 3, 2}, {1, 5, 9});
  CHECK(r.chain.empty());
  CHECK(r.word == Word{9, 6, 8, 7, 4, 5, 3, 2, 1});

  InsertResult single = psi(make({}, 3), {1}, {kInf}, {2});
  CHECK(single.chain.empty());
  CHECK(single.word == Word{2});
}

TEST_CASE("empty dragged set reverts to plain insertion") {
  std::mt19937_64 rng(2024);
  for (int n = 2; n <= 8; ++n) {
    auto orders = enumerate_orders(n);
    for (int trial = 0; trial < 125; ++trial) {
      const auto& o = orders[rng() % orders.size()];
      auto [alpha, c] = random_input(o, rng);
      InsertResult a = phi(o, alpha, c);
      InsertResult b = psi(o, {}, alpha, c);
      CHECK(a.chain == b.chain);
      CHECK(a.word == b.word);
    }
  }
}

TEST_CASE("insertion rejects ill-formed input") {
  auto o = make({2, 1}, 4);
  CHECK_THROWS(phi(o, {1, 2}, {2, 4}));   // overlap
  CHECK_THROWS(phi(o, {3}, {2, 3, 4}));   // overlap inside the chain
  CHECK_THROWS(phi(o, {1, 1}, {}));       // repeated letter
  CHECK_THROWS(phi(o, {2}, {3, 4}));      // 3 and 4 are incomparable
}

TEST_CASE("words and chains transported by the complement") {
  CHECK(hat_word({4, 3, 2}, 6) == Word{5, 4, 3});
  CHECK(hat_word({kInf, 2}, 4) == Word{3, kInf});
  CHECK(hat_chain({1, 5, 9}, 9) == Chain{1, 5, 9});
  CHECK(hat_chain({2, 6}, 7) == Chain{2, 6});
  CHECK(hat_chain({1, 4}, 6) == Chain{3, 6});
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    auto orders = enumerate_orders(n);
    const auto& o = orders[rng() % orders.size()];
    auto [alpha, c] = random_input(o, rng);
    CHECK(hat_word(hat_word(alpha, n), n) == alpha);
    CHECK(hat_chain(hat_chain(c, n), n) == c);
    CHECK(is_chain(o.hat(), hat_chain(c, n)));
  }
}

TEST_CASE("insertion preserves content and the move class") {
  std::mt19937_64 rng(99);
  for (int n = 2; n <= 6; ++n) {
    auto orders = enumerate_orders(n);
    for (int trial = 0; trial < 60; ++trial) {
      const auto& o = orders[rng() % orders.size()];
      auto [alpha, c] = random_input(o, rng);
      InsertResult r = phi(o, alpha, c);
      CHECK(r.word.size() == alpha.size());
      CHECK(is_chain(o, r.chain));
      Word before = strip_inf(alpha);
      before.insert(before.end(), c.begin(), c.end());
      Word after = r.chain;
      Word bf = strip_inf(r.word);
      after.insert(after.end(), bf.begin(), bf.end());
      auto sorted_before = before, sorted_after = after;
      std::sort(sorted_before.begin(), sorted_before.end());
      std::sort(sorted_after.begin(), sorted_after.end());
      CHECK(sorted_before == sorted_after);
      // Words on the full ground set stay in one move class: compare the
      // concatenations when they are permutations.
      Word lhs = strip_inf(alpha);
      Word rhs_chain(c.rbegin(), c.rend());
      Word lhs_full = lhs + rhs_chain;
      Word rhs_full = Word(r.chain.rbegin(), r.chain.rend()) + strip_inf(r.word);
      if (is_permutation(lhs_full, n)) {
        auto cls = equivalence_class(o, lhs_full);
        CHECK(std::binary_search(cls.begin(), cls.end(), rhs_full));
      }
    }
  }
}

TEST_CASE("tableau-shaped input passes straight through") {
  // When the word is itself a chain compatible with the chain column, the
  // output reproduces the input column-for-column.
  for (int n = 2; n <= 6; ++n)
    for (const auto& o : enumerate_orders(n))
      for (const Tableau& t : enumerate_p_tableaux(o, n)) {
        if (t.columns.size() != 2) continue;
        const Chain& left = t.columns[0];
        const Chain& right = t.columns[1];
        Word alpha(left.rbegin(), left.rend());
        InsertResult r = phi(o, alpha, right);
        CHECK(r.chain == left);
        Word want(alpha.size() - right.size(), kInf);
        for (auto it = right.rbegin(); it != right.rend(); ++it) want.push_back(*it);
        CHECK(r.word == want);
      }
}

TEST_CASE("a bottom element pinned below the word survives") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 3 + static_cast<int>(rng() % 5);
    auto orders = enumerate_orders(n);
    const auto& o = orders[rng() % orders.size()];
    auto [alpha, c] = random_input(o, rng);
    InsertResult r = phi(o, alpha, c);
    for (size_t i = 0; i < c.size(); ++i) {
      bool below_all = true;
      for (int a : alpha)
        if (a != kInf && !o.precedes(c[i], a)) below_all = false;
      if (!below_all) continue;
      for (size_t j = 0; j <= i; ++j) {
        REQUIRE(r.chain.size() > j);
        CHECK(r.chain[j] == c[j]);
      }
    }
  }
}

TEST_CASE("order preservation on adjacent letters") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 3 + static_cast<int>(rng() % 4);
    auto orders = enumerate_orders(n);
    const auto& o = orders[rng() % orders.size()];
    auto [alpha, c] = random_input(o, rng);
    InsertResult r = phi(o, alpha, c);
    int m = static_cast<int>(alpha.size());
    auto a_at = [&](int p) { return alpha[m - p]; };
    auto b_at = [&](int p) { return r.word[m - p]; };
    for (int p = 1; p + 1 <= m; ++p) {
      int ai = a_at(p), aj = a_at(p + 1);
      if (ai == kInf || aj == kInf) continue;
      int bi = b_at(p), bj = b_at(p + 1);
      if (o.precedes(ai, aj) && ai < aj) {
        bool ok = (bj == kInf) ||
                  (bi != kInf && bj != kInf && o.precedes(bi, bj) && bi < bj);
        CHECK(ok);
      } else {
        bool ok = (bi == kInf && bj != kInf) ||
                  (bi != kInf && bj != kInf && !(o.precedes(bi, bj) && bi < bj));
        CHECK(ok);
      }
    }
  }
}

TEST_CASE("full correspondence on worked examples") {
  auto o = make({2, 1}, 4);
  PrsResult r = prs(o, digits("3241"));
  CHECK(r.pt() == Tableau::from_rows({{1, 3, 2}, {4}}));
  CHECK(r.qt() == Tableau::from_rows({{1, 3, 4}, {2}}));
  CHECK(r.pt_valid);
  CHECK(r.qt_valid);
  PrsResult bad = prs(make({3, 1, 1}, 5), digits("34521"));
  CHECK_FALSE(bad.pt_valid);
  CHECK(bad.qt_valid);
}

TEST_CASE("inverse correspondence") {
  auto o = make({2, 1}, 4);
  Tableau pt = Tableau::from_rows({{2, 1}, {4, 3}});
  Tableau qt = Tableau::from_rows({{1, 3}, {2, 4}});
  CHECK(inverse_prs(o, pt, qt) == digits("4231"));
  CHECK_THROWS(inverse_prs(o, pt, Tableau::from_rows({{1, 2, 3}, {4}})));
  for (int n = 1; n <= 5; ++n)
    for (const auto& o2 : enumerate_orders(n)) {
      if (!o2.avoids_climbing_patterns()) continue;
      for (const Perm& w : all_permutations(n)) {
        PrsResult r2 = prs(o2, w);
        REQUIRE(r2.pt_valid);
        REQUIRE(r2.qt_valid);
        CHECK(inverse_prs(o2, r2.pt(), r2.qt()) == w);
      }
    }
}

TEST_CASE("recorded dragged runs reverse single insertions") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    auto orders = enumerate_orders(n);
    const auto& o = orders[rng() % orders.size()];
    auto [alpha, c] = random_input(o, rng);
    int m = static_cast<int>(alpha.size());
    InsertResult r = phi(o, alpha, c);
    std::set<int> X;
    for (int p = 1; p <= m; ++p)
      if (alpha[m - p] != kInf && r.word[m - p] == kInf) X.insert(m + 1 - p);
    InsertResult back = psi(o.hat(), X, hat_word(r.word, n), hat_chain(r.chain, n));
    CHECK(hat_chain(back.chain, n) == c);
    CHECK(hat_word(back.word, n) == alpha);
  }
}
