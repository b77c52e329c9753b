#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "pknuth/knuth.hpp"
#include "pknuth/order.hpp"
#include "pknuth/symfunc.hpp"
#include "pknuth/tableaux.hpp"

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

}  // namespace

TEST_CASE("polynomial arithmetic") {
  TPoly a({1, 2});      // 1 + 2t
  TPoly b({0, -2, 3});  // -2t + 3t^2
  CHECK((a + b) == TPoly({1, 0, 3}));
  CHECK((a - a).is_zero());
  CHECK((a * b) == TPoly({0, -2, -1, 6}));
  CHECK(TPoly({0, 0, 0}).is_zero());
  CHECK(TPoly::t_power(2, 3).at(2) == 3);
  CHECK(a.eval(2) == 5);
  CHECK(a.nonnegative());
  CHECK_FALSE(b.nonnegative());
  CHECK(TPoly({1, 0, 2}).to_string() == "2*t^2 + 1");
}

TEST_CASE("compositions and descent sets") {
  CHECK(composition_from_descents(4, {1, 3}) == Composition{1, 2, 1});
  CHECK(composition_from_descents(4, {}) == Composition{4});
  CHECK(composition_from_descents(3, {1, 2}) == Composition{1, 1, 1});
  CHECK(descents_from_composition({1, 2, 1}) == std::vector<int>{1, 3});
  CHECK(refines({1, 1, 2}, {2, 2}));
  CHECK_FALSE(refines({2, 1, 1}, {1, 3}));
  CHECK(all_compositions(4).size() == 8);
  CHECK(is_partition_composition({3, 1, 1}));
  CHECK_FALSE(is_partition_composition({1, 3}));
}

TEST_CASE("fundamental elements") {
  QSym f = fundamental(4, {1, 3});
  CHECK(f.coeff({1, 2, 1}) == TPoly::constant(1));
  CHECK(f.coeff({4}).is_zero());
  CHECK(fundamental(4, {}).coeff({4}) == TPoly::constant(1));
}

TEST_CASE("schur functions in the fundamental basis") {
  QSym s21 = schur_to_fundamental(Partition({2, 1}));
  CHECK(s21.coeff({2, 1}) == TPoly::constant(1));
  CHECK(s21.coeff({1, 2}) == TPoly::constant(1));
  CHECK(s21.terms().size() == 2);
  CHECK(schur_to_fundamental(Partition({4})) == fundamental(4, {}));
  CHECK(schur_to_fundamental(Partition({1, 1, 1})) == fundamental(3, {1, 2}));
}

TEST_CASE("greedy peeling is grounded in lex-largest terms") {
  for (int n = 1; n <= 8; ++n)
    for (const Partition& la : partitions_of(n)) {
      QSym s = schur_to_fundamental(la);
      auto last = std::prev(s.terms().end());
      CHECK(Composition(la.parts()) == last->first);
      CHECK(last->second == TPoly::constant(1));
    }
}

TEST_CASE("schur expansion") {
  // One Schur function round-trips.
  for (int n = 1; n <= 6; ++n)
    for (const Partition& la : partitions_of(n)) {
      SchurResult r = expand_in_schur(schur_to_fundamental(la));
      REQUIRE(r.ok);
      CHECK(r.expansion.coeffs.size() == 1);
      CHECK(r.expansion.coeffs.at(la) == TPoly::constant(1));
    }
  // A single fundamental element is usually not Schur-expressible.
  SchurResult bad = expand_in_schur(fundamental(3, {1}));
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.residual.is_zero());
  // Known class expansions.
  auto o5 = make({3, 1, 1}, 5);
  SchurResult fig10 = expand_in_schur(gamma(o5, equivalence_class(o5, digits("45312"))));
  REQUIRE(fig10.ok);
  SchurExpansion want;
  want.n = 5;
  want.coeffs[Partition({3, 1, 1})] = TPoly::t_power(3);
  want.coeffs[Partition({3, 2})] = TPoly::t_power(3);
  want.coeffs[Partition({4, 1})] = TPoly::t_power(3, 2);
  CHECK(fig10.expansion == want);
  CHECK(fig10.expansion.to_string() == "t^3*(s[3,1,1] + s[3,2] + 2*s[4,1])");
  auto o6 = make({4, 3, 2, 1, 1}, 6);
  SchurResult fig12 = expand_in_schur(gamma(o6, equivalence_class(o6, digits("624153"))));
  REQUIRE(fig12.ok);
  SchurExpansion want12;
  want12.n = 6;
  want12.coeffs[Partition({3, 2, 1})] = TPoly::t_power(2);
  want12.coeffs[Partition({4, 1, 1})] = TPoly::t_power(2);
  CHECK(fig12.expansion == want12);
}

TEST_CASE("symmetry detection") {
  for (int n = 1; n <= 6; ++n)
    for (const Partition& la : partitions_of(n))
      CHECK(is_symmetric(schur_to_fundamental(la)));
  CHECK_FALSE(is_symmetric(fundamental(3, {1})));
  for (int n = 1; n <= 5; ++n)
    for (const auto& o : enumerate_orders(n))
      for (const auto& comp : components(o, n)) CHECK(is_symmetric(gamma(o, comp)));
}

TEST_CASE("positivity") {
  SchurExpansion e;
  e.n = 4;
  e.coeffs[Partition({3, 1})] = TPoly({0, 2});
  CHECK(is_schur_positive(e));
  e.coeffs[Partition({2, 2})] = TPoly({-1});
  CHECK_FALSE(is_schur_positive(e));
}

TEST_CASE("generating functions of vertex sets") {
  auto o = make({2, 1}, 4);
  QSym g = gamma(o, {digits("4321")});
  CHECK(g.terms().size() == 1);
  CHECK(g.coeff({4}) == TPoly::t_power(3));
  // Trivial order: no descents, fake inversions are plain inversions.
  auto t = make({}, 4);
  QSym gt = gamma(t, all_permutations(4));
  CHECK(gt.terms().size() == 1);
  TPoly want;
  for (const Perm& w : all_permutations(4)) {
    int inv = 0;
    for (size_t i = 0; i < w.size(); ++i)
      for (size_t j = i + 1; j < w.size(); ++j)
        if (w[i] > w[j]) ++inv;
    want += TPoly::t_power(inv);
  }
  CHECK(gt.coeff({4}) == want);
  // A five-element class from the figures.
  auto o5 = make({2, 2, 1}, 5);
  SchurResult r = expand_in_schur(gamma(o5, equivalence_class(o5, digits("42315"))));
  REQUIRE(r.ok);
  SchurExpansion want5;
  want5.n = 5;
  want5.coeffs[Partition({3, 2})] = TPoly::t_power(2);
  want5.coeffs[Partition({4, 1})] = TPoly::t_power(2);
  CHECK(r.expansion == want5);
}

TEST_CASE("total over all classes matches the tableau count") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& o : enumerate_orders(n)) {
      QSym total(n);
      for (const auto& comp : components(o, n)) total += gamma(o, comp);
      QSym want(n);
      for (const Partition& la : partitions_of(n)) {
        long long count =
            static_cast<long long>(enumerate_p_tableaux(o, la).size());
        if (count)
          want += schur_to_fundamental(la).scaled(TPoly::constant(count));
      }
      // Compare at t = 1 coefficient-wise in the fundamental basis.
      bool same = true;
      for (const auto& [comp, poly] : total.terms())
        if (poly.eval(1) != want.coeff(comp).eval(1)) same = false;
      for (const auto& [comp, poly] : want.terms())
        if (poly.eval(1) != total.coeff(comp).eval(1)) same = false;
      CHECK(same);
    }
}
