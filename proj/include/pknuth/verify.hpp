#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "pknuth/insertion.hpp"
#include "pknuth/knuth.hpp"
#include "pknuth/order.hpp"
#include "pknuth/symfunc.hpp"
#include "pknuth/words.hpp"

namespace pknuth {

struct Report {
  std::string claim;
  std::string scope;
  bool passed = true;
  bool skipped = false;
  std::vector<std::string> witnesses;
  double seconds = 0;

  void fail(std::string witness);
  nlohmann::json to_json() const;
  std::string one_line() const;
};

struct SuiteResult {
  std::vector<Report> reports;

  bool all_passed() const;
  nlohmann::json to_json() const;
  std::string summary() const;
  void append(Report r) { reports.push_back(std::move(r)); }
  void append(const SuiteResult& s);
};

// Independent brute-force oracles.
std::vector<std::pair<int, int>> oracle_ginv(const UnitIntervalOrder& o, const Perm& w);
int oracle_ght(const UnitIntervalOrder& o, const Perm& w);
std::vector<std::vector<Perm>> oracle_components(const UnitIntervalOrder& o, int n);
SchurResult oracle_schur(const QSym& q);

// Per-order theorem-level checks.
Report check_theorem_mainstrong(const UnitIntervalOrder& o);
Report check_conjecture_main(const UnitIntervalOrder& o);

// Suites. jobs > 1 shards work by order with a deterministic merge.
SuiteResult run_figures_suite();
SuiteResult run_theorem_suite(int maxn, int jobs = 1, std::uint64_t seed = 12345);
SuiteResult run_conjecture_suite(int maxn, int jobs = 1);
SuiteResult run_oracles_suite(int maxn, std::uint64_t seed = 12345);

}  // namespace pknuth
