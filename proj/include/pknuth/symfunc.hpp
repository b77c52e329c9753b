#pragma once

#include <map>
#include <string>
#include <vector>

#include "pknuth/order.hpp"
#include "pknuth/partition.hpp"
#include "pknuth/words.hpp"

namespace pknuth {

// Integer polynomial in t; trailing zeros trimmed, equality coefficient-wise.
class TPoly {
 public:
  TPoly() = default;
  explicit TPoly(std::vector<long long> coeffs);
  static TPoly t_power(int k, long long coeff = 1);
  static TPoly constant(long long c) { return t_power(0, c); }

  long long at(int k) const;
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 when zero
  bool is_zero() const { return c_.empty(); }
  bool nonnegative() const;
  long long eval(long long t) const;

  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  friend bool operator==(const TPoly&, const TPoly&) = default;

  std::string to_string() const;
  const std::vector<long long>& coeffs() const { return c_; }

 private:
  void trim();
  std::vector<long long> c_;
};

using Composition = std::vector<int>;

Composition composition_from_descents(int n, const std::vector<int>& des);
std::vector<int> descents_from_composition(const Composition& c);
bool is_partition_composition(const Composition& c);
// beta refines alpha when consecutive blocks of beta sum to alpha's parts.
bool refines(const Composition& beta, const Composition& alpha);
std::vector<Composition> all_compositions(int n);

// Homogeneous quasisymmetric function of degree n in the fundamental basis,
// coefficients in Z[t].
class QSym {
 public:
  QSym() = default;
  explicit QSym(int n) : n_(n) {}

  int n() const { return n_; }
  void add(const Composition& alpha, const TPoly& coeff);
  const std::map<Composition, TPoly>& terms() const { return terms_; }
  TPoly coeff(const Composition& alpha) const;
  bool is_zero() const { return terms_.empty(); }

  QSym& operator+=(const QSym& o);
  QSym& operator-=(const QSym& o);
  friend QSym operator+(QSym a, const QSym& b) { return a += b; }
  friend QSym operator-(QSym a, const QSym& b) { return a -= b; }
  QSym scaled(const TPoly& f) const;
  friend bool operator==(const QSym&, const QSym&) = default;

  std::string to_string() const;

 private:
  int n_ = 0;
  std::map<Composition, TPoly> terms_;
};

// F_{comp(des)} with coefficient 1.
QSym fundamental(int n, const std::vector<int>& des);

// Generating function of a vertex set: sum over w of t^|finv| F_{des}.
QSym gamma(const UnitIntervalOrder& o, const std::vector<Perm>& V);

// s_lambda = sum of F_{des(T)} over standard tableaux of shape lambda.
QSym schur_to_fundamental(const Partition& la);

struct SchurExpansion {
  int n = 0;
  std::map<Partition, TPoly> coeffs;

  friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;
  std::string to_string() const;
  QSym to_fundamental() const;
};

struct SchurResult {
  bool ok = false;
  SchurExpansion expansion;
  QSym residual;  // nonzero when not Schur-expressible
};

// Greedy peeling against the lex-largest composition; self-verifying by
// recomposition.
SchurResult expand_in_schur(const QSym& q);

bool is_symmetric(const QSym& q);
bool is_schur_positive(const SchurExpansion& e);

}  // namespace pknuth
