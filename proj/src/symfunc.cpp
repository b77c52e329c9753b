#include "pknuth/symfunc.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "pknuth/tableaux.hpp"

namespace pknuth {

TPoly::TPoly(std::vector<long long> coeffs) : c_(std::move(coeffs)) { trim(); }

TPoly TPoly::t_power(int k, long long coeff) {
  TPoly p;
  if (coeff != 0) {
    p.c_.assign(k + 1, 0);
    p.c_[k] = coeff;
  }
  return p;
}

long long TPoly::at(int k) const {
  return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : 0;
}

bool TPoly::nonnegative() const {
  return std::all_of(c_.begin(), c_.end(), [](long long v) { return v >= 0; });
}

long long TPoly::eval(long long t) const {
  long long acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

TPoly& TPoly::operator+=(const TPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  if (a.is_zero() || b.is_zero()) return TPoly();
  std::vector<long long> c(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return TPoly(std::move(c));
}

void TPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::string TPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    long long v = at(k);
    if (v == 0) continue;
    if (!s.empty()) s += v > 0 ? " + " : " - ";
    else if (v < 0) s += "-";
    long long av = v < 0 ? -v : v;
    if (k == 0) {
      s += std::to_string(av);
    } else {
      if (av != 1) s += std::to_string(av) + "*";
      s += "t";
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

Composition composition_from_descents(int n, const std::vector<int>& des) {
  Composition c;
  int prev = 0;
  for (int s : des) {
    if (s <= prev || s >= n) throw std::invalid_argument("bad descent set");
    c.push_back(s - prev);
    prev = s;
  }
  c.push_back(n - prev);
  return c;
}

std::vector<int> descents_from_composition(const Composition& c) {
  std::vector<int> des;
  int acc = 0;
  for (size_t i = 0; i + 1 < c.size(); ++i) {
    acc += c[i];
    des.push_back(acc);
  }
  return des;
}

bool is_partition_composition(const Composition& c) {
  for (size_t i = 0; i + 1 < c.size(); ++i)
    if (c[i] < c[i + 1]) return false;
  return true;
}

bool refines(const Composition& beta, const Composition& alpha) {
  size_t bi = 0;
  for (int part : alpha) {
    int acc = 0;
    while (acc < part) {
      if (bi >= beta.size()) return false;
      acc += beta[bi++];
    }
    if (acc != part) return false;
  }
  return bi == beta.size();
}

std::vector<Composition> all_compositions(int n) {
  std::vector<Composition> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
    Composition c;
    int prev = 0;
    for (int i = 1; i < n; ++i)
      if (mask & (1 << (i - 1))) {
        c.push_back(i - prev);
        prev = i;
      }
    c.push_back(n - prev);
    out.push_back(std::move(c));
  }
  return out;
}

void QSym::add(const Composition& alpha, const TPoly& coeff) {
  if (std::accumulate(alpha.begin(), alpha.end(), 0) != n_)
    throw std::invalid_argument("composition size mismatch");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(alpha, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TPoly QSym::coeff(const Composition& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? TPoly() : it->second;
}

QSym& QSym::operator+=(const QSym& o) {
  if (n_ == 0 && terms_.empty()) n_ = o.n_;
  if (o.n_ != n_ && !o.terms_.empty())
    throw std::invalid_argument("degree mismatch");
  for (const auto& [a, p] : o.terms_) add(a, p);
  return *this;
}

QSym& QSym::operator-=(const QSym& o) {
  if (n_ == 0 && terms_.empty()) n_ = o.n_;
  if (o.n_ != n_ && !o.terms_.empty())
    throw std::invalid_argument("degree mismatch");
  for (const auto& [a, p] : o.terms_) add(a, TPoly() - p);
  return *this;
}

QSym QSym::scaled(const TPoly& f) const {
  QSym out(n_);
  for (const auto& [a, p] : terms_) out.add(a, p * f);
  return out;
}

std::string QSym::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [a, p] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + p.to_string() + ")*F[";
    for (size_t i = 0; i < a.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(a[i]);
    }
    s += "]";
  }
  return s;
}

QSym fundamental(int n, const std::vector<int>& des) {
  QSym q(n);
  q.add(composition_from_descents(n, des), TPoly::constant(1));
  return q;
}

QSym gamma(const UnitIntervalOrder& o, const std::vector<Perm>& V) {
  QSym q(o.n());
  for (const Perm& w : V)
    q.add(composition_from_descents(o.n(), des_p(o, w)),
          TPoly::t_power(finv_count(o, w)));
  return q;
}

QSym schur_to_fundamental(const Partition& la) {
  QSym q(la.size());
  for (const Tableau& t : enumerate_syt(la))
    q.add(composition_from_descents(la.size(), des(t)), TPoly::constant(1));
  return q;
}

namespace {

std::string schur_symbol(const Partition& la) {
  std::string s = "s[";
  const auto& parts = la.parts();
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + "]";
}

bool is_monomial(const TPoly& p, int k) {
  return !p.is_zero() && p.degree() == k &&
         std::count_if(p.coeffs().begin(), p.coeffs().end(),
                       [](long long v) { return v != 0; }) == 1;
}

}  // namespace

std::string SchurExpansion::to_string() const {
  if (coeffs.empty()) return "0";
  // Factor out the shared t-power when every coefficient is a monomial of
  // the same degree, e.g. "t^2*(s[3,2] + s[4,1])".
  int k = coeffs.begin()->second.degree();
  bool factored = k >= 1;
  for (const auto& [la, p] : coeffs)
    if (!is_monomial(p, k)) factored = false;
  if (factored) {
    std::string inner;
    for (const auto& [la, p] : coeffs) {
      if (!inner.empty()) inner += " + ";
      if (p.at(k) != 1) inner += std::to_string(p.at(k)) + "*";
      inner += schur_symbol(la);
    }
    std::string power = "t";
    if (k > 1) power += "^" + std::to_string(k);
    if (coeffs.size() == 1) return power + "*" + inner;
    return power + "*(" + inner + ")";
  }
  std::string s;
  for (const auto& [la, p] : coeffs) {
    if (!s.empty()) s += " + ";
    if (p == TPoly::constant(1))
      s += schur_symbol(la);
    else if (is_monomial(p, p.degree()) && p.degree() == 0)
      s += std::to_string(p.at(0)) + "*" + schur_symbol(la);
    else
      s += "(" + p.to_string() + ")*" + schur_symbol(la);
  }
  return s;
}

QSym SchurExpansion::to_fundamental() const {
  QSym q(n);
  for (const auto& [la, p] : coeffs) q += schur_to_fundamental(la).scaled(p);
  return q;
}

SchurResult expand_in_schur(const QSym& q) {
  SchurResult res;
  res.expansion.n = q.n();
  QSym rest = q;
  while (!rest.is_zero()) {
    // Lex-largest composition with a nonzero coefficient.
    auto it = std::prev(rest.terms().end());
    const Composition& alpha = it->first;
    if (!is_partition_composition(alpha)) {
      res.ok = false;
      res.residual = rest;
      return res;
    }
    Partition la(alpha);
    TPoly c = it->second;
    res.expansion.coeffs[la] = c;
    rest -= schur_to_fundamental(la).scaled(c);
  }
  res.ok = true;
  // Recomposition check; peeling is exact only under triangularity.
  if (res.expansion.to_fundamental() != q)
    throw std::logic_error("schur expansion failed recomposition check");
  return res;
}

bool is_symmetric(const QSym& q) {
  // Monomial coefficients via F_alpha = sum over refinements beta of M_beta.
  std::map<Composition, TPoly> mono;
  for (const Composition& beta : all_compositions(q.n())) {
    TPoly acc;
    for (const auto& [alpha, p] : q.terms())
      if (refines(beta, alpha)) acc += p;
    mono[beta] = acc;
  }
  for (const auto& [beta, p] : mono) {
    Composition sorted = beta;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    if (!(mono.at(sorted) == p)) return false;
  }
  return true;
}

bool is_schur_positive(const SchurExpansion& e) {
  return std::all_of(e.coeffs.begin(), e.coeffs.end(),
                     [](const auto& kv) { return kv.second.nonnegative(); });
}

}  // namespace pknuth
