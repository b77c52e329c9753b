#include "pknuth/insertion.hpp"

#include <algorithm>
#include <stdexcept>

namespace pknuth {

namespace {

constexpr int kNegInf = -(1 << 30);

void validate_input(const UnitIntervalOrder& o, const Word& alpha, const Chain& c) {
  validate_word(alpha, o.n());
  if (!is_chain(o, c)) throw std::invalid_argument("c is not a chain in the order");
  for (int v : c) {
    if (v < 1 || v > o.n()) throw std::invalid_argument("chain entry out of range");
    for (int a : alpha)
      if (a == v) throw std::invalid_argument("word and chain entries must be disjoint");
  }
}

// Engine shared by phi and psi; phi is psi with empty X.
InsertResult run_insertion(const UnitIntervalOrder& o, const std::set<int>& X,
                           const Word& alpha, const Chain& c,
                           std::vector<InsertStep>* trace) {
  validate_input(o, alpha, c);
  const int m = static_cast<int>(alpha.size());

  // Processing order: a[p] is the p-th letter from the right end.
  std::vector<int> a(m + 1, 0);
  for (int p = 1; p <= m; ++p) a[p] = alpha[m - p];
  std::vector<int> b(m + 1, kInf);
  // d[0] is the bottom sentinel; d[1..l] is the chain, ascending.
  std::vector<int> d;
  d.push_back(kNegInf);
  d.insert(d.end(), c.begin(), c.end());

  auto record = [&](InsertStep::Case kind, int p, int r, int h, int q,
                    std::vector<std::pair<int, int>> cand) {
    if (!trace) return;
    InsertStep st;
    st.kind = kind;
    st.p = p;
    st.r = r;
    st.h = h;
    st.q = q;
    st.candidates = std::move(cand);
    st.chain_after.assign(d.begin() + 1, d.end());
    trace->push_back(std::move(st));
  };

  int p = 1;
  while (p <= m) {
    int l = static_cast<int>(d.size()) - 1;
    if (a[p] == kInf) {
      if (X.count(p) && l > 0) {
        b[p] = d[1];
        d.erase(d.begin() + 1);
        record(InsertStep::Case::c3b, p, -1, -1, -1, {});
      } else {
        record(InsertStep::Case::c3a, p, -1, -1, -1, {});
      }
      ++p;
      continue;
    }
    int r = l;
    while (d[r] > a[p]) --r;
    if (d[r] == kNegInf || o.precedes(d[r], a[p])) {
      if (r == l) {
        d.push_back(a[p]);
        record(InsertStep::Case::c1a, p, r, -1, -1, {});
      } else {
        b[p] = d[r + 1];
        d[r + 1] = a[p];
        record(InsertStep::Case::c1b, p, r, -1, -1, {});
      }
      ++p;
      continue;
    }
    // Case 2: a[p] and d[r] are incomparable (r >= 1 here).
    int maxq = 0;
    while (p + maxq + 1 <= m && a[p + maxq + 1] != kInf &&
           a[p + maxq] < a[p + maxq + 1])
      ++maxq;
    std::vector<std::pair<int, int>> A;
    int h = 0, q = 0;
    for (int i = 0; i <= l - r; ++i)
      for (int j = 0; j <= maxq; ++j) {
        std::vector<int> set;
        for (int t = 0; t <= i; ++t) set.push_back(d[r + t]);
        for (int t = 0; t <= j; ++t) set.push_back(a[p + t]);
        std::sort(set.begin(), set.end());
        if (o.is_ladder(set)) A.emplace_back(i, j);
      }
    std::tie(h, q) = *std::max_element(A.begin(), A.end());
    if (a[p + q] < d[r + h]) {
      for (int j = 0; j <= q; ++j) b[p + j] = a[p + j];
      record(InsertStep::Case::c2a, p, r, h, q, std::move(A));
    } else {
      for (int i = 0; i <= h; ++i) {
        int j = -1;
        for (int t = 0; t <= q; ++t)
          if (a[p + t] > d[r + i]) {
            j = t;
            break;
          }
        if (j < 0) throw std::logic_error("insertion rethreading found no start");
        int k;
        if (i == h) {
          k = q;
        } else {
          k = -1;
          for (int t = q - 1; t >= 0; --t)
            if (a[p + t] < d[r + i + 1]) {
              k = t;
              break;
            }
          if (k < 0) throw std::logic_error("insertion rethreading found no end");
        }
        b[p + j] = d[r + i];
        for (int t = j; t <= k - 1; ++t) b[p + t + 1] = a[p + t];
        d[r + i] = a[p + k];
      }
      record(InsertStep::Case::c2b, p, r, h, q, std::move(A));
    }
    p += q + 1;
  }

  InsertResult res;
  res.chain.assign(d.begin() + 1, d.end());
  res.word.assign(m, kInf);
  for (int i = 1; i <= m; ++i) res.word[m - i] = b[i];
  return res;
}

}  // namespace

std::string InsertStep::case_name(Case c) {
  switch (c) {
    case Case::c1a: return "1(a)";
    case Case::c1b: return "1(b)";
    case Case::c2a: return "2(a)";
    case Case::c2b: return "2(b)";
    case Case::c3a: return "3(a)";
    case Case::c3b: return "3(b)";
  }
  return "?";
}

InsertResult phi(const UnitIntervalOrder& o, const Word& alpha, const Chain& c,
                 std::vector<InsertStep>* trace) {
  return run_insertion(o, {}, alpha, c, trace);
}

InsertResult psi(const UnitIntervalOrder& o, const std::set<int>& X, const Word& alpha,
                 const Chain& c, std::vector<InsertStep>* trace) {
  return run_insertion(o, X, alpha, c, trace);
}

Tableau PrsResult::pt() const {
  Tableau t;
  t.columns = pt_columns;
  return t;
}

Tableau PrsResult::qt() const {
  Tableau t;
  t.columns = qt_columns;
  return t;
}

PrsResult prs(const UnitIntervalOrder& o, const Word& w,
              std::vector<std::vector<InsertStep>>* traces) {
  validate_word(w, o.n());
  const int m = static_cast<int>(w.size());
  PrsResult res;
  Word cur = w;
  while (std::any_of(cur.begin(), cur.end(), [](int v) { return v != kInf; })) {
    std::vector<InsertStep> trace;
    InsertResult step = phi(o, cur, {}, traces ? &trace : nullptr);
    if (traces) traces->push_back(std::move(trace));
    res.pt_columns.push_back(step.chain);
    std::vector<int> qt_col;
    for (int p = 1; p <= m; ++p)
      if (cur[m - p] != kInf && step.word[m - p] == kInf) qt_col.push_back(p);
    res.qt_columns.push_back(std::move(qt_col));
    cur = std::move(step.word);
  }

  // Validity of PT: tableau conditions plus content = finite letters of w.
  Tableau pt = res.pt();
  res.pt_valid = is_p_tableau(o, pt);
  if (res.pt_valid) {
    Word expected = strip_inf(w);
    std::sort(expected.begin(), expected.end());
    Word got = reading_word(pt);
    std::sort(got.begin(), got.end());
    res.pt_valid = (expected == got);
  }
  // Validity of QT: standard tableau on the consumed positions.
  Tableau qt = res.qt();
  std::vector<int> positions;
  for (int p = 1; p <= m; ++p)
    if (w[m - p] != kInf) positions.push_back(p);
  res.qt_valid = qt.has_partition_shape();
  if (res.qt_valid) {
    for (size_t k = 0; k + 1 < qt.columns.size() && res.qt_valid; ++k)
      for (size_t r = 0; r < qt.columns[k + 1].size(); ++r)
        if (!(qt.columns[k][r] < qt.columns[k + 1][r])) {
          res.qt_valid = false;
          break;
        }
    Word got = reading_word(qt);
    std::sort(got.begin(), got.end());
    if (got != positions) res.qt_valid = false;
  }
  return res;
}

Word hat_word(const Word& w, int n) {
  Word out(w.rbegin(), w.rend());
  for (int& v : out)
    if (v != kInf) v = n + 1 - v;
  return out;
}

Chain hat_chain(const Chain& c, int n) {
  Chain out(c.rbegin(), c.rend());
  for (int& v : out) v = n + 1 - v;
  return out;
}

Word inverse_prs(const UnitIntervalOrder& o, const Tableau& pt, const Tableau& qt) {
  if (!o.avoids_climbing_patterns())
    throw std::invalid_argument("inverse insertion requires a non-ladder-climbing order");
  auto ps = pt.shape();
  auto qs = qt.shape();
  if (!ps || !qs || !(*ps == *qs))
    throw std::invalid_argument("tableau shapes do not match");
  const int n = o.n();
  if (pt.size() != n) throw std::invalid_argument("tableau size must equal the ground set");
  if (!is_p_tableau(o, pt) || !contains_each_once(pt, n))
    throw std::invalid_argument("first tableau is not a P-tableau");
  if (!is_standard_tableau(qt, n))
    throw std::invalid_argument("second tableau is not standard");

  UnitIntervalOrder ohat = o.hat();
  Word alpha(n, kInf);
  for (int i = static_cast<int>(pt.columns.size()); i >= 1; --i) {
    std::set<int> X;
    for (int x : qt.columns[i - 1]) X.insert(n + 1 - x);
    InsertResult res =
        psi(ohat, X, hat_word(alpha, n), hat_chain(pt.columns[i - 1], n));
    if (!res.chain.empty())
      throw std::runtime_error("inverse insertion left a nonempty chain");
    alpha = hat_word(res.word, n);
  }
  return alpha;
}

}  // namespace pknuth
