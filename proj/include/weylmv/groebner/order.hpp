#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "weylmv/core/errors.hpp"
#include "weylmv/core/multipoly.hpp"

namespace weylmv {

// Monomial order on nvars variables. `priority` lists variables from most to least
// significant. Elim compares total degree in the first `block` priority variables first,
// then falls back to grevlex on all variables.
struct TermOrder {
  enum class Kind { GRevLex, Lex, Elim };
  Kind kind = Kind::GRevLex;
  std::vector<int> priority;
  int block = 0;

  int nvars() const { return static_cast<int>(priority.size()); }

  // Variable index 0 is the least significant (x12 < x13 < x23 < ...).
  static TermOrder grevlex(int n) {
    TermOrder o;
    o.priority.resize(n);
    for (int i = 0; i < n; ++i) o.priority[i] = n - 1 - i;
    return o;
  }
  static TermOrder lex(int n) {
    TermOrder o = grevlex(n);
    o.kind = Kind::Lex;
    return o;
  }
  static TermOrder lex(std::vector<int> priority) {
    TermOrder o;
    o.kind = Kind::Lex;
    o.priority = std::move(priority);
    return o;
  }
  // Eliminates the variables in `elim` (they become most significant as a block).
  static TermOrder elimination(int n, const std::vector<int>& elim) {
    TermOrder o;
    o.kind = Kind::Elim;
    o.block = static_cast<int>(elim.size());
    o.priority = elim;
    for (int i = n - 1; i >= 0; --i)
      if (std::find(elim.begin(), elim.end(), i) == elim.end()) o.priority.push_back(i);
    return o;
  }

  // <0, 0, >0 as a is smaller, equal, larger than b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
      case Kind::Lex:
        for (int v : priority)
          if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? -1 : 1;
        return 0;
      case Kind::Elim: {
        int da = 0, db = 0;
        for (int k = 0; k < block; ++k) {
          da += a.e[priority[k]];
          db += b.e[priority[k]];
        }
        if (da != db) return da < db ? -1 : 1;
        return grevlex_compare(a, b);
      }
      case Kind::GRevLex:
      default:
        return grevlex_compare(a, b);
    }
  }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

 private:
  int grevlex_compare(const Monomial& a, const Monomial& b) const {
    int da = 0, db = 0;
    for (int v : priority) {
      da += a.e[v];
      db += b.e[v];
    }
    if (da != db) return da < db ? -1 : 1;
    for (auto it = priority.rbegin(); it != priority.rend(); ++it)
      if (a.e[*it] != b.e[*it]) return a.e[*it] > b.e[*it] ? -1 : 1;
    return 0;
  }
};

using Term = std::pair<Monomial, Q>;

// Polynomial as terms sorted strictly decreasing under an order.
struct GPoly {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  const Monomial& lm() const { return terms.front().first; }
  const Q& lc() const { return terms.front().second; }
  std::size_t size() const { return terms.size(); }
};

inline GPoly to_gpoly(const MultiPoly& f, const TermOrder& o) {
  GPoly g;
  for (const auto& [m, c] : f.terms()) g.terms.emplace_back(m, c);
  std::sort(g.terms.begin(), g.terms.end(), [&](const Term& a, const Term& b) { return o.less(b.first, a.first); });
  return g;
}

inline MultiPoly to_multipoly(const GPoly& g, int nvars) {
  MultiPoly f(nvars);
  for (const auto& [m, c] : g.terms) f.add_term(m, c);
  return f;
}

inline void make_monic(GPoly& g) {
  if (g.is_zero()) return;
  Q inv = 1 / g.lc();
  for (auto& t : g.terms) t.second *= inv;
}

// a - c * m * b, merged in order.
inline GPoly sub_scaled(const GPoly& a, const Q& c, const Monomial& m, const GPoly& b, const TermOrder& o) {
  GPoly r;
  r.terms.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      r.terms.push_back(a.terms[i++]);
      continue;
    }
    Monomial bm = b.terms[j].first * m;
    if (i == a.size()) {
      r.terms.emplace_back(bm, -c * b.terms[j++].second);
      continue;
    }
    int cmp = o.compare(a.terms[i].first, bm);
    if (cmp > 0) {
      r.terms.push_back(a.terms[i++]);
    } else if (cmp < 0) {
      r.terms.emplace_back(bm, -c * b.terms[j++].second);
    } else {
      Q v = a.terms[i].second - c * b.terms[j].second;
      if (v != 0) r.terms.emplace_back(a.terms[i].first, v);
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace weylmv
