#pragma once

#include <set>
#include <string>
#include <vector>

#include "weylmv/groebner/order.hpp"

namespace weylmv {

struct GroebnerBudget {
  long pair_cap = 100000;       // S-pairs actually reduced
  long monomial_cap = 4000000;  // terms stored across the basis
};

// Reduced Groebner basis; polys are monic and sorted by increasing leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(int nvars, TermOrder order, std::vector<GPoly> polys)
      : nvars_(nvars), order_(std::move(order)), polys_(std::move(polys)) {}

  int nvars() const { return nvars_; }
  const TermOrder& order() const { return order_; }
  const std::vector<GPoly>& gpolys() const { return polys_; }
  std::size_t size() const { return polys_.size(); }
  bool is_unit() const { return polys_.size() == 1 && polys_[0].lm().is_one(); }
  bool is_zero_ideal() const { return polys_.empty(); }

  std::vector<MultiPoly> polys() const {
    std::vector<MultiPoly> out;
    for (const auto& g : polys_) out.push_back(to_multipoly(g, nvars_));
    return out;
  }
  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& g : polys_) out.push_back(g.lm());
    return out;
  }

  GPoly reduce(GPoly f) const;
  MultiPoly normal_form(const MultiPoly& f) const { return to_multipoly(reduce(to_gpoly(f, order_)), nvars_); }
  bool contains(const MultiPoly& f) const { return reduce(to_gpoly(f, order_)).is_zero(); }
  bool contains_all(const std::vector<MultiPoly>& fs) const {
    for (const auto& f : fs)
      if (!contains(f)) return false;
    return true;
  }

 private:
  int nvars_ = 0;
  TermOrder order_;
  std::vector<GPoly> polys_;
};

namespace detail {

// Full reduction of f by basis g (every term, not only the head).
inline GPoly full_reduce(GPoly f, const std::vector<GPoly>& g, const TermOrder& o, long* work = nullptr) {
  GPoly rem;
  while (!f.is_zero()) {
    const Monomial& m = f.lm();
    const GPoly* div = nullptr;
    for (const auto& p : g)
      if (!p.is_zero() && p.lm().divides(m)) {
        div = &p;
        break;
      }
    if (div) {
      Q c = f.lc() / div->lc();
      f = sub_scaled(f, c, m / div->lm(), *div, o);
      if (work) ++*work;
    } else {
      rem.terms.push_back(f.terms.front());
      f.terms.erase(f.terms.begin());
    }
  }
  return rem;
}

inline GPoly s_poly(const GPoly& a, const GPoly& b, const TermOrder& o) {
  Monomial l = Monomial::lcm(a.lm(), b.lm());
  GPoly left = sub_scaled(GPoly{}, Q(-1) / a.lc(), l / a.lm(), a, o);
  return sub_scaled(left, Q(1) / b.lc(), l / b.lm(), b, o);
}

inline bool coprime(const Monomial& a, const Monomial& b) { return Monomial::gcd(a, b).is_one(); }

inline long term_count(const std::vector<GPoly>& g) {
  long n = 0;
  for (const auto& p : g) n += static_cast<long>(p.size());
  return n;
}

// Minimal, interreduced, monic, sorted by leading monomial.
inline std::vector<GPoly> reduce_basis(std::vector<GPoly> g, const TermOrder& o) {
  std::vector<GPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      if (g[j].lm().divides(g[i].lm()) && (!(g[j].lm() == g[i].lm()) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<GPoly> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<GPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    GPoly head;
    head.terms.push_back(minimal[i].terms.front());
    GPoly tail;
    tail.terms.assign(minimal[i].terms.begin() + 1, minimal[i].terms.end());
    GPoly r = full_reduce(tail, others, o);
    head.terms.insert(head.terms.end(), r.terms.begin(), r.terms.end());
    make_monic(head);
    out.push_back(std::move(head));
  }
  std::sort(out.begin(), out.end(), [&](const GPoly& a, const GPoly& b) { return o.less(a.lm(), b.lm()); });
  return out;
}

}  // namespace detail

inline GPoly GroebnerBasis::reduce(GPoly f) const { return detail::full_reduce(std::move(f), polys_, order_); }

// Buchberger with the coprime and chain criteria, normal selection strategy.
inline GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, int nvars, const TermOrder& o,
                                const GroebnerBudget& budget = {}) {
  if (o.nvars() != nvars) throw CompositionError("buchberger: order arity differs from ring");
  std::vector<GPoly> g;
  for (const auto& f : gens) {
    if (f.nvars() != nvars) throw CompositionError("buchberger: generator in a different ring");
    GPoly p = detail::full_reduce(to_gpoly(f, o), g, o);
    if (p.is_zero()) continue;
    make_monic(p);
    if (p.lm().is_one()) return GroebnerBasis(nvars, o, {p});
    g.push_back(std::move(p));
  }
  using Pair = std::pair<int, int>;
  std::set<Pair> pending;
  for (int j = 0; j < static_cast<int>(g.size()); ++j)
    for (int i = 0; i < j; ++i) pending.insert({i, j});
  long reduced = 0;
  auto pair_key = [](int i, int j) { return i < j ? Pair{i, j} : Pair{j, i}; };
  while (!pending.empty()) {
    // normal strategy: smallest lcm under the order
    auto best = pending.begin();
    Monomial best_l = Monomial::lcm(g[best->first].lm(), g[best->second].lm());
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = Monomial::lcm(g[it->first].lm(), g[it->second].lm());
      if (o.less(l, best_l)) {
        best = it;
        best_l = l;
      }
    }
    auto [i, j] = *best;
    pending.erase(best);
    if (detail::coprime(g[i].lm(), g[j].lm())) continue;
    bool chain = false;
    for (int k = 0; k < static_cast<int>(g.size()) && !chain; ++k) {
      if (k == i || k == j || g[k].is_zero()) continue;
      if (g[k].lm().divides(best_l) && !pending.count(pair_key(i, k)) && !pending.count(pair_key(j, k))) chain = true;
    }
    if (chain) continue;
    if (++reduced > budget.pair_cap) throw BudgetExceeded("groebner: S-pair cap exceeded");
    GPoly r = detail::full_reduce(detail::s_poly(g[i], g[j], o), g, o);
    if (r.is_zero()) continue;
    make_monic(r);
    if (r.lm().is_one()) return GroebnerBasis(nvars, o, {r});
    int n = static_cast<int>(g.size());
    g.push_back(std::move(r));
    for (int k = 0; k < n; ++k)
      if (!g[k].is_zero()) pending.insert({k, n});
    if (detail::term_count(g) > budget.monomial_cap) throw BudgetExceeded("groebner: monomial cap exceeded");
  }
  return GroebnerBasis(nvars, o, detail::reduce_basis(std::move(g), o));
}

}  // namespace weylmv
