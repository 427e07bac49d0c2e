#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "weylmv/core/matrix.hpp"
#include "weylmv/symgrp/partition.hpp"
#include "weylmv/symgrp/perm.hpp"
#include "weylmv/symgrp/specht.hpp"

namespace weylmv {

// Integer polynomial in q, coefficient of q^k at index k.
using QPoly = std::vector<long>;

namespace detail {

inline void qpoly_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline void qpoly_add_shifted(QPoly& acc, const QPoly& p, int shift, long scale) {
  if (p.empty() || scale == 0) return;
  if (acc.size() < p.size() + static_cast<std::size_t>(shift)) acc.resize(p.size() + shift, 0);
  for (std::size_t k = 0; k < p.size(); ++k) acc[k + shift] += scale * p[k];
}

}  // namespace detail

// x <= w in Bruhat order: #{j <= i : x(j) >= k} <= #{j <= i : w(j) >= k} for all i, k.
inline bool bruhat_leq(const Perm& x, const Perm& w) {
  int d = static_cast<int>(w.size());
  for (int k = 0; k < d; ++k) {
    int cx = 0, cw = 0;
    for (int i = 0; i < d; ++i) {
      if (x[i] >= k) ++cx;
      if (w[i] >= k) ++cw;
      if (cx > cw) return false;
    }
  }
  return true;
}

// Left descent: l(s_a w) < l(w), i.e. w^{-1}(a-1) > w^{-1}(a) on 0-based values.
inline bool left_descent(const Perm& w, int a) {
  Perm wi = inverse(w);
  return wi[a - 1] > wi[a];
}

inline std::vector<int> left_descent_set(const Perm& w) {
  std::vector<int> out;
  for (int a = 1; a < static_cast<int>(w.size()); ++a)
    if (left_descent(w, a)) out.push_back(a);
  return out;
}

// Kazhdan-Lusztig polynomials P_{x,w} for S_d and the W-graph edge weights mu.
class KLData {
 public:
  explicit KLData(int d) : d_(d), perms_(all_perms(d)) {
    int n = static_cast<int>(perms_.size());
    for (int i = 0; i < n; ++i) index_[perms_[i]] = i;
    len_.resize(n);
    for (int i = 0; i < n; ++i) len_[i] = perm_length(perms_[i]);
    leq_.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) leq_[i][j] = bruhat_leq(perms_[i], perms_[j]);
    P_.assign(n, std::vector<QPoly>(n));
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return len_[a] < len_[b]; });
    for (int w : order) compute_column(w);
  }

  int d() const { return d_; }
  const std::vector<Perm>& perms() const { return perms_; }
  int index(const Perm& w) const { return index_.at(w); }
  int length(int i) const { return len_[i]; }
  bool leq(int x, int w) const { return leq_[x][w]; }
  const QPoly& P(int x, int w) const { return P_[x][w]; }

  // Coefficient of q^{(l(w)-l(x)-1)/2} in P_{x,w} for x < w; zero otherwise.
  long mu(int x, int w) const {
    if (x == w || !leq_[x][w]) return 0;
    int diff = len_[w] - len_[x];
    if (diff % 2 == 0) return 0;
    int k = (diff - 1) / 2;
    const QPoly& p = P_[x][w];
    return k < static_cast<int>(p.size()) ? p[k] : 0;
  }
  // Symmetrized edge weight.
  long mu_sym(int x, int w) const { return len_[x] < len_[w] ? mu(x, w) : mu(w, x); }

 private:
  void compute_column(int w) {
    const Perm& pw = perms_[w];
    int n = static_cast<int>(perms_.size());
    if (len_[w] == 0) {
      P_[w][w] = {1};
      return;
    }
    int s = 0;
    for (int a = 1; a < d_; ++a)
      if (left_descent(pw, a)) {
        s = a;
        break;
      }
    Perm sp = simple_reflection(d_, s);
    int v = index_.at(compose(sp, pw));
    std::vector<int> zs;
    for (int z = 0; z < n; ++z)
      if (z != v && leq_[z][v] && left_descent(perms_[z], s) && mu(z, v) != 0) zs.push_back(z);
    for (int x = 0; x < n; ++x) {
      if (!leq_[x][w]) continue;
      int sx = index_.at(compose(sp, perms_[x]));
      int c = left_descent(perms_[x], s) ? 1 : 0;
      QPoly acc;
      if (leq_[sx][v]) detail::qpoly_add_shifted(acc, P_[sx][v], 1 - c, 1);
      if (leq_[x][v]) detail::qpoly_add_shifted(acc, P_[x][v], c, 1);
      for (int z : zs)
        if (leq_[x][z]) detail::qpoly_add_shifted(acc, P_[x][z], (len_[w] - len_[z]) / 2, -mu(z, v));
      detail::qpoly_trim(acc);
      P_[x][w] = acc;
    }
  }

  int d_;
  std::vector<Perm> perms_;
  std::map<Perm, int> index_;
  std::vector<int> len_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<QPoly>> P_;
};

// Left cells: strongly connected components of y <=_L w, generated by mu(y,w) != 0
// with L(y) not contained in L(w). Each cell sorted by element index; cells sorted
// by their first element.
inline std::vector<std::vector<int>> left_cells(const KLData& kl) {
  int n = static_cast<int>(kl.perms().size());
  std::vector<std::vector<int>> desc(n);
  for (int i = 0; i < n; ++i) desc[i] = left_descent_set(kl.perms()[i]);
  auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int w = 0; w < n; ++w) {
    reach[w][w] = true;
    for (int y = 0; y < n; ++y)
      if (y != w && kl.mu_sym(y, w) != 0 && !subset(desc[y], desc[w])) reach[w][y] = true;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (reach[i][k])
        for (int j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  std::vector<int> cell_of(n, -1);
  std::vector<std::vector<int>> cells;
  for (int i = 0; i < n; ++i) {
    if (cell_of[i] >= 0) continue;
    std::vector<int> c;
    for (int j = 0; j < n; ++j)
      if (reach[i][j] && reach[j][i]) {
        cell_of[j] = static_cast<int>(cells.size());
        c.push_back(j);
      }
    cells.push_back(c);
  }
  return cells;
}

// W-graph module of a left cell: s C_w = -C_w if s in L(w), otherwise
// C_w + sum over y in the cell with s in L(y) of mu(y,w) C_y.
struct CellModule : SdModule {
  std::vector<Perm> elements;
};

inline CellModule cell_module(const KLData& kl, const std::vector<int>& cell) {
  int d = kl.d();
  CellModule m;
  m.d = d;
  m.dim = static_cast<int>(cell.size());
  for (int i : cell) m.elements.push_back(kl.perms()[i]);
  for (int a = 1; a < d; ++a) {
    QMatrix g(m.dim, m.dim);
    for (int c = 0; c < m.dim; ++c) {
      const Perm& w = m.elements[c];
      if (left_descent(w, a)) {
        g(c, c) = -1;
        continue;
      }
      g(c, c) = 1;
      for (int r = 0; r < m.dim; ++r)
        if (r != c && left_descent(m.elements[r], a)) g(r, c) = kl.mu_sym(cell[r], cell[c]);
    }
    m.gens.push_back(g);
  }
  return m;
}

// Robinson-Schensted: (insertion, recording) tableaux of the word w(1) ... w(d), 1-based values.
inline std::pair<StandardTableau, StandardTableau> robinson_schensted(const Perm& w) {
  std::vector<std::vector<int>> P, Qt;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    int x = w[pos] + 1;
    std::size_t row = 0;
    for (;; ++row) {
      if (row == P.size()) {
        P.push_back({x});
        Qt.push_back({static_cast<int>(pos) + 1});
        break;
      }
      auto it = std::upper_bound(P[row].begin(), P[row].end(), x);
      if (it == P[row].end()) {
        P[row].push_back(x);
        Qt[row].push_back(static_cast<int>(pos) + 1);
        break;
      }
      std::swap(*it, x);
    }
  }
  return {StandardTableau(P), StandardTableau(Qt)};
}

// Tableau labelling the elements of one left cell: whichever RS tableau varies
// across the cell (the other is constant on it).
inline std::vector<StandardTableau> cell_labels(const std::vector<Perm>& cell) {
  std::vector<StandardTableau> P, Qt;
  for (const auto& w : cell) {
    auto [p, q] = robinson_schensted(w);
    P.push_back(p);
    Qt.push_back(q);
  }
  bool p_const = std::all_of(P.begin(), P.end(), [&](const auto& t) { return t == P.front(); });
  return p_const ? Qt : P;
}

// First left cell whose module has character chi^lambda.
inline CellModule cell_module_for(const KLData& kl, const Partition& lambda) {
  for (const auto& cell : left_cells(kl)) {
    if (static_cast<long>(cell.size()) != hook_length_count(lambda)) continue;
    CellModule m = cell_module(kl, cell);
    bool match = true;
    for (const auto& [ct, v] : character_by_class(m.gens, m.dim, kl.d()))
      if (v != Q(mn_character(lambda, ct))) match = false;
    if (match) return m;
  }
  throw CertificationError("cell_module_for: no left cell carries the requested character");
}

}  // namespace weylmv
