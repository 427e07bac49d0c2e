#pragma once

#include <map>
#include <vector>

#include "weylmv/core/matrix.hpp"
#include "weylmv/symgrp/partition.hpp"
#include "weylmv/symgrp/perm.hpp"

namespace weylmv {

// Finite-dimensional S_d-module given by generator matrices (left action).
struct SdModule {
  int d = 0;
  int dim = 0;
  std::vector<QMatrix> gens;  // gens[a-1] = rho(s_a)

  QMatrix rho(const Perm& w) const { return rep_matrix(gens, dim, w); }
  bool coxeter_ok() const { return coxeter_relations_hold(gens, dim); }
};

struct SpechtModule : SdModule {
  Partition shape;
  std::vector<StandardTableau> basis;  // index of basis vector e_T
};

// Regular representation: basis [w] in all_perms order, rho(v)[w] = [w v^{-1}].
inline SdModule regular_module(int d) {
  auto perms = all_perms(d);
  std::map<Perm, int> idx;
  for (std::size_t i = 0; i < perms.size(); ++i) idx[perms[i]] = static_cast<int>(i);
  SdModule m{d, static_cast<int>(perms.size()), {}};
  for (int a = 1; a < d; ++a) {
    QMatrix g(m.dim, m.dim);
    Perm s = simple_reflection(d, a);
    for (std::size_t i = 0; i < perms.size(); ++i) g(idx[compose(perms[i], s)], static_cast<int>(i)) = 1;
    m.gens.push_back(g);
  }
  return m;
}

namespace detail {

using Tabloid = std::vector<int>;  // row of entry x at index x-1

struct TabloidSpace {
  std::map<Tabloid, int> index;
  int add(const Tabloid& t) {
    auto [it, inserted] = index.try_emplace(t, static_cast<int>(index.size()));
    return it->second;
  }
};

// Polytabloid of a (not necessarily standard) filling given as rows.
inline std::map<Tabloid, int> polytabloid(const std::vector<std::vector<int>>& rows, int d) {
  std::vector<std::vector<int>> cols;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (cols.size() <= j) cols.resize(j + 1);
      cols[j].push_back(rows[i][j]);
    }
  std::map<Tabloid, int> out;
  std::vector<Perm> colperms(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) colperms[j] = identity_perm(static_cast<int>(cols[j].size()));
  for (;;) {
    Tabloid t(d);
    int sign = 1;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      sign *= perm_sign(colperms[j]);
      for (std::size_t i = 0; i < cols[j].size(); ++i) t[cols[j][colperms[j][i]] - 1] = static_cast<int>(i);
    }
    out[t] += sign;
    std::size_t j = 0;
    while (j < cols.size() && !std::next_permutation(colperms[j].begin(), colperms[j].end())) ++j;
    if (j == cols.size()) break;
  }
  return out;
}

}  // namespace detail

// Specht module in the standard polytabloid basis; matrices found by exact solve.
inline SpechtModule specht_module(const Partition& shape) {
  int d = shape.size();
  SpechtModule m;
  m.d = d;
  m.shape = shape;
  m.basis = standard_tableaux(shape);
  m.dim = static_cast<int>(m.basis.size());
  detail::TabloidSpace space;
  std::vector<std::map<detail::Tabloid, int>> polys;
  for (const auto& t : m.basis) {
    polys.push_back(detail::polytabloid(t.rows, d));
    for (const auto& [tab, c] : polys.back()) space.add(tab);
  }
  auto to_col = [&](const std::map<detail::Tabloid, int>& v, QMatrix& out, int col) {
    for (const auto& [tab, c] : v) out(space.index.at(tab), col) = c;
  };
  // every tabloid of the shape is reachable by permuting, so size the space fully
  for (int a = 1; a < d; ++a)
    for (const auto& t : m.basis) {
      auto rows = t.rows;
      for (auto& r : rows)
        for (auto& x : r)
          if (x == a) x = a + 1;
          else if (x == a + 1) x = a;
      for (const auto& [tab, c] : detail::polytabloid(rows, d)) space.add(tab);
    }
  int n = static_cast<int>(space.index.size());
  QMatrix basis(n, m.dim);
  for (int k = 0; k < m.dim; ++k) to_col(polys[k], basis, k);
  for (int a = 1; a < d; ++a) {
    QMatrix images(n, m.dim);
    for (int k = 0; k < m.dim; ++k) {
      auto rows = m.basis[k].rows;
      for (auto& r : rows)
        for (auto& x : r)
          if (x == a) x = a + 1;
          else if (x == a + 1) x = a;
      to_col(detail::polytabloid(rows, d), images, k);
    }
    auto g = solve(basis, images);
    if (!g) throw CertificationError("specht_module: polytabloid image outside span");
    m.gens.push_back(*g);
  }
  return m;
}

// Murnaghan-Nakayama: chi^lambda at cycle type mu, via beta-set rim hook removal.
inline long mn_character(const Partition& lambda, const std::vector<int>& mu) {
  if (lambda.size() == 0 && mu.empty()) return 1;
  if (mu.empty()) return lambda.size() == 0 ? 1 : 0;
  int k = mu[0];
  std::vector<int> rest(mu.begin() + 1, mu.end());
  int len = lambda.length();
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
  long total = 0;
  for (int i = 0; i < len; ++i) {
    int nb = beta[i] - k;
    if (nb < 0) continue;
    if (std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
    int between = 0;
    for (int b : beta)
      if (b > nb && b < beta[i]) ++between;
    std::vector<int> nbeta = beta;
    nbeta[i] = nb;
    std::sort(nbeta.rbegin(), nbeta.rend());
    std::vector<int> parts(len);
    for (int j = 0; j < len; ++j) parts[j] = nbeta[j] - (len - 1 - j);
    long sub = mn_character(Partition(parts), rest);
    total += (between % 2 ? -1 : 1) * sub;
  }
  return total;
}

inline long mn_character(const Partition& lambda, const Partition& mu) { return mn_character(lambda, mu.parts); }

}  // namespace weylmv
