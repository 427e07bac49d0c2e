#pragma once

#include <map>
#include <vector>

#include "weylmv/core/matrix.hpp"
#include "weylmv/core/relations.hpp"
#include "weylmv/symgrp/composition.hpp"
#include "weylmv/symgrp/specht.hpp"

namespace weylmv {

// Averaging projector (1/#S_c) sum_{y in S_c} rho(y).
inline QMatrix young_projector(const SdModule& v, const Composition& c) {
  if (c.ghost) throw DomainError("projector onto ghost composition");
  auto sub = young_subgroup(c);
  QMatrix p(v.dim, v.dim);
  for (const auto& y : sub) p = p + v.rho(y);
  return Q(1, static_cast<unsigned long>(sub.size())) * p;
}

// Invariant subspaces V^{S_c} for every c in P_{n,d}, as basis columns.
struct InvariantTower {
  SdModule module;
  int n = 0;
  std::vector<Composition> comps;
  std::map<Composition, QMatrix> basis;
  std::map<Composition, QMatrix> projector;

  int dim(const Composition& c) const { return basis.at(c).cols(); }
  int d() const { return module.d; }
};

inline bool is_invariant_basis(const SdModule& v, const Composition& c, const QMatrix& b) {
  auto blocks = block_of_positions(c.parts);
  for (int a = 1; a < v.d; ++a)
    if (blocks[a - 1] == blocks[a] && !(v.gens[a - 1] * b == b)) return false;
  return true;
}

inline InvariantTower build_tower(const SdModule& v, int n) {
  InvariantTower t;
  t.module = v;
  t.n = n;
  t.comps = compositions(n, v.d);
  for (const auto& c : t.comps) {
    QMatrix p = young_projector(v, c);
    QMatrix b = column_space_basis(p);
    if (!is_invariant_basis(v, c, b)) throw CertificationError("tower: projector image not invariant");
    t.projector.emplace(c, p);
    t.basis.emplace(c, b);
  }
  return t;
}

// Tower with caller-supplied bases; each must span exactly the invariant space.
inline InvariantTower build_tower(const SdModule& v, int n, const std::map<Composition, QMatrix>& bases) {
  InvariantTower t = build_tower(v, n);
  for (const auto& c : t.comps) {
    const QMatrix& b = bases.at(c);
    if (!is_invariant_basis(v, c, b) || rank(b) != b.cols() || b.cols() != t.basis.at(c).cols())
      throw CertificationError("tower: supplied basis does not span the invariant space");
    t.basis[c] = b;
  }
  return t;
}

// Averaging over S_target.
inline QMatrix psi(const InvariantTower& t, const Composition& target, const QMatrix& v) {
  return t.projector.at(target) * v;
}

namespace detail {

// Matrix of coeff * Psi_target restricted to V^{S_source} in the tower bases.
inline QMatrix symmetrizer_matrix(const InvariantTower& t, const Composition& source, const Composition& target,
                                  const Q& coeff) {
  QMatrix img = coeff * (t.projector.at(target) * t.basis.at(source));
  auto m = solve(t.basis.at(target), img);
  if (!m) throw CertificationError("symmetrizer image outside the target invariant space");
  return *m;
}

}  // namespace detail

// d_{a+1} * Psi : V^{S_c} -> V^{S_{e_a c}}.
inline QMatrix chev_E(const InvariantTower& t, int a, const Composition& c) {
  Composition target = e_tilde(a, c);
  if (target.ghost) throw DomainError("chev_E: ghost target");
  return detail::symmetrizer_matrix(t, c, target, Q(c[a + 1]));
}

// d_a * Psi : V^{S_c} -> V^{S_{f_a c}}.
inline QMatrix chev_F(const InvariantTower& t, int a, const Composition& c) {
  Composition target = f_tilde(a, c);
  if (target.ghost) throw DomainError("chev_F: ghost target");
  return detail::symmetrizer_matrix(t, c, target, Q(c[a]));
}

// Operators on dual invariant spaces as transposes of rescaled F (for E) and E (for F).
inline QMatrix dual_chev(const InvariantTower& t, int a, const Composition& c, Which which) {
  if (which == Which::E) {
    Composition target = e_tilde(a, c);
    if (target.ghost) throw DomainError("dual_chev: ghost target");
    Q s(c[a + 1], c[a] + 1);
    s.canonicalize();
    return (s * chev_F(t, a, target)).transpose();
  }
  Composition target = f_tilde(a, c);
  if (target.ghost) throw DomainError("dual_chev: ghost target");
  Q s(c[a], c[a + 1] + 1);
  s.canonicalize();
  return (s * chev_E(t, a, target)).transpose();
}

// 1 - E_a F_a on the 1^d block (n = d).
inline QMatrix weight_zero_T(const InvariantTower& t, int a) {
  Composition one = Composition::ones(t.d());
  if (t.n != t.d()) throw DomainError("weight_zero_T needs n = d");
  Composition lo = f_tilde(a, one);
  return QMatrix::identity(t.dim(one)) - chev_E(t, a, lo) * chev_F(t, a, one);
}

// 1 - EF - FE + (1/2) E F F E on the 1^d block.
inline QMatrix weight_zero_T_full(const InvariantTower& t, int a) {
  Composition one = Composition::ones(t.d());
  Composition lo = f_tilde(a, one), hi = e_tilde(a, one);
  QMatrix ef = chev_E(t, a, lo) * chev_F(t, a, one);
  QMatrix fe = chev_F(t, a, hi) * chev_E(t, a, one);
  QMatrix effe = chev_E(t, a, lo) * chev_F(t, a, one) * chev_F(t, a, hi) * chev_E(t, a, one);
  return QMatrix::identity(t.dim(one)) - ef - fe + Q(1, 2) * effe;
}

// Block layout of the direct sum over compositions.
struct BlockLayout {
  std::vector<Composition> comps;
  std::map<Composition, int> offset;
  std::map<Composition, int> size;
  int total = 0;
};

inline BlockLayout layout_of(const InvariantTower& t) {
  BlockLayout l;
  l.comps = t.comps;
  for (const auto& c : t.comps) {
    l.offset[c] = l.total;
    l.size[c] = t.dim(c);
    l.total += t.dim(c);
  }
  return l;
}

// Global E_a or F_a on the direct sum of invariant spaces.
inline QMatrix global_operator(const InvariantTower& t, const BlockLayout& l, int a, Which which) {
  QMatrix g(l.total, l.total);
  for (const auto& c : t.comps) {
    Composition target = which == Which::E ? e_tilde(a, c) : f_tilde(a, c);
    if (target.ghost || l.size.at(c) == 0 || l.size.at(target) == 0) continue;
    QMatrix m = which == Which::E ? chev_E(t, a, c) : chev_F(t, a, c);
    g.set_block(l.offset.at(target), l.offset.at(c), m);
  }
  return g;
}

// H_a acting by d_a - d_{a+1} on each block.
inline QMatrix global_cartan(const BlockLayout& l, int a) {
  QMatrix g(l.total, l.total);
  for (const auto& c : l.comps)
    for (int i = 0; i < l.size.at(c); ++i) g(l.offset.at(c) + i, l.offset.at(c) + i) = c[a] - c[a + 1];
  return g;
}

}  // namespace weylmv
