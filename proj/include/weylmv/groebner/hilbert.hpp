#pragma once

#include <map>
#include <vector>

#include "weylmv/groebner/ideal.hpp"

namespace weylmv {

struct MonomialIdeal {
  int nvars = 0;
  std::vector<Monomial> gens;  // minimal, sorted

  static MonomialIdeal from(int nvars, std::vector<Monomial> gens) {
    std::vector<Monomial> minimal;
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
      return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
    });
    for (const auto& m : gens) {
      bool redundant = false;
      for (const auto& k : minimal)
        if (k.divides(m)) redundant = true;
      if (!redundant) minimal.push_back(m);
    }
    std::sort(minimal.begin(), minimal.end());
    return {nvars, minimal};
  }
  bool contains(const Monomial& m) const {
    for (const auto& g : gens)
      if (g.divides(m)) return true;
    return false;
  }
};

inline MonomialIdeal initial_ideal(const GroebnerBasis& g) {
  return MonomialIdeal::from(g.nvars(), g.leading_monomials());
}

// Finely graded K-polynomial: coefficient of t^m.
using KPoly = std::map<Monomial, long>;

inline void kpoly_add(KPoly& k, const Monomial& m, long c) {
  if (!c) return;
  long& v = k[m];
  v += c;
  if (!v) k.erase(m);
}

// Inclusion-exclusion over generator subsets; exponential, capped at 2^max_gens subsets.
inline KPoly k_polynomial_naive(const MonomialIdeal& M, int max_gens = 22) {
  int k = static_cast<int>(M.gens.size());
  if (k > max_gens) throw BudgetExceeded("k_polynomial: too many generators for subset expansion");
  KPoly out;
  for (unsigned long s = 0; s < (1ul << k); ++s) {
    Monomial l;
    int bits = 0;
    for (int i = 0; i < k; ++i)
      if (s >> i & 1ul) {
        l = Monomial::lcm(l, M.gens[i]);
        ++bits;
      }
    kpoly_add(out, l, bits % 2 ? -1 : 1);
  }
  return out;
}

// K(M + (m)) = K(M) - t^m K(M : m).
inline KPoly k_polynomial(const MonomialIdeal& M) {
  KPoly out;
  if (M.gens.empty()) {
    kpoly_add(out, Monomial{}, 1);
    return out;
  }
  for (const auto& g : M.gens)
    if (g.is_one()) return out;
  // all generators are single variables: product of (1 - t_i)
  bool linear = true;
  for (const auto& g : M.gens)
    if (g.degree() != 1) linear = false;
  if (linear) {
    kpoly_add(out, Monomial{}, 1);
    for (const auto& g : M.gens) {
      KPoly next;
      for (const auto& [m, c] : out) {
        kpoly_add(next, m, c);
        kpoly_add(next, m * g, -c);
      }
      out = std::move(next);
    }
    return out;
  }
  // split off the last generator of highest degree
  std::size_t pivot = 0;
  for (std::size_t i = 0; i < M.gens.size(); ++i)
    if (M.gens[i].degree() >= M.gens[pivot].degree()) pivot = i;
  const Monomial m = M.gens[pivot];
  std::vector<Monomial> rest, quot;
  for (std::size_t i = 0; i < M.gens.size(); ++i)
    if (i != pivot) {
      rest.push_back(M.gens[i]);
      quot.push_back(M.gens[i] / Monomial::gcd(M.gens[i], m));
    }
  KPoly a = k_polynomial(MonomialIdeal::from(M.nvars, rest));
  KPoly b = k_polynomial(MonomialIdeal::from(M.nvars, quot));
  out = a;
  for (const auto& [mm, c] : b) kpoly_add(out, mm * m, -c);
  return out;
}

// Coarsen t^m to the torus grading: t^m -> weight sum_i m_i wt(x_i).
inline std::map<TorusWeight, long> coarsen(const KPoly& k, const CoordRing& ring) {
  std::map<TorusWeight, long> out;
  for (const auto& [m, c] : k) {
    TorusWeight w = TorusWeight::zero(ring.torus_dim());
    for (int v = 0; v < ring.nvars(); ++v)
      for (int e = 0; e < m.e[v]; ++e) w = w + ring.weights[v];
    long& x = out[w];
    x += c;
    if (!x) out.erase(w);
  }
  return out;
}

// Lowest nonvanishing term of sum a_m exp(-<m,z>): ((-1)^c / c!) sum a_m <m,z>^c, c = codim.
// Terms are first collected by torus weight, so each distinct <m,z> is powered once.
inline MultiPoly multidegree_of_kpoly(const KPoly& k, const CoordRing& ring, int codim) {
  int tn = ring.torus_dim() + 1;
  std::vector<std::pair<MultiPoly, Q>> lins;
  for (const auto& [w, c] : coarsen(k, ring)) lins.emplace_back(w.to_poly(), Q(c));
  std::vector<MultiPoly> pw(lins.size(), MultiPoly(tn, Q(1)));
  for (int deg = 0; deg <= codim; ++deg) {
    MultiPoly s(tn);
    for (std::size_t i = 0; i < lins.size(); ++i) {
      if (deg > 0) pw[i] *= lins[i].first;
      s += lins[i].second * pw[i];
    }
    if (deg < codim) {
      if (!s.is_zero()) throw CertificationError("multidegree: lower-degree term does not vanish");
      continue;
    }
    Q fact = 1;
    for (int i = 2; i <= codim; ++i) fact *= i;
    Q scale = (codim % 2 ? Q(-1) : Q(1)) / fact;
    return scale * s;
  }
  return MultiPoly(tn);
}

inline MultiPoly multidegree(const GroebnerBasis& g, const CoordRing& ring) {
  for (const auto& w : ring.weights)
    if (w.is_zero()) throw DomainError("multidegree: variable with zero weight");
  if (g.is_unit()) return MultiPoly(ring.torus_dim() + 1);
  int codim = ring.nvars() - dimension(g);
  return multidegree_of_kpoly(k_polynomial(initial_ideal(g)), ring, codim);
}

inline MultiPoly multidegree(const PolyIdeal& I, const GroebnerBudget& b = {}) {
  return multidegree(groebner(I, b), I.ring);
}

}  // namespace weylmv
