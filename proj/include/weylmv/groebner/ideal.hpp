#pragma once

#include <string>
#include <vector>

#include "weylmv/groebner/buchberger.hpp"
#include "weylmv/polyalg/torus.hpp"

namespace weylmv {

// Coordinate ring with torus-weighted variables.
struct CoordRing {
  std::vector<std::string> names;
  std::vector<TorusWeight> weights;
  TermOrder order;

  int nvars() const { return static_cast<int>(names.size()); }
  int torus_dim() const { return weights.empty() ? 0 : weights.front().dim(); }
  MultiPoly var(int i) const { return MultiPoly::variable(nvars(), i); }
  MultiPoly zero() const { return MultiPoly(nvars()); }
  MultiPoly one() const { return MultiPoly(nvars(), Q(1)); }

  // Variables x_ij (i < j) of strictly upper triangular d x d matrices, weight e_i - e_j,
  // listed column by column: x12, x13, x23, x14, ...
  static CoordRing upper_triangular(int d) {
    CoordRing r;
    for (int j = 1; j < d; ++j)
      for (int i = 0; i < j; ++i) {
        r.names.push_back("x" + std::to_string(i + 1) + std::to_string(j + 1));
        r.weights.push_back(TorusWeight::root(d, i, j));
      }
    r.order = TermOrder::grevlex(r.nvars());
    return r;
  }
  // Unweighted ring with names x1..xn (weights zero; multidegrees unavailable).
  static CoordRing plain(int n) {
    CoordRing r;
    for (int i = 0; i < n; ++i) {
      r.names.push_back("x" + std::to_string(i + 1));
      r.weights.push_back(TorusWeight::zero(0));
    }
    r.order = TermOrder::grevlex(n);
    return r;
  }
  CoordRing with_order(TermOrder o) const {
    CoordRing r = *this;
    r.order = std::move(o);
    return r;
  }
  // Index of x_ij (1-based i < j) in upper_triangular numbering.
  static int ut_index(int i, int j) { return (j - 1) * (j - 2) / 2 + (i - 1); }
};

struct PolyIdeal {
  CoordRing ring;
  std::vector<MultiPoly> gens;

  std::vector<std::string> rendered_gens() const {
    std::vector<std::string> out;
    for (const auto& g : gens) out.push_back(g.render(ring.names));
    return out;
  }
};

inline GroebnerBasis groebner(const PolyIdeal& I, const GroebnerBudget& b = {}) {
  return buchberger(I.gens, I.ring.nvars(), I.ring.order, b);
}

inline PolyIdeal ideal_from_basis(const CoordRing& ring, const GroebnerBasis& g) { return {ring, g.polys()}; }

// Krull dimension: largest set of variables containing no leading monomial's support.
inline int dimension_from_leading(const std::vector<Monomial>& lead, int nvars) {
  if (lead.size() == 1 && lead[0].is_one()) return -1;
  std::vector<unsigned> masks;
  for (const auto& m : lead) {
    unsigned s = 0;
    for (int v = 0; v < nvars; ++v)
      if (m.e[v]) s |= 1u << v;
    masks.push_back(s);
  }
  int best = 0;
  for (unsigned u = 0; u < (1u << nvars); ++u) {
    int c = __builtin_popcount(u);
    if (c <= best) continue;
    bool ok = true;
    for (unsigned s : masks)
      if ((s & ~u) == 0) {
        ok = false;
        break;
      }
    if (ok) best = c;
  }
  return best;
}

// Maximal independent set achieving the dimension (first found in mask order).
inline std::vector<int> independent_set(const std::vector<Monomial>& lead, int nvars) {
  int dim = dimension_from_leading(lead, nvars);
  std::vector<unsigned> masks;
  for (const auto& m : lead) {
    unsigned s = 0;
    for (int v = 0; v < nvars; ++v)
      if (m.e[v]) s |= 1u << v;
    masks.push_back(s);
  }
  for (unsigned u = 0; u < (1u << nvars); ++u) {
    if (__builtin_popcount(u) != dim) continue;
    bool ok = true;
    for (unsigned s : masks)
      if ((s & ~u) == 0) ok = false;
    if (!ok) continue;
    std::vector<int> out;
    for (int v = 0; v < nvars; ++v)
      if (u >> v & 1u) out.push_back(v);
    return out;
  }
  return {};
}

inline int dimension(const GroebnerBasis& g) { return dimension_from_leading(g.leading_monomials(), g.nvars()); }
inline int dimension(const PolyIdeal& I, const GroebnerBudget& b = {}) { return dimension(groebner(I, b)); }

inline bool ideal_contains(const GroebnerBasis& g, const PolyIdeal& J) { return g.contains_all(J.gens); }

inline PolyIdeal ideal_sum(const PolyIdeal& I, const std::vector<MultiPoly>& extra) {
  PolyIdeal r = I;
  r.gens.insert(r.gens.end(), extra.begin(), extra.end());
  return r;
}

// I : f^infinity, by eliminating t from I + (1 - t f).
inline PolyIdeal saturation(const PolyIdeal& I, const MultiPoly& f, const GroebnerBudget& b = {}) {
  int n = I.ring.nvars();
  if (n + 1 > kMaxVars) throw DomainError("saturation: too many variables");
  std::vector<MultiPoly> gens;
  for (const auto& g : I.gens) gens.push_back(g.extend(n + 1));
  MultiPoly t = MultiPoly::variable(n + 1, n);
  gens.push_back(MultiPoly(n + 1, Q(1)) - t * f.extend(n + 1));
  TermOrder o = TermOrder::elimination(n + 1, {n});
  GroebnerBasis g = buchberger(gens, n + 1, o, b);
  PolyIdeal r{I.ring, {}};
  for (const auto& p : g.gpolys()) {
    if (p.lm().e[n] != 0) continue;
    bool free = true;
    for (const auto& [m, c] : p.terms)
      if (m.e[n]) free = false;
    if (!free) continue;
    MultiPoly q(n);
    for (const auto& [m, c] : p.terms) q.add_term(m, c);
    r.gens.push_back(q);
  }
  return r;
}

// Mutual containment of ideals given by generators.
inline bool same_ideal(const PolyIdeal& I, const PolyIdeal& J, const GroebnerBudget& b = {}) {
  return groebner(I, b).contains_all(J.gens) && groebner(J, b).contains_all(I.gens);
}

}  // namespace weylmv
