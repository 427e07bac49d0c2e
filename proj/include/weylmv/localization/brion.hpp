#pragma once

#include <algorithm>
#include <vector>

#include "weylmv/groebner/hilbert.hpp"
#include "weylmv/polyalg/ratfunc.hpp"

namespace weylmv {

// Coordinate subspace Y of a weighted linear space: the listed coordinates are free,
// all others vanish on Y.
struct CoordinateSubspace {
  CoordRing ambient;
  std::vector<int> free;
};

inline PolyIdeal ideal_of(const CoordinateSubspace& Y) {
  PolyIdeal I{Y.ambient, {}};
  for (int v = 0; v < Y.ambient.nvars(); ++v)
    if (std::find(Y.free.begin(), Y.free.end(), v) == Y.free.end()) I.gens.push_back(Y.ambient.var(v));
  return I;
}

inline MultiPoly weight_product(const CoordRing& ring, const std::vector<int>& vars) {
  MultiPoly p(ring.torus_dim() + 1, Q(1));
  for (int v : vars) {
    if (ring.weights.at(v).is_zero()) throw DomainError("localization: degenerate (zero) weight");
    p *= ring.weights[v].to_poly();
  }
  return p;
}

// e_0(Y) at the smooth fixed point 0: 1 / product of the weights of the free coordinates.
inline RatFunc smooth_point_multiplicity(const CoordinateSubspace& Y) {
  int n = Y.ambient.torus_dim() + 1;
  return RatFunc(MultiPoly(n, Q(1)), weight_product(Y.ambient, Y.free));
}

// e_0(Y) = multidegree(I(Y)) / eu(ambient).
inline RatFunc multiplicity_via_multidegree(const CoordinateSubspace& Y) {
  std::vector<int> all(Y.ambient.nvars());
  for (int v = 0; v < Y.ambient.nvars(); ++v) all[v] = v;
  MultiPoly eu = weight_product(Y.ambient, all);
  return RatFunc(multidegree(ideal_of(Y)), eu);
}

inline bool localization_check(const CoordinateSubspace& Y) {
  return smooth_point_multiplicity(Y) == multiplicity_via_multidegree(Y);
}

}  // namespace weylmv
