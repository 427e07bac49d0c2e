#pragma once

#include <vector>

#include "weylmv/core/multipoly.hpp"
#include "weylmv/core/rational.hpp"
#include "weylmv/polyalg/torus.hpp"

namespace weylmv::testing {

inline constexpr int kTrials = 1000;

// Random polynomial with up to `terms` terms of total degree <= maxdeg.
inline MultiPoly random_poly(Rng& rng, int nvars, int maxdeg, int terms, long height = 4) {
  MultiPoly p(nvars);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    int budget = static_cast<int>(uniform_int(rng, 0, maxdeg));
    for (int k = 0; k < budget; ++k) ++m.e[uniform_int(rng, 0, nvars - 1)];
    p.add_term(m, random_q(rng, height));
  }
  return p;
}

inline MultiPoly random_nonzero_poly(Rng& rng, int nvars, int maxdeg, int terms) {
  for (;;) {
    MultiPoly p = random_poly(rng, nvars, maxdeg, terms);
    if (!p.is_zero()) return p;
  }
}

inline Perm random_perm(Rng& rng, int d) {
  Perm w = identity_perm(d);
  std::shuffle(w.begin(), w.end(), rng);
  return w;
}

inline std::vector<Q> random_point(Rng& rng, int n, long height = 9) {
  std::vector<Q> p(n);
  for (auto& x : p) x = random_q(rng, height, 3);
  return p;
}

}  // namespace weylmv::testing
