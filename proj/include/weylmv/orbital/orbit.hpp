#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "weylmv/groebner/hilbert.hpp"
#include "weylmv/groebner/primes.hpp"
#include "weylmv/polyalg/ratfunc.hpp"
#include "weylmv/symgrp/nilpotent.hpp"
#include "weylmv/symgrp/partition.hpp"

namespace weylmv {

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

// Generic strictly upper triangular matrix over the coordinate ring of u.
inline PolyMatrix generic_upper(const CoordRing& ring, int d) {
  PolyMatrix x(d, std::vector<MultiPoly>(d, ring.zero()));
  for (int j = 1; j < d; ++j)
    for (int i = 0; i < j; ++i) x[i][j] = ring.var(CoordRing::ut_index(i + 1, j + 1));
  return x;
}

inline PolyMatrix poly_matmul(const PolyMatrix& a, const PolyMatrix& b, const MultiPoly& zero) {
  std::size_t n = a.size();
  PolyMatrix c(n, std::vector<MultiPoly>(n, zero));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

// Determinant of the submatrix on rows x cols by cofactor expansion along the first row.
inline MultiPoly poly_minor(const PolyMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols,
                            const MultiPoly& zero) {
  if (rows.size() == 1) return m[rows[0]][cols[0]];
  MultiPoly det = zero;
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const MultiPoly& e = m[rows[0]][cols[c]];
    if (e.is_zero()) continue;
    std::vector<int> sub_cols;
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (k != c) sub_cols.push_back(cols[k]);
    MultiPoly cof = poly_minor(m, sub_rows, sub_cols, zero);
    if (cof.is_zero()) continue;
    if (c % 2) det -= e * cof;
    else det += e * cof;
  }
  return det;
}

namespace detail {

inline std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Rows that are not identically zero, columns likewise: other minors vanish.
inline std::vector<int> nonzero_rows(const PolyMatrix& m) {
  std::vector<int> r;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& e : m[i])
      if (!e.is_zero()) {
        r.push_back(static_cast<int>(i));
        break;
      }
  return r;
}

inline std::vector<int> nonzero_cols(const PolyMatrix& m) {
  std::vector<int> c;
  for (std::size_t j = 0; j < m.size(); ++j)
    for (std::size_t i = 0; i < m.size(); ++i)
      if (!m[i][j].is_zero()) {
        c.push_back(static_cast<int>(j));
        break;
      }
  return c;
}

}  // namespace detail

struct OrbitClosureIdeal {
  Partition lambda;
  PolyIdeal ideal;
};

// Minors of size r_k + 1 of x^k for every k whose rank bound is below the generic rank d - k.
inline OrbitClosureIdeal orbit_ideal(const Partition& lambda) {
  int d = lambda.size();
  if (d < 1 || d > 5) throw DomainError("orbit_ideal: need 1 <= d <= 5");
  CoordRing ring = CoordRing::upper_triangular(d);
  OrbitClosureIdeal out{lambda, {ring, {}}};
  if (d == 1) return out;
  PolyMatrix x = generic_upper(ring, d);
  PolyMatrix xk = x;
  std::vector<MultiPoly> gens;
  for (int k = 1; k < d; ++k) {
    if (k > 1) xk = poly_matmul(xk, x, ring.zero());
    int r = lambda.rank_of_power(k);
    if (r >= d - k) continue;
    auto rows = detail::nonzero_rows(xk), cols = detail::nonzero_cols(xk);
    int size = r + 1;
    if (size > static_cast<int>(rows.size()) || size > static_cast<int>(cols.size())) continue;
    for (const auto& rs : detail::subsets_of_size(static_cast<int>(rows.size()), size))
      for (const auto& cs : detail::subsets_of_size(static_cast<int>(cols.size()), size)) {
        std::vector<int> rr, cc;
        for (int i : rs) rr.push_back(rows[i]);
        for (int j : cs) cc.push_back(cols[j]);
        MultiPoly m = poly_minor(xk, rr, cc, ring.zero());
        if (m.is_zero()) continue;
        m = m.monic();
        if (std::find(gens.begin(), gens.end(), m) == gens.end()) gens.push_back(m);
      }
  }
  out.ideal.gens = std::move(gens);
  return out;
}

// Coordinates x_ij of a strictly upper triangular matrix in ring order.
inline std::vector<Q> upper_coords(const QMatrix& x) {
  int d = x.rows();
  std::vector<Q> v;
  for (int j = 1; j < d; ++j)
    for (int i = 0; i < j; ++i) v.push_back(x(i, j));
  return v;
}

inline QMatrix upper_from_coords(int d, const std::vector<Q>& v) {
  QMatrix x(d, d);
  for (int j = 1; j < d; ++j)
    for (int i = 0; i < j; ++i) x(i, j) = v.at(CoordRing::ut_index(i + 1, j + 1));
  return x;
}

// eu(u) = product of e_i - e_j over i < j, in the torus ring.
inline MultiPoly nilradical_euler(int d) {
  return euler_class(nilradical_weights(std::vector<int>(d, 1)), false, d);
}

struct OrbitalComponent {
  PolyIdeal ideal;
  StandardTableau tableau;
  MultiPoly joseph;
  RatFunc equiv_mult;
  int dim = 0;
};

struct OrbitalDecomposition {
  Partition lambda;
  OrbitClosureIdeal orbit;
  std::vector<OrbitalComponent> components;  // sorted by tableau
  int expected_count = 0;                    // #SYT(lambda) by hook lengths
  MultiPoly orbit_multidegree;
  bool additive = false;
  bool used_fallback = false;
  std::vector<std::string> notes;
};

struct DecomposeOptions {
  GroebnerBudget budget;
  int label_samples = 4;
  int fallback_per_flag = 40;
  int fallback_max_degree = 4;
};

namespace detail {

// Multidegree in the torus ring of rank d; u is a point for d = 1.
inline MultiPoly torus_multidegree(const GroebnerBasis& g, const CoordRing& ring, int d) {
  if (ring.nvars() == 0) return MultiPoly(d + 1, Q(g.is_unit() ? 0 : 1));
  return multidegree(g, ring);
}

inline OrbitalComponent finish_component(PolyIdeal P, StandardTableau T, int d, const GroebnerBudget& b) {
  OrbitalComponent c;
  GroebnerBasis g = groebner(P, b);
  c.dim = dimension(g);
  c.joseph = torus_multidegree(g, P.ring, d);
  c.equiv_mult = RatFunc(c.joseph, nilradical_euler(d));
  c.ideal = ideal_from_basis(P.ring, g);
  c.tableau = std::move(T);
  return c;
}

// Coordinates drawn from [-H, H]: a sample lands on a fixed proper subvariety with
// probability O(deg / H).
inline constexpr long kGenericHeight = 1000000;

// Tableau of generic samples of V(P); nullopt when samples disagree or cannot be drawn.
inline std::optional<StandardTableau> label_by_sampling(const PolyIdeal& P, int d, Rng& rng, int samples,
                                                        const GroebnerBudget& b, std::string& why) {
  GenericPointSampler sampler(P, b);
  std::optional<StandardTableau> label;
  for (int i = 0; i < samples; ++i) {
    auto pt = sampler.sample(rng, 20, kGenericHeight);
    if (!pt) {
      why = "no rational generic point";
      return std::nullopt;
    }
    StandardTableau t = spaltenstein_tableau(upper_from_coords(d, *pt));
    if (label && !(*label == t)) {
      why = "samples disagree: " + label->str() + " vs " + t.str();
      return std::nullopt;
    }
    label = t;
  }
  return label;
}

inline std::vector<OrbitalComponent> decompose_by_splitting(const OrbitClosureIdeal& oi, int target, Rng& rng,
                                                            const DecomposeOptions& opt,
                                                            std::vector<std::string>& notes) {
  int d = oi.lambda.size();
  PrimeDecomposition pd = minimal_primes_desk(oi.ideal, rng, opt.budget);
  for (const auto& n : pd.notes) notes.push_back("splitting: " + n);
  if (pd.incomplete) return {};
  std::vector<OrbitalComponent> out;
  for (std::size_t i = 0; i < pd.primes.size(); ++i) {
    if (pd.dims[i] != target) continue;
    std::string why;
    auto label = label_by_sampling(pd.primes[i], d, rng, opt.label_samples, opt.budget, why);
    if (!label || !(label->shape() == oi.lambda)) {
      notes.push_back("splitting: unlabeled component (" + (why.empty() ? "generic shape differs" : why) + ")");
      return {};
    }
    out.push_back(finish_component(pd.primes[i], *label, d, opt.budget));
  }
  return out;
}

// Bucket orbit samples by tableau and interpolate each bucket with growing degree
// until the interpolant has the orbital dimension.
inline std::vector<OrbitalComponent> decompose_by_interpolation(const OrbitClosureIdeal& oi, int target, Rng& rng,
                                                                const DecomposeOptions& opt,
                                                                std::vector<std::string>& notes) {
  int d = oi.lambda.size();
  const CoordRing& ring = oi.ideal.ring;
  std::map<StandardTableau, std::vector<std::vector<Q>>> buckets;
  for (const auto& x : sample_orbit_points(rng, oi.lambda, opt.fallback_per_flag))
    buckets[spaltenstein_tableau(x)].push_back(upper_coords(x));
  std::vector<OrbitalComponent> out;
  for (const auto& [T, pts] : buckets) {
    bool done = false;
    for (int bound = 1; bound <= opt.fallback_max_degree && !done; ++bound) {
      std::size_t need = monomials_up_to(ring.nvars(), bound).size() + 8;
      if (pts.size() < need) {
        notes.push_back("interpolation: too few samples for " + T.str() + " at degree " + std::to_string(bound));
        break;
      }
      PolyIdeal J = vanishing_ideal_interpolate(pts, bound, ring);
      if (J.gens.empty()) continue;
      if (dimension(J, opt.budget) != target) continue;
      out.push_back(finish_component(J, T, d, opt.budget));
      done = true;
    }
    if (!done) notes.push_back("interpolation: no certified ideal for " + T.str());
  }
  return out;
}

}  // namespace detail

// Top-dimensional components of the closure of O_lambda meet u. Splitting first; stratified
// interpolation if splitting is incomplete or mislabelled. The count must equal #SYT(lambda).
inline OrbitalDecomposition decompose(const Partition& lambda, Rng& rng, const DecomposeOptions& opt = {}) {
  OrbitalDecomposition out;
  out.lambda = lambda;
  out.orbit = orbit_ideal(lambda);
  out.expected_count = static_cast<int>(hook_length_count(lambda));
  int d = lambda.size();
  int target = half_orbit_dim(lambda);
  GroebnerBasis g = groebner(out.orbit.ideal, opt.budget);
  if (dimension(g) != target)
    throw CertificationError("decompose: orbit ideal has dimension " + std::to_string(dimension(g)) + ", expected " +
                             std::to_string(target));
  out.orbit_multidegree = detail::torus_multidegree(g, out.orbit.ideal.ring, d);

  auto comps = detail::decompose_by_splitting(out.orbit, target, rng, opt, out.notes);
  auto certified = [&](const std::vector<OrbitalComponent>& cs) {
    if (static_cast<int>(cs.size()) != out.expected_count) return false;
    std::vector<StandardTableau> labels;
    for (const auto& c : cs) labels.push_back(c.tableau);
    std::sort(labels.begin(), labels.end());
    return labels == standard_tableaux(lambda);
  };
  if (!certified(comps)) {
    out.notes.push_back("splitting gave " + std::to_string(comps.size()) + " labelled components; interpolating");
    out.used_fallback = true;
    comps = detail::decompose_by_interpolation(out.orbit, target, rng, opt, out.notes);
  }
  if (!certified(comps)) {
    std::string msg = "decompose: " + std::to_string(comps.size()) + " components for " + lambda.str() + ", expected " +
                      std::to_string(out.expected_count);
    for (const auto& n : out.notes) msg += "; " + n;
    throw CertificationError(msg);
  }
  std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.tableau < b.tableau; });
  out.components = std::move(comps);
  MultiPoly sum(d + 1);
  for (const auto& c : out.components) sum += c.joseph;
  out.additive = sum == out.orbit_multidegree;
  return out;
}

}  // namespace weylmv
