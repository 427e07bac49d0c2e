#pragma once

#include <optional>
#include <vector>

#include "weylmv/core/matrix.hpp"
#include "weylmv/core/rational.hpp"
#include "weylmv/groebner/ideal.hpp"

namespace weylmv {

// Monomials of total degree <= bound in n variables, graded then lex.
inline std::vector<Monomial> monomials_up_to(int n, int bound) {
  std::vector<Monomial> out{Monomial{}};
  std::vector<Monomial> layer{Monomial{}};
  for (int deg = 1; deg <= bound; ++deg) {
    std::vector<Monomial> next;
    for (const auto& m : layer) {
      int last = 0;
      for (int v = 0; v < n; ++v)
        if (m.e[v]) last = v;
      for (int v = last; v < n; ++v) next.push_back(m * unit_monomial(v));
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

inline Q eval_monomial(const Monomial& m, const std::vector<Q>& pt) {
  Q r = 1;
  for (std::size_t v = 0; v < pt.size(); ++v)
    for (int k = 0; k < m.e[v]; ++k) r *= pt[v];
  return r;
}

// All polynomials of degree <= bound vanishing on the points (a basis of that space).
inline PolyIdeal vanishing_ideal_interpolate(const std::vector<std::vector<Q>>& points, int degree_bound,
                                            const CoordRing& ring) {
  if (degree_bound < 1) throw DomainError("interpolate: degree bound must be positive");
  int n = ring.nvars();
  auto mons = monomials_up_to(n, degree_bound);
  QMatrix ev(static_cast<int>(points.size()), static_cast<int>(mons.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (static_cast<int>(points[i].size()) != n) throw CompositionError("interpolate: point outside the ring");
    for (std::size_t j = 0; j < mons.size(); ++j) ev(static_cast<int>(i), static_cast<int>(j)) = eval_monomial(mons[j], points[i]);
  }
  QMatrix ker = nullspace(ev);
  PolyIdeal I{ring, {}};
  for (int k = 0; k < ker.cols(); ++k) {
    MultiPoly f(n);
    for (std::size_t j = 0; j < mons.size(); ++j)
      if (ker(static_cast<int>(j), k) != 0) f.add_term(mons[j], ker(static_cast<int>(j), k));
    I.gens.push_back(f);
  }
  return I;
}

namespace detail {

// Rational roots of a univariate polynomial (variable v) by the rational root theorem,
// only attempted for small integer-clearable coefficients.
inline std::optional<Q> single_rational_root(const MultiPoly& f, int v) {
  if (f.degree_in(v) == 1) {
    auto u = f.as_univariate(v);
    Q a = u.count(1) ? u.at(1).constant_term() : Q(0);
    Q b = u.count(0) ? u.at(0).constant_term() : Q(0);
    if (a == 0) return std::nullopt;
    return -b / a;
  }
  return std::nullopt;
}

}  // namespace detail

// Points of V(I) sampled through a lex basis with the independent variables least
// significant: independent coordinates are random, the others are solved one at a time
// from equations that must be linear after substitution. Returns nullopt when the
// basis is not triangular-linear (no rational parametrization of this shape).
class GenericPointSampler {
 public:
  GenericPointSampler(const PolyIdeal& I, const GroebnerBudget& b = {}) : ring_(I.ring) {
    GroebnerBasis g = groebner(I, b);
    if (g.is_unit()) throw DomainError("sampler: empty variety");
    free_ = independent_set(g.leading_monomials(), ring_.nvars());
    std::vector<int> pri;
    for (int v = ring_.nvars() - 1; v >= 0; --v)
      if (std::find(free_.begin(), free_.end(), v) == free_.end()) pri.push_back(v);
    bound_.assign(pri.rbegin(), pri.rend());  // solve order: least significant dependent first
    for (int v = ring_.nvars() - 1; v >= 0; --v)
      if (std::find(free_.begin(), free_.end(), v) != free_.end()) pri.push_back(v);
    lex_ = buchberger(I.gens, ring_.nvars(), TermOrder::lex(pri), b).polys();
  }

  const std::vector<int>& free_vars() const { return free_; }

  std::optional<std::vector<Q>> sample(Rng& rng, int attempts = 20, long height = 20) const {
    int n = ring_.nvars();
    for (int t = 0; t < attempts; ++t) {
      std::vector<std::optional<Q>> val(n);
      for (int v : free_) val[v] = Q(uniform_int(rng, -height, height));
      bool ok = true;
      for (int v : bound_) {
        std::vector<MultiPoly> eqs;
        for (const auto& f : lex_) {
          if (f.degree_in(v) == 0) continue;
          bool others_known = true;
          for (int w = 0; w < n; ++w)
            if (w != v && !val[w] && f.degree_in(w) > 0) others_known = false;
          if (!others_known) continue;
          MultiPoly s = f;
          for (int w = 0; w < n; ++w)
            if (val[w]) s = s.specialize(w, *val[w]);
          if (!s.is_zero()) eqs.push_back(s);
        }
        MultiPoly g(n);
        for (const auto& e : eqs) g = g.is_zero() ? e : gcd(g, e);
        if (g.is_zero() || g.degree_in(v) != 1) {
          if (!g.is_zero() && g.degree_in(v) > 1) return std::nullopt;
          ok = false;
          break;
        }
        auto r = detail::single_rational_root(g, v);
        if (!r) {
          ok = false;
          break;
        }
        val[v] = *r;
      }
      if (!ok) continue;
      std::vector<Q> pt(n);
      for (int v = 0; v < n; ++v) pt[v] = *val[v];
      bool on = true;
      for (const auto& f : lex_)
        if (f.evaluate(pt) != 0) on = false;
      if (on) return pt;
    }
    return std::nullopt;
  }

 private:
  CoordRing ring_;
  std::vector<int> free_, bound_;
  std::vector<MultiPoly> lex_;
};

}  // namespace weylmv
