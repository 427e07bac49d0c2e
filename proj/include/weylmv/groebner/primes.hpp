#pragma once

#include <gmpxx.h>

#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "weylmv/groebner/hilbert.hpp"
#include "weylmv/groebner/interpolate.hpp"

namespace weylmv {

namespace detail {

inline std::optional<Q> rational_sqrt(const Q& q) {
  if (q < 0) return std::nullopt;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Q(rn, rd);
}

// Exact square root of a polynomial, term by term from the lex-leading term.
inline std::optional<MultiPoly> poly_sqrt(const MultiPoly& p) {
  int n = p.nvars();
  if (p.is_zero()) return MultiPoly(n);
  auto [m, c] = p.lead();
  Monomial half;
  for (int v = 0; v < n; ++v) {
    if (m.e[v] % 2) return std::nullopt;
    half.e[v] = static_cast<std::int16_t>(m.e[v] / 2);
  }
  auto rc = rational_sqrt(c);
  if (!rc) return std::nullopt;
  MultiPoly d = MultiPoly::monomial(n, half, *rc);
  const Monomial top = half;
  const Q topc = *rc;
  for (std::size_t step = 0; step <= p.terms().size() + 1; ++step) {
    MultiPoly r = p - d * d;
    if (r.is_zero()) return d;
    auto [rm, rcoef] = r.lead();
    if (!top.divides(rm)) return std::nullopt;
    Monomial t = rm / top;
    if (!(t < top)) return std::nullopt;
    d += MultiPoly::monomial(n, t, rcoef / (2 * topc));
  }
  return std::nullopt;
}

inline MultiPoly primitive_part(const MultiPoly& f, int v) {
  MultiPoly c = content_in(f, v);
  auto q = divide_exact(f, c);
  return q ? *q : f;
}

// f linear in v and primitive there: irreducible.
inline bool linear_primitive_in_some_var(const MultiPoly& f) {
  for (int v = 0; v < f.nvars(); ++v)
    if (f.degree_in(v) == 1 && content_in(f, v).is_constant()) return true;
  return false;
}

}  // namespace detail

// A nonconstant proper factor of f found by monomial content, content in one variable,
// squarefree decomposition, or a quadratic-in-one-variable split; nullopt otherwise.
inline std::optional<MultiPoly> find_factor(const MultiPoly& f) {
  int n = f.nvars();
  if (f.is_constant()) return std::nullopt;
  Monomial mc = f.monomial_content();
  if (!mc.is_one()) {
    MultiPoly rest = *divide_exact(f, MultiPoly::monomial(n, mc));
    for (int v = 0; v < n; ++v)
      if (mc.e[v] && (!rest.is_constant() || mc.degree() > 1)) return MultiPoly::variable(n, v);
  }
  if (f.total_degree() <= 1) return std::nullopt;
  for (int v = 0; v < n; ++v) {
    if (f.degree_in(v) == 0) continue;
    MultiPoly c = detail::content_in(f, v);
    if (!c.is_constant()) return c.monic();
  }
  for (int v = 0; v < n; ++v) {
    if (f.degree_in(v) == 0) continue;
    MultiPoly g = gcd(f, f.derivative(v));
    if (!g.is_constant()) return g.monic();
  }
  if (detail::linear_primitive_in_some_var(f)) return std::nullopt;
  for (int v = 0; v < n; ++v) {
    if (f.degree_in(v) != 2) continue;
    auto u = f.as_univariate(v);
    MultiPoly A = u.count(2) ? u.at(2) : MultiPoly(n);
    MultiPoly B = u.count(1) ? u.at(1) : MultiPoly(n);
    MultiPoly C = u.count(0) ? u.at(0) : MultiPoly(n);
    auto D = detail::poly_sqrt(B * B - Q(4) * A * C);
    if (!D) continue;
    MultiPoly lin = Q(2) * A * MultiPoly::variable(n, v) + B - *D;
    MultiPoly g = detail::primitive_part(lin, v);
    if (g.degree_in(v) == 1 && divide_exact(f, g)) return g.monic();
  }
  return std::nullopt;
}

// Whether find_factor has a proof that f is irreducible (degree one, or linear and
// primitive in some variable).
inline bool certified_irreducible(const MultiPoly& f) {
  if (f.total_degree() == 1) return true;
  return f.monomial_content().is_one() && detail::linear_primitive_in_some_var(f);
}

struct PrimeDecomposition {
  std::vector<PolyIdeal> primes;  // reduced GB generators, sorted by dimension then generators
  std::vector<int> dims;
  bool incomplete = false;
  std::vector<std::string> notes;
};

namespace detail {

inline bool contains_ideal(const GroebnerBasis& big, const PolyIdeal& small) { return big.contains_all(small.gens); }

}  // namespace detail

// Degree-bounded radical/primality certificate on generic samples of V(P): the
// polynomials of degree <= b vanishing on them must be exactly P_{<=b}. Since P_{<=b}
// vanishes there, it suffices that the evaluation matrix has rank equal to the number
// of standard monomials of degree <= b (grevlex is degree compatible). The rank is
// bounded below modulo a large prime; the exact interpolation is the slow fallback.
inline bool certify_prime_by_sampling(const PolyIdeal& P, Rng& rng, const GroebnerBudget& b = {}) {
  GroebnerBasis g = groebner(P, b);
  if (g.is_unit()) return false;
  for (const auto& f : g.polys())
    if (find_factor(f)) return false;
  GenericPointSampler sampler(P, b);
  int bound = 1;
  for (const auto& f : g.polys()) bound = std::max(bound, f.total_degree());
  int n = P.ring.nvars();
  auto mons = monomials_up_to(n, bound);
  GroebnerBasis gd = buchberger(P.gens, n, TermOrder::grevlex(n), b);
  auto lead = gd.leading_monomials();
  int standard = 0;
  for (const auto& m : mons) {
    bool in = false;
    for (const auto& l : lead)
      if (l.divides(m)) in = true;
    if (!in) ++standard;
  }
  int need = standard + 8;
  std::vector<std::vector<Q>> pts;
  for (int i = 0; i < need; ++i) {
    auto p = sampler.sample(rng);
    if (!p) return false;
    pts.push_back(*p);
  }
  QMatrix ev(need, static_cast<int>(mons.size()));
  for (int i = 0; i < need; ++i)
    for (std::size_t j = 0; j < mons.size(); ++j) ev(i, static_cast<int>(j)) = eval_monomial(mons[j], pts[i]);
  auto r = rank_mod_p(ev);
  if (r && *r == standard) return true;
  PolyIdeal J = vanishing_ideal_interpolate(pts, bound, P.ring);
  return g.contains_all(J.gens);
}

// Minimal primes by splitting V(J) = V(J + (f)) u V(J : f^inf) on factors of GB elements.
inline PrimeDecomposition minimal_primes_desk(const PolyIdeal& I, Rng& rng, const GroebnerBudget& b = {}) {
  PrimeDecomposition out;
  std::vector<std::pair<PolyIdeal, GroebnerBasis>> found;
  std::deque<PolyIdeal> queue{I};
  long steps = 0;
  while (!queue.empty()) {
    if (++steps > 20000) throw BudgetExceeded("minimal_primes_desk: splitting step cap exceeded");
    PolyIdeal J = queue.front();
    queue.pop_front();
    GroebnerBasis g = groebner(J, b);
    if (g.is_unit()) continue;
    bool pruned = false;
    for (const auto& [P, pg] : found)
      if (detail::contains_ideal(g, P)) pruned = true;
    if (pruned) continue;
    std::optional<MultiPoly> split;
    for (const auto& f : g.polys()) {
      auto fac = find_factor(f);
      if (fac) {
        split = *fac;
        break;
      }
    }
    PolyIdeal red = ideal_from_basis(J.ring, g);
    if (split) {
      queue.push_back(ideal_sum(red, {*split}));
      queue.push_back(saturation(red, *split, b));
      continue;
    }
    found.emplace_back(red, g);
  }
  // keep minimal elements under inclusion, dedup equal ideals
  std::vector<bool> keep(found.size(), true);
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 0; j < found.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      bool j_in_i = detail::contains_ideal(found[i].second, found[j].first);
      bool i_in_j = detail::contains_ideal(found[j].second, found[i].first);
      if (j_in_i && (!i_in_j || j < i)) keep[i] = false;
    }
  std::vector<std::pair<int, PolyIdeal>> kept;
  for (std::size_t i = 0; i < found.size(); ++i)
    if (keep[i]) kept.emplace_back(dimension(found[i].second), found[i].first);
  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b2) {
    if (a.first != b2.first) return a.first > b2.first;
    return a.second.rendered_gens() < b2.second.rendered_gens();
  });
  for (auto& [dim, P] : kept) {
    bool ok = false;
    try {
      ok = certify_prime_by_sampling(P, rng, b);
    } catch (const BudgetExceeded&) {
      ok = false;
    }
    if (!ok) {
      out.incomplete = true;
      out.notes.push_back("uncertified component of dimension " + std::to_string(dim));
    }
    out.primes.push_back(P);
    out.dims.push_back(dim);
  }
  return out;
}

}  // namespace weylmv
