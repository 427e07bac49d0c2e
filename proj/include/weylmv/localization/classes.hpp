#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "weylmv/core/errors.hpp"
#include "weylmv/core/relations.hpp"
#include "weylmv/polyalg/ratfunc.hpp"
#include "weylmv/polyalg/torus.hpp"
#include "weylmv/symgrp/composition.hpp"

namespace weylmv {

enum class Ambient { Flag, Cotangent, Grothendieck };
enum class Family { Z, X };

inline Ambient ambient_of(Family f) { return f == Family::Z ? Ambient::Cotangent : Ambient::Grothendieck; }

inline const char* to_string(Family f) { return f == Family::Z ? "Z" : "X"; }

// Localized class on a space indexed by a composition: coset key -> coefficient.
struct FixedPointClass {
  Composition comp;
  Ambient ambient = Ambient::Cotangent;
  int d = 0;
  std::map<CosetKey, RatFunc> coeffs;

  RatFunc at(const CosetKey& k) const {
    auto it = coeffs.find(k);
    return it == coeffs.end() ? RatFunc(MultiPoly(d + 1)) : it->second;
  }
  void add(const CosetKey& k, const RatFunc& c) {
    auto it = coeffs.find(k);
    RatFunc v = it == coeffs.end() ? c : it->second + c;
    if (v.is_zero()) {
      if (it != coeffs.end()) coeffs.erase(it);
    } else {
      coeffs[k] = v;
    }
  }
  friend bool operator==(const FixedPointClass& a, const FixedPointClass& b) {
    if (!(a.comp == b.comp) || a.ambient != b.ambient || a.d != b.d) return false;
    std::set<CosetKey> keys;
    for (const auto& [k, v] : a.coeffs) keys.insert(k);
    for (const auto& [k, v] : b.coeffs) keys.insert(k);
    for (const auto& k : keys)
      if (!(a.at(k) == b.at(k))) return false;
    return true;
  }
};

// Point class [wS_c].
inline FixedPointClass point_class(const Composition& c, const Perm& w, Ambient amb) {
  FixedPointClass p{c, amb, static_cast<int>(w.size()), {}};
  p.coeffs.emplace(coset_key(w, c.parts), RatFunc(MultiPoly(p.d + 1, Q(1))));
  return p;
}

// Correspondence class supported on pairs (xS_target, xS_source).
struct CorrClass {
  Composition target, source;
  Family family = Family::Z;
  int d = 0;
  std::map<std::pair<CosetKey, CosetKey>, RatFunc> coeffs;
};

namespace detail {

using RootSet = std::set<TorusWeight>;

inline RootSet as_set(const WeightMultiset& m) { return RootSet(m.begin(), m.end()); }

inline WeightMultiset set_union(const RootSet& a, const RootSet& b) {
  WeightMultiset r(a.begin(), a.end());
  for (const auto& w : b)
    if (!a.count(w)) r.push_back(w);
  return r;
}

// Intersection of parabolic weight multisets: zero weights appear once per diagonal slot.
inline WeightMultiset multiset_intersection(const WeightMultiset& a, const WeightMultiset& b) {
  std::map<TorusWeight, int> ca, cb;
  for (const auto& w : a) ++ca[w];
  for (const auto& w : b) ++cb[w];
  WeightMultiset r;
  for (const auto& [w, k] : ca) {
    auto it = cb.find(w);
    int m = it == cb.end() ? 0 : std::min(k, it->second);
    for (int i = 0; i < m; ++i) r.push_back(w);
  }
  return r;
}

inline std::vector<MultiPoly> weight_polys(const WeightMultiset& m, bool h_shift) {
  std::vector<MultiPoly> out;
  for (const auto& w : m) out.push_back((h_shift ? w.shifted_h() : w).to_poly());
  return out;
}

inline WeightMultiset act(const Perm& x, const WeightMultiset& m) {
  WeightMultiset r;
  for (const auto& w : m) r.push_back(weyl_act(x, w));
  return r;
}

}  // namespace detail

// Euler class of the tangent space at the fixed point xS_c, as its list of linear factors.
inline std::vector<MultiPoly> tangent_factors(const Composition& c, Ambient amb, const Perm& x) {
  WeightMultiset base = detail::act(x, opposite_nilradical_weights(c.parts));
  auto f = detail::weight_polys(base, false);
  if (amb == Ambient::Cotangent) {
    auto g = detail::weight_polys(detail::act(x, nilradical_weights(c.parts)), true);
    f.insert(f.end(), g.begin(), g.end());
  } else if (amb == Ambient::Grothendieck) {
    auto g = detail::weight_polys(detail::act(x, parabolic_weights(c.parts)), true);
    f.insert(f.end(), g.begin(), g.end());
  }
  return f;
}

inline MultiPoly tangent_euler(const Composition& c, Ambient amb, const Perm& x) {
  MultiPoly r(static_cast<int>(x.size()) + 1, Q(1));
  for (const auto& f : tangent_factors(c, amb, x)) r *= f;
  return r;
}

// Denominator weights of the correspondence coefficient at the identity pair.
inline std::vector<MultiPoly> correspondence_factors(const Composition& target, const Composition& source, Family fam,
                                                     const Perm& x) {
  using namespace detail;
  WeightMultiset minus = set_union(as_set(opposite_nilradical_weights(target.parts)),
                                   as_set(opposite_nilradical_weights(source.parts)));
  WeightMultiset shifted;
  if (fam == Family::Z) {
    RootSet a = as_set(nilradical_weights(target.parts)), b = as_set(nilradical_weights(source.parts));
    for (const auto& w : a)
      if (b.count(w)) shifted.push_back(w);
  } else {
    shifted = multiset_intersection(parabolic_weights(target.parts), parabolic_weights(source.parts));
  }
  auto f = weight_polys(act(x, minus), false);
  auto g = weight_polys(act(x, shifted), true);
  f.insert(f.end(), g.begin(), g.end());
  return f;
}

inline CorrClass correspondence(const Composition& target, const Composition& source, Family fam) {
  if (target.ghost || source.ghost) throw DomainError("correspondence with ghost composition");
  if (target.total() != source.total() || target.n() != source.n())
    throw CompositionError("correspondence: compositions of different shapes");
  int d = source.total();
  CorrClass z{target, source, fam, d, {}};
  for (const auto& x : all_perms(d)) {
    auto key = std::make_pair(coset_key(x, target.parts), coset_key(x, source.parts));
    if (z.coeffs.count(key)) continue;
    z.coeffs.emplace(key, RatFunc::from_factors(MultiPoly(d + 1, Q(1)), correspondence_factors(target, source, fam, x)));
  }
  return z;
}

inline CorrClass corr_Z(const Composition& target, const Composition& source) {
  return correspondence(target, source, Family::Z);
}
inline CorrClass corr_X(const Composition& target, const Composition& source) {
  return correspondence(target, source, Family::X);
}

inline CorrClass scaled(CorrClass c, const Q& s) {
  for (auto& [k, v] : c.coeffs) v = v * RatFunc(MultiPoly(c.d + 1, s));
  return c;
}

// Euler class of the middle ambient at the coset with key k.
inline MultiPoly middle_euler(const Composition& c, Ambient amb, const CosetKey& k) {
  return tangent_euler(c, amb, coset_min_rep(k, c.parts));
}

// (A*B)_{p,r} = sum_q A_{p,q} B_{q,r} Eu_q.
inline CorrClass convolve(const CorrClass& a, const CorrClass& b) {
  if (!(a.source == b.target) || a.family != b.family || a.d != b.d)
    throw CompositionError("convolve: source of the left factor must equal target of the right factor");
  CorrClass r{a.target, b.source, a.family, a.d, {}};
  Ambient amb = ambient_of(a.family);
  std::map<CosetKey, MultiPoly> eu;
  for (const auto& [pq, av] : a.coeffs) {
    const auto& [p, q] = pq;
    auto it = eu.find(q);
    if (it == eu.end()) it = eu.emplace(q, middle_euler(a.source, amb, q)).first;
    for (const auto& [qr, bv] : b.coeffs) {
      if (qr.first != q) continue;
      RatFunc t = av * bv * RatFunc(it->second);
      auto key = std::make_pair(p, qr.second);
      auto jt = r.coeffs.find(key);
      if (jt == r.coeffs.end()) {
        r.coeffs.emplace(key, t);
      } else {
        jt->second = jt->second + t;
      }
    }
  }
  for (auto it = r.coeffs.begin(); it != r.coeffs.end();) it = it->second.is_zero() ? r.coeffs.erase(it) : std::next(it);
  return r;
}

// (A*c)_p = sum_r A_{p,r} c_r Eu_r.
inline FixedPointClass convolve(const CorrClass& a, const FixedPointClass& c) {
  Ambient amb = ambient_of(a.family);
  if (!(a.source == c.comp) || c.ambient != amb || a.d != c.d)
    throw CompositionError("convolve: class does not live on the correspondence source");
  FixedPointClass r{a.target, amb, a.d, {}};
  for (const auto& [pr, av] : a.coeffs) {
    auto it = c.coeffs.find(pr.second);
    if (it == c.coeffs.end()) continue;
    r.add(pr.first, av * it->second * RatFunc(middle_euler(c.comp, amb, pr.second)));
  }
  return r;
}

// sgn_a(c) = d_{a+1} - d_a + 1.
inline int sgn_a(int a, const Composition& c) { return c[a + 1] - c[a] + 1; }

// Where the Z-family signs sit. FOnly: (-1)^{sgn_a(c)} on F_a out of c.
// Split: (-1)^{d_a} on E_a and (-1)^{d_{a+1}} on F_a out of c; E_a F_a still carries
// (-1)^{sgn_a(c)}, but [E_a, F_{a+-1}] = 0 holds (under FOnly they anticommute).
enum class SignConvention { FOnly, Split };

inline const char* to_string(SignConvention s) { return s == SignConvention::FOnly ? "F-only" : "split"; }

inline int ginzburg_sign_exponent(int a, const Composition& c, Which which, SignConvention conv) {
  if (conv == SignConvention::FOnly) return which == Which::F ? sgn_a(a, c) : 0;
  return which == Which::E ? c[a] : c[a + 1];
}

// Signed block of E_a (resp. F_a) out of source c; X family carries no signs.
inline CorrClass chevalley_block(Family fam, int a, const Composition& c, Which which,
                                 SignConvention conv = SignConvention::Split) {
  Composition target = which == Which::E ? e_tilde(a, c) : f_tilde(a, c);
  if (target.ghost) throw DomainError("chevalley_block: ghost target");
  CorrClass z = correspondence(target, c, fam);
  int e = fam == Family::Z ? ginzburg_sign_exponent(a, c, which, conv) : 0;
  if (((e % 2) + 2) % 2 != 0) z = scaled(z, Q(-1));
  return z;
}

// Blocks of E_a (resp. F_a) on the direct sum over P_{n,d}, one per non-ghost source.
inline std::vector<CorrClass> chevalley_family(Family fam, int n, int d, int a, Which which,
                                               SignConvention conv = SignConvention::Split) {
  std::vector<CorrClass> out;
  for (const auto& c : compositions(n, d)) {
    Composition target = which == Which::E ? e_tilde(a, c) : f_tilde(a, c);
    if (!target.ghost) out.push_back(chevalley_block(fam, a, c, which, conv));
  }
  return out;
}

inline std::vector<CorrClass> ginzburg_EF(int n, int d, int a, Which which,
                                          SignConvention conv = SignConvention::Split) {
  return chevalley_family(Family::Z, n, d, a, which, conv);
}
inline std::vector<CorrClass> bg_EF(int n, int d, int a, Which which) {
  return chevalley_family(Family::X, n, d, a, which);
}

}  // namespace weylmv
