#pragma once

#include <string>
#include <vector>

#include "weylmv/core/errors.hpp"
#include "weylmv/core/multipoly.hpp"

namespace weylmv {

// A permutation of {0,...,d-1}: w[i] is the image of i.
using Perm = std::vector<int>;

inline Perm identity_perm(int d) {
  Perm w(d);
  for (int i = 0; i < d; ++i) w[i] = i;
  return w;
}

// Simple transposition s_a, 1 <= a <= d-1, swapping a-1 and a.
inline Perm simple_reflection(int d, int a) {
  if (a < 1 || a > d - 1) throw DomainError("simple reflection index out of range");
  Perm w = identity_perm(d);
  std::swap(w[a - 1], w[a]);
  return w;
}

// (v*w)(i) = v(w(i)).
inline Perm compose(const Perm& v, const Perm& w) {
  if (v.size() != w.size()) throw CompositionError("permutation sizes differ");
  Perm r(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) r[i] = v[w[i]];
  return r;
}

inline Perm inverse(const Perm& w) {
  Perm r(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) r[w[i]] = static_cast<int>(i);
  return r;
}

inline bool is_perm(const Perm& w) {
  std::vector<bool> seen(w.size(), false);
  for (int x : w) {
    if (x < 0 || x >= static_cast<int>(w.size()) || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

// Torus polynomial ring: variables e1..ed (indices 0..d-1) and h (index d).
struct TorusRing {
  int d;
  int nvars() const { return d + 1; }
  int h_index() const { return d; }
  std::vector<std::string> names() const {
    std::vector<std::string> n;
    for (int i = 1; i <= d; ++i) n.push_back("e" + std::to_string(i));
    n.push_back("h");
    return n;
  }
  MultiPoly eps(int i) const { return MultiPoly::variable(nvars(), i); }
  MultiPoly h() const { return MultiPoly::variable(nvars(), d); }
  MultiPoly one() const { return MultiPoly(nvars(), Q(1)); }
  MultiPoly zero() const { return MultiPoly(nvars()); }
  // alpha_a = e_a - e_{a+1}, 1-based a.
  MultiPoly alpha(int a) const { return eps(a - 1) - eps(a); }
};

// Integer combination of e_1..e_d and h.
struct TorusWeight {
  std::vector<long> coeffs;  // length d+1

  static TorusWeight zero(int d) { return {std::vector<long>(d + 1, 0)}; }
  // e_i - e_j with 0-based i, j.
  static TorusWeight root(int d, int i, int j) {
    TorusWeight w = zero(d);
    w.coeffs[i] += 1;
    w.coeffs[j] -= 1;
    return w;
  }
  int dim() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const {
    for (long c : coeffs)
      if (c) return false;
    return true;
  }
  TorusWeight operator-() const {
    TorusWeight r = *this;
    for (auto& c : r.coeffs) c = -c;
    return r;
  }
  TorusWeight operator+(const TorusWeight& o) const {
    if (o.coeffs.size() != coeffs.size()) throw CompositionError("weight dimensions differ");
    TorusWeight r = *this;
    for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
    return r;
  }
  TorusWeight shifted_h(long k = 1) const {
    TorusWeight r = *this;
    r.coeffs.back() += k;
    return r;
  }
  MultiPoly to_poly() const {
    MultiPoly p(static_cast<int>(coeffs.size()));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i]) p.add_term(unit_monomial(static_cast<int>(i)), Q(coeffs[i]));
    return p;
  }
  friend bool operator==(const TorusWeight&, const TorusWeight&) = default;
  friend bool operator<(const TorusWeight& a, const TorusWeight& b) { return a.coeffs < b.coeffs; }
};

using WeightMultiset = std::vector<TorusWeight>;

inline WeightMultiset multiset_union(WeightMultiset a, const WeightMultiset& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Block index (0-based) of each position for composition parts.
inline std::vector<int> block_of_positions(const std::vector<int>& parts) {
  std::vector<int> b;
  for (std::size_t k = 0; k < parts.size(); ++k)
    for (int i = 0; i < parts[k]; ++i) b.push_back(static_cast<int>(k));
  return b;
}

// Nilradical weights {e_i - e_j : block(i) < block(j)}.
inline WeightMultiset nilradical_weights(const std::vector<int>& parts) {
  auto b = block_of_positions(parts);
  int d = static_cast<int>(b.size());
  WeightMultiset m;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (b[i] < b[j]) m.push_back(TorusWeight::root(d, i, j));
  return m;
}

inline WeightMultiset opposite_nilradical_weights(const std::vector<int>& parts) {
  WeightMultiset m = nilradical_weights(parts);
  for (auto& w : m) w = -w;
  return m;
}

// Parabolic weights {e_i - e_j : block(i) <= block(j)}, diagonal zeros included.
inline WeightMultiset parabolic_weights(const std::vector<int>& parts) {
  auto b = block_of_positions(parts);
  int d = static_cast<int>(b.size());
  WeightMultiset m;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (b[i] <= b[j]) m.push_back(TorusWeight::root(d, i, j));
  return m;
}

// Product of the weights (or of weight + h when h_shift).
inline MultiPoly euler_class(const WeightMultiset& m, bool h_shift, int d) {
  MultiPoly r(d + 1, Q(1));
  for (const auto& w : m) {
    if (w.dim() != d) throw CompositionError("euler_class: weight dimension mismatch");
    if (!h_shift && w.is_zero()) throw DomainError("singular Euler class: zero weight");
    r *= (h_shift ? w.shifted_h() : w).to_poly();
  }
  return r;
}

// e_i -> e_{w(i)}, h fixed.
inline MultiPoly weyl_act(const Perm& w, const MultiPoly& f) {
  int d = static_cast<int>(w.size());
  if (f.nvars() != d + 1) throw CompositionError("weyl_act: dimension mismatch");
  if (!is_perm(w)) throw DomainError("weyl_act: not a permutation");
  Perm full = w;
  full.push_back(d);
  return f.permute_vars(full);
}

inline TorusWeight weyl_act(const Perm& w, const TorusWeight& t) {
  int d = static_cast<int>(w.size());
  if (t.dim() != d) throw CompositionError("weyl_act: dimension mismatch");
  TorusWeight r = TorusWeight::zero(d);
  for (int i = 0; i < d; ++i) r.coeffs[w[i]] += t.coeffs[i];
  r.coeffs[d] = t.coeffs[d];
  return r;
}

// Divided difference (f - s_a f)/alpha_a.
inline MultiPoly bgg_delta(int a, const MultiPoly& f) {
  int d = f.nvars() - 1;
  TorusRing R{d};
  MultiPoly num = f - weyl_act(simple_reflection(d, a), f);
  auto q = divide_exact(num, R.alpha(a));
  if (!q) throw DomainError("bgg_delta: numerator not divisible by the simple root");
  return *q;
}

}  // namespace weylmv
