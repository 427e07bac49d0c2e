#pragma once

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "weylmv/core/errors.hpp"
#include "weylmv/symgrp/perm.hpp"

namespace weylmv {

// (d_1..d_n) with nonnegative parts, or the ghost value.
struct Composition {
  std::vector<int> parts;
  bool ghost = false;

  static Composition ghost_value() { return {{}, true}; }
  static Composition ones(int d) { return {std::vector<int>(d, 1), false}; }

  int n() const { return static_cast<int>(parts.size()); }
  int total() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int operator[](int a) const { return parts.at(a - 1); }  // 1-based

  friend bool operator==(const Composition&, const Composition&) = default;
  friend bool operator<(const Composition& x, const Composition& y) {
    if (x.ghost != y.ghost) return x.ghost < y.ghost;
    return x.parts < y.parts;
  }
  std::string str() const {
    if (ghost) return "ghost";
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ")";
    return os.str();
  }
};

// Move one unit from block a+1 to block a; ghost if d_{a+1} = 0.
inline Composition e_tilde(int a, const Composition& c) {
  if (c.ghost) throw DomainError("e_tilde of ghost composition");
  if (a < 1 || a >= c.n()) throw DomainError("e_tilde index out of range");
  if (c[a + 1] == 0) return Composition::ghost_value();
  Composition r = c;
  ++r.parts[a - 1];
  --r.parts[a];
  return r;
}

// Move one unit from block a to block a+1; ghost if d_a = 0.
inline Composition f_tilde(int a, const Composition& c) {
  if (c.ghost) throw DomainError("f_tilde of ghost composition");
  if (a < 1 || a >= c.n()) throw DomainError("f_tilde index out of range");
  if (c[a] == 0) return Composition::ghost_value();
  Composition r = c;
  --r.parts[a - 1];
  ++r.parts[a];
  return r;
}

// All compositions of d into n nonnegative parts, lexicographically.
inline std::vector<Composition> compositions(int n, int d) {
  std::vector<Composition> out;
  std::vector<int> cur(n, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n - 1) {
      cur[i] = left;
      out.push_back({cur, false});
      return;
    }
    for (int k = 0; k <= left; ++k) {
      cur[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (n > 0) rec(rec, 0, d);
  return out;
}

inline long factorial(int n) {
  long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline long young_order(const Composition& c) {
  long r = 1;
  for (int p : c.parts) r *= factorial(p);
  return r;
}

// Elements of the Young subgroup: w preserves every block.
inline std::vector<Perm> young_subgroup(const Composition& c) {
  auto b = block_of_positions(c.parts);
  std::vector<Perm> out;
  for (const auto& w : all_perms(c.total())) {
    bool ok = true;
    for (std::size_t i = 0; i < w.size() && ok; ++i) ok = b[i] == b[w[i]];
    if (ok) out.push_back(w);
  }
  return out;
}

// Coset key of wS_c: label[w(i)] = block(i).
using CosetKey = std::vector<int>;

inline CosetKey coset_key(const Perm& w, const std::vector<int>& parts) {
  auto b = block_of_positions(parts);
  CosetKey k(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) k[w[i]] = b[i];
  return k;
}

// Minimal-length representative of the coset with the given key.
inline Perm coset_min_rep(const CosetKey& key, const std::vector<int>& parts) {
  auto b = block_of_positions(parts);
  int d = static_cast<int>(key.size());
  std::vector<std::vector<int>> images(parts.size());
  for (int p = 0; p < d; ++p) images[key[p]].push_back(p);
  Perm w(d);
  std::vector<int> used(parts.size(), 0);
  for (int i = 0; i < d; ++i) w[i] = images[b[i]][used[b[i]]++];
  return w;
}

// Minimal-length representatives of S_d / S_c, ordered by key.
inline std::vector<Perm> young_cosets(const Composition& c) {
  if (c.ghost) throw DomainError("young_cosets of ghost composition");
  std::map<CosetKey, Perm> reps;
  for (const auto& w : all_perms(c.total())) reps.try_emplace(coset_key(w, c.parts), Perm{});
  std::vector<Perm> out;
  for (auto& [k, w] : reps) out.push_back(coset_min_rep(k, c.parts));
  return out;
}

}  // namespace weylmv
