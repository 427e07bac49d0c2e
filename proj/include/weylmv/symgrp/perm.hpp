#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "weylmv/core/matrix.hpp"
#include "weylmv/polyalg/torus.hpp"

namespace weylmv {

// All permutations of {0..d-1} in lexicographic order.
inline std::vector<Perm> all_perms(int d) {
  std::vector<Perm> out;
  Perm w = identity_perm(d);
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline int perm_length(const Perm& w) {
  int n = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++n;
  return n;
}

inline int perm_sign(const Perm& w) { return perm_length(w) % 2 ? -1 : 1; }

// Word (a_1..a_k), 1-based, with w = s_{a_1} * ... * s_{a_k} and k = length(w).
inline std::vector<int> reduced_word(Perm w) {
  std::vector<int> word;
  int d = static_cast<int>(w.size());
  for (;;) {
    int a = 0;
    for (int i = 1; i < d; ++i)
      if (w[i - 1] > w[i]) {
        a = i;
        break;
      }
    if (!a) break;
    word.push_back(a);
    w = compose(w, simple_reflection(d, a));
  }
  std::reverse(word.begin(), word.end());
  return word;
}

inline Perm perm_from_word(int d, const std::vector<int>& word) {
  Perm w = identity_perm(d);
  for (int a : word) w = compose(w, simple_reflection(d, a));
  return w;
}

// Cycle lengths sorted decreasingly.
inline std::vector<int> cycle_type(const Perm& w) {
  std::vector<bool> seen(w.size(), false);
  std::vector<int> t;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(w[j])) {
      seen[j] = true;
      ++len;
    }
    t.push_back(len);
  }
  std::sort(t.rbegin(), t.rend());
  return t;
}

// rho(w) from generator matrices gens[a-1] = rho(s_a), as a left action.
inline QMatrix rep_matrix(const std::vector<QMatrix>& gens, int dim, const Perm& w) {
  QMatrix m = QMatrix::identity(dim);
  for (int a : reduced_word(w)) m = m * gens.at(a - 1);
  return m;
}

// Generator matrices satisfy s_a^2 = 1 and the braid relations.
inline bool coxeter_relations_hold(const std::vector<QMatrix>& gens, int dim) {
  QMatrix id = QMatrix::identity(dim);
  int n = static_cast<int>(gens.size());
  for (int a = 0; a < n; ++a) {
    if (!(gens[a] * gens[a] == id)) return false;
    for (int b = a + 1; b < n; ++b) {
      if (b == a + 1) {
        if (!(gens[a] * gens[b] * gens[a] == gens[b] * gens[a] * gens[b])) return false;
      } else if (!(gens[a] * gens[b] == gens[b] * gens[a])) {
        return false;
      }
    }
  }
  return true;
}

// Class function values: cycle type -> trace of rho on one representative.
inline std::map<std::vector<int>, Q> character_by_class(const std::vector<QMatrix>& gens, int dim, int d) {
  std::map<std::vector<int>, Q> chi;
  for (const auto& w : all_perms(d)) {
    auto ct = cycle_type(w);
    if (chi.count(ct)) continue;
    chi[ct] = trace(rep_matrix(gens, dim, w));
  }
  return chi;
}

}  // namespace weylmv
