#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "weylmv/orbital/hotta.hpp"
#include "weylmv/schurweyl/tower.hpp"
#include "weylmv/symgrp/kl.hpp"

namespace weylmv {

enum class Verdict { Pass, PassProjective, Fail, Incomplete };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::PassProjective: return "PASS-PROJECTIVE";
    case Verdict::Fail: return "FAIL";
    case Verdict::Incomplete: return "INCOMPLETE";
  }
  return "?";
}

// Weight-zero operators 1 - E_a F_a on the 1^d block of the invariant tower of v,
// written in the basis of v itself.
inline std::vector<QMatrix> weight_zero_model(const SdModule& v) {
  InvariantTower t = build_tower(v, v.d);
  QMatrix b = t.basis.at(Composition::ones(v.d));
  auto binv = inverse(b);
  if (!binv) throw CertificationError("weight_zero_model: 1^d basis is singular");
  std::vector<QMatrix> out;
  for (int a = 1; a < v.d; ++a) out.push_back(b * weight_zero_T(t, a) * *binv);
  return out;
}

// Basis match between two families of generator matrices: component k <-> model
// vector perm[k], component vector = scale[k] * model vector.
struct BasisMatch {
  std::vector<int> perm;
  std::vector<Q> scale;
  bool all_scales_one() const {
    return std::all_of(scale.begin(), scale.end(), [](const Q& q) { return q == 1; });
  }
};

namespace detail {

inline QMatrix permute_into(const QMatrix& t, const std::vector<int>& perm) {
  int n = t.rows();
  QMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = t(perm[i], perm[j]);
  return out;
}

// Diagonal D (scale) with D^{-1} T D = E for every pair, or nullopt. Entries satisfy
// E_ij = T_ij * s_j / s_i; solved by propagation from s_0 = 1 on each connected piece.
inline std::optional<std::vector<Q>> diagonal_conjugator(const std::vector<QMatrix>& T, const std::vector<QMatrix>& E) {
  int n = E.empty() ? 0 : E.front().rows();
  std::vector<std::optional<Q>> s(n);
  for (int start = 0; start < n; ++start) {
    if (s[start]) continue;
    s[start] = Q(1);
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (std::size_t a = 0; a < T.size(); ++a)
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          for (auto [r, c] : {std::pair{i, j}, std::pair{j, i}}) {
            const Q& t = T[a](r, c);
            const Q& e = E[a](r, c);
            if ((t == 0) != (e == 0)) return std::nullopt;
            if (t == 0) continue;
            // E_rc = T_rc s_c / s_r
            Q other = r == i ? e / t * *s[i] : t / e * *s[i];
            if (!s[j]) {
              s[j] = other;
              stack.push_back(j);
            } else if (*s[j] != other) {
              return std::nullopt;
            }
          }
        }
    }
  }
  for (std::size_t a = 0; a < T.size(); ++a)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (E[a](i, j) != T[a](i, j) * *s[j] / *s[i]) return std::nullopt;
  std::vector<Q> out;
  for (auto& x : s) out.push_back(*x);
  return out;
}

}  // namespace detail

// Search permutations (lexicographic) for an exact match; failing that, for a match up
// to a diagonal rescaling.
inline std::optional<BasisMatch> match_generators(const std::vector<QMatrix>& E, const std::vector<QMatrix>& T) {
  if (E.size() != T.size()) throw CompositionError("match_generators: generator counts differ");
  int n = E.empty() ? 1 : E.front().rows();
  if (!E.empty() && T.front().rows() != n) return std::nullopt;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<BasisMatch> projective;
  do {
    std::vector<QMatrix> Tp;
    for (const auto& t : T) Tp.push_back(detail::permute_into(t, perm));
    bool exact = true;
    for (std::size_t a = 0; a < E.size() && exact; ++a) exact = E[a] == Tp[a];
    if (exact) return BasisMatch{perm, std::vector<Q>(n, Q(1))};
    if (!projective)
      if (auto s = detail::diagonal_conjugator(Tp, E)) projective = BasisMatch{perm, *s};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return projective;
}

struct ConjectureReport {
  Partition lambda;
  Verdict verdict = Verdict::Fail;
  std::string model = "kl-left-cell";
  std::vector<QMatrix> E;      // e-basis matrices of s_a on the components
  std::vector<QMatrix> model_T;  // 1 - E_a F_a on the model, index a-1
  std::optional<BasisMatch> match;
  std::vector<Perm> model_elements;  // cell elements indexing the model basis
  std::vector<StandardTableau> model_labels;  // Robinson-Schensted label of each model vector
  std::vector<int> label_perm;       // component k <-> model vector with the same (or transposed) label
  bool labels_agree = false;         // label_perm is the matching permutation
  std::string specht_diagnostic;     // outcome of the same match against the polytabloid basis
  std::vector<std::string> notes;
};

// e-basis action versus the weight-zero Weyl operators on a cell model of chi^lambda.
// The polytabloid Specht basis is matched as a diagnostic only.
inline ConjectureReport conjecture_check(const OrbitalDecomposition& dec, const HottaReport& hotta, const KLData& kl) {
  ConjectureReport r;
  r.lambda = dec.lambda;
  if (!hotta.ok()) {
    r.notes.push_back("Hotta check failed; no conjecture verdict");
    return r;
  }
  r.E = hotta.E;
  CellModule cell = cell_module_for(kl, dec.lambda);
  r.model_elements = cell.elements;
  r.model_labels = cell_labels(cell.elements);
  r.model_T = weight_zero_model(cell);
  for (const auto& c : dec.components) {
    StandardTableau want = r.model_labels.front().shape() == dec.lambda ? c.tableau : c.tableau.transpose();
    auto it = std::find(r.model_labels.begin(), r.model_labels.end(), want);
    r.label_perm.push_back(it == r.model_labels.end() ? -1 : static_cast<int>(it - r.model_labels.begin()));
  }
  r.match = match_generators(r.E, r.model_T);
  if (!r.match) {
    r.verdict = Verdict::Fail;
    r.notes.push_back("no permutation or diagonal rescaling carries the model onto the e-matrices");
  } else {
    r.verdict = r.match->all_scales_one() ? Verdict::Pass : Verdict::PassProjective;
    r.labels_agree = r.label_perm == r.match->perm;
  }
  auto sp = match_generators(r.E, weight_zero_model(specht_module(dec.lambda)));
  if (!sp) r.specht_diagnostic = "no match";
  else r.specht_diagnostic = sp->all_scales_one() ? "permutation match" : "match up to diagonal rescaling";
  return r;
}

}  // namespace weylmv
