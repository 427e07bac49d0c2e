#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weylmv/orbital/orbit.hpp"
#include "weylmv/symgrp/specht.hpp"

namespace weylmv {

enum class SpanBasis { J, E };

inline const char* to_string(SpanBasis b) { return b == SpanBasis::J ? "J" : "e"; }

struct SpanMatrix {
  bool in_span = false;
  QMatrix m;
  std::string detail;
};

// Columns: coordinates of targets[k] in the basis polynomials, or nullopt if some
// target leaves their span.
inline std::optional<QMatrix> expand_in_span(const std::vector<MultiPoly>& basis, const std::vector<MultiPoly>& targets) {
  std::map<Monomial, int> row;
  for (const auto* group : {&basis, &targets})
    for (const auto& p : *group)
      for (const auto& [m, c] : p.terms()) row.emplace(m, 0);
  int r = 0;
  for (auto& [m, i] : row) i = r++;
  QMatrix A(r, static_cast<int>(basis.size())), B(r, static_cast<int>(targets.size()));
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (const auto& [m, c] : basis[k].terms()) A(row[m], static_cast<int>(k)) = c;
  for (std::size_t k = 0; k < targets.size(); ++k)
    for (const auto& [m, c] : targets[k].terms()) B(row[m], static_cast<int>(k)) = c;
  return solve(A, B);
}

inline std::vector<MultiPoly> joseph_polys(const std::vector<OrbitalComponent>& cs) {
  std::vector<MultiPoly> out;
  for (const auto& c : cs) out.push_back(c.joseph);
  return out;
}

// Exact rank of the Joseph polynomials as vectors of coefficients.
inline int joseph_rank(const std::vector<OrbitalComponent>& cs) {
  auto js = joseph_polys(cs);
  std::map<Monomial, int> row;
  for (const auto& p : js)
    for (const auto& [m, c] : p.terms()) row.emplace(m, 0);
  int r = 0;
  for (auto& [m, i] : row) i = r++;
  QMatrix A(r, static_cast<int>(js.size()));
  for (std::size_t k = 0; k < js.size(); ++k)
    for (const auto& [m, c] : js[k].terms()) A(row[m], static_cast<int>(k)) = c;
  return rank(A);
}

// Matrix of s_a on span{J_Z} (polynomials) or span{e_Z = J_Z / eu(u)} (rational functions).
inline SpanMatrix weyl_matrix_on_span(const std::vector<OrbitalComponent>& cs, int a, SpanBasis basis) {
  SpanMatrix out;
  if (cs.empty()) throw DomainError("weyl_matrix_on_span: no components");
  int d = cs.front().joseph.nvars() - 1;
  if (a < 1 || a >= d) throw DomainError("weyl_matrix_on_span: generator out of range");
  Perm s = simple_reflection(d, a);
  auto js = joseph_polys(cs);
  std::vector<MultiPoly> targets;
  if (basis == SpanBasis::J) {
    for (const auto& j : js) targets.push_back(weyl_act(s, j));
  } else {
    // s_a(e_Z) = sum_Y M_YZ J_Y / eu(u): clear eu(u) and expand in the J_Y
    RatFunc eu(nilradical_euler(d));
    for (std::size_t k = 0; k < cs.size(); ++k) {
      auto p = (weyl_act(s, cs[k].equiv_mult) * eu).as_polynomial();
      if (!p) {
        out.detail = "s_" + std::to_string(a) + " e_" + std::to_string(k) + " has poles beyond eu(u)";
        return out;
      }
      targets.push_back(*p);
    }
  }
  auto m = expand_in_span(js, targets);
  if (!m) {
    out.detail = "s_" + std::to_string(a) + " leaves the " + to_string(basis) + "-span";
    return out;
  }
  out.in_span = true;
  out.m = *m;
  return out;
}

using ClassFunction = std::map<std::vector<int>, Q>;

inline ClassFunction irreducible_character(const Partition& lambda) {
  ClassFunction chi;
  for (const auto& mu : partitions(lambda.size())) chi[mu.parts] = Q(mn_character(lambda, mu));
  return chi;
}

// "lambda", "transpose" (lambda^t), "both" (self-conjugate) or "neither".
inline std::string character_outcome(const ClassFunction& chi, const Partition& lambda) {
  bool l = chi == irreducible_character(lambda);
  bool t = chi == irreducible_character(lambda.transpose());
  if (l && t) return "both";
  if (l) return "lambda";
  if (t) return "transpose";
  return "neither";
}

struct HottaReport {
  Partition lambda;
  int components = 0;
  int rank = 0;
  bool injective = false;
  bool stable_J = false, stable_E = false;
  bool e_is_minus_J = false;
  bool coxeter_J = false, coxeter_E = false;
  std::vector<QMatrix> J, E;  // generator matrices, index a-1
  ClassFunction chi_J, chi_E;
  std::string outcome_J, outcome_E;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

inline HottaReport hotta_check(const OrbitalDecomposition& dec) {
  HottaReport r;
  r.lambda = dec.lambda;
  const auto& cs = dec.components;
  int d = dec.lambda.size();
  r.components = static_cast<int>(cs.size());
  r.rank = joseph_rank(cs);
  r.injective = r.rank == r.components;
  if (!r.injective) r.failures.push_back("Joseph polynomials are linearly dependent (rank " + std::to_string(r.rank) + ")");
  r.stable_J = r.stable_E = true;
  for (int a = 1; a < d; ++a) {
    auto j = weyl_matrix_on_span(cs, a, SpanBasis::J);
    auto e = weyl_matrix_on_span(cs, a, SpanBasis::E);
    if (!j.in_span) {
      r.stable_J = false;
      r.failures.push_back(j.detail);
    }
    if (!e.in_span) {
      r.stable_E = false;
      r.failures.push_back(e.detail);
    }
    r.J.push_back(j.m);
    r.E.push_back(e.m);
  }
  if (!r.stable_J || !r.stable_E || !r.injective) return r;
  r.e_is_minus_J = true;
  for (int a = 1; a < d; ++a)
    if (!(r.E[a - 1] == -r.J[a - 1])) {
      r.e_is_minus_J = false;
      r.failures.push_back("e-matrix differs from minus the J-matrix at s_" + std::to_string(a));
    }
  r.coxeter_J = coxeter_relations_hold(r.J, r.components);
  r.coxeter_E = coxeter_relations_hold(r.E, r.components);
  if (!r.coxeter_J) r.failures.push_back("J-matrices violate the Coxeter relations");
  if (!r.coxeter_E) r.failures.push_back("e-matrices violate the Coxeter relations");
  r.chi_J = character_by_class(r.J, r.components, d);
  r.chi_E = character_by_class(r.E, r.components, d);
  r.outcome_J = character_outcome(r.chi_J, dec.lambda);
  r.outcome_E = character_outcome(r.chi_E, dec.lambda);
  if (r.outcome_J == "neither") r.failures.push_back("J-character is neither chi^lambda nor chi^lambda^t");
  if (r.outcome_E == "neither") r.failures.push_back("e-character is neither chi^lambda nor chi^lambda^t");
  for (const auto& [ct, v] : r.chi_J) {
    int odd = 0;
    for (int c : ct) odd += c - 1;
    if (r.chi_E.at(ct) != (odd % 2 ? -v : v)) r.failures.push_back("e-character is not the sign twist of the J-character");
  }
  return r;
}

}  // namespace weylmv
