#pragma once

#include <string>
#include <vector>

#include "weylmv/localization/operators.hpp"
#include "weylmv/schurweyl/tower.hpp"

namespace weylmv {

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string detail;
};

// Two-step composite through the a-th merged space, restricted to the full flag block.
// Z: f_a 1^d, X: e_a 1^d (both give the same parabolic).
inline RatMatrix composite_through_merge(Family fam, int d, int a) {
  Composition one = Composition::ones(d);
  Composition mid = fam == Family::Z ? f_tilde(a, one) : e_tilde(a, one);
  FixedPointLayout l = fixed_point_layout(d, d);
  RatMatrix down = operator_matrix(l, correspondence(mid, one, fam));
  RatMatrix up = operator_matrix(l, correspondence(one, mid, fam));
  return block_of(l, up * down, one, one);
}

// Z: s_a - 1 + h d_a.  X: s_a + 1 + h d_a.
inline RatMatrix composite_expected(Family fam, int d, int a) {
  FixedPointLayout l = fixed_point_layout(d, d);
  RatMatrix s = right_translation(l, a);
  int k = s.rows();
  RatMatrix hd(k, k, d + 1);
  RatMatrix dd = divided_difference(l, a);
  RatFunc h(MultiPoly::variable(d + 1, d));
  for (const auto& [i, row] : dd.entries())
    for (const auto& [j, v] : row) hd.set(i, j, v * h);
  RatMatrix id = RatMatrix::identity(k, d + 1);
  return fam == Family::Z ? s - id + hd : s + id + hd;
}

inline CheckResult check_composite(Family fam, int d, int a) {
  CheckResult r{std::string("composite-") + to_string(fam) + "-d" + std::to_string(d) + "-a" + std::to_string(a), true, ""};
  if (!(composite_through_merge(fam, d, a) == composite_expected(fam, d, a))) {
    r.ok = false;
    r.detail = "two-step convolution differs from the Demazure-Lusztig form";
  }
  return r;
}

// 1 - E_a F_a on the full flag block at h = 0.
inline RatMatrix weight_zero_T_local(Family fam, int d, int a, SignConvention conv = SignConvention::Split) {
  FixedPointLayout l = fixed_point_layout(d, d);
  Composition one = Composition::ones(d);
  RatMatrix f = operator_matrix(l, chevalley_block(fam, a, one, Which::F, conv));
  RatMatrix e = operator_matrix(l, chevalley_block(fam, a, f_tilde(a, one), Which::E, conv));
  RatMatrix ef = at_h_zero(block_of(l, e * f, one, one));
  return RatMatrix::identity(ef.rows(), d + 1) - ef;
}

// Z gives s_a, X gives -s_a.
inline CheckResult check_weight_zero_T(Family fam, int d, int a, SignConvention conv = SignConvention::Split) {
  CheckResult r{std::string("T-") + to_string(fam) + "-d" + std::to_string(d) + "-a" + std::to_string(a), true, ""};
  FixedPointLayout l = fixed_point_layout(d, d);
  RatMatrix s = right_translation(l, a);
  RatMatrix expected = fam == Family::Z ? s : Q(-1) * s;
  if (!(weight_zero_T_local(fam, d, a, conv) == expected)) {
    r.ok = false;
    r.detail = "T_a is not the expected signed simple reflection";
  }
  return r;
}

// gl_n relations among the h = 0 specializations on the direct sum over P_{n,d}.
inline CheckResult check_local_relations(Family fam, int n, int d, SignConvention conv = SignConvention::Split) {
  std::string tag = fam == Family::Z ? std::string("-") + to_string(conv) : std::string();
  CheckResult r{std::string("gl-relations-") + to_string(fam) + tag + "-n" + std::to_string(n) + "-d" +
                    std::to_string(d),
                true, ""};
  FixedPointLayout l = fixed_point_layout(n, d);
  std::function<RatMatrix(int, Which)> op = [&](int a, Which w) {
    return at_h_zero(operator_matrix(l, chevalley_family(fam, n, d, a, w, conv)));
  };
  std::function<RatMatrix(int)> cartan = [&](int a) { return cartan_matrix(l, a); };
  RelationReport rep = check_gln_relations<RatMatrix>(n, op, cartan);
  r.ok = rep.ok;
  r.detail = rep.ok ? std::to_string(rep.checked) + " relations" : "first failure " + rep.witness;
  return r;
}

// Regular representation tower in coset-average bases, ordered like the fixed-point layout.
inline InvariantTower coset_average_tower(int n, int d) {
  SdModule v = regular_module(d);
  auto perms = all_perms(d);
  std::map<Perm, int> idx;
  for (std::size_t i = 0; i < perms.size(); ++i) idx[perms[i]] = static_cast<int>(i);
  FixedPointLayout l = fixed_point_layout(n, d);
  std::map<Composition, QMatrix> bases;
  for (const auto& c : l.comps) {
    const auto& keys = l.keys.at(c);
    auto sub = young_subgroup(c);
    QMatrix b(v.dim, static_cast<int>(keys.size()));
    Q w(1, static_cast<unsigned long>(sub.size()));
    for (std::size_t k = 0; k < keys.size(); ++k) {
      Perm rep = coset_min_rep(keys[k], c.parts);
      for (const auto& y : sub) b(idx.at(compose(rep, y)), static_cast<int>(k)) += w;
    }
    bases.emplace(c, b);
  }
  return build_tower(v, n, bases);
}

// The X-family operators at h = 0 coincide with the symmetrizer operators on the
// regular representation in the coset-average bases.
inline CheckResult check_bg_schur_weyl(int n, int d) {
  CheckResult r{"bg-vs-symmetrizer-n" + std::to_string(n) + "-d" + std::to_string(d), true, ""};
  FixedPointLayout l = fixed_point_layout(n, d);
  InvariantTower t = coset_average_tower(n, d);
  for (int a = 1; a < n && r.ok; ++a)
    for (Which w : {Which::E, Which::F}) {
      RatMatrix g = at_h_zero(operator_matrix(l, bg_EF(n, d, a, w)));
      for (const auto& c : l.comps) {
        Composition target = w == Which::E ? e_tilde(a, c) : f_tilde(a, c);
        if (target.ghost) continue;
        auto local = block_of(l, g, target, c).as_constant();
        QMatrix expected = w == Which::E ? chev_E(t, a, c) : chev_F(t, a, c);
        if (!local || !(*local == expected)) {
          r.ok = false;
          r.detail = std::string(w == Which::E ? "E" : "F") + std::to_string(a) + " on " + c.str();
          break;
        }
      }
      if (!r.ok) break;
    }
  return r;
}

}  // namespace weylmv
