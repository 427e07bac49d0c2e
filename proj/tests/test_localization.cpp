#include <gtest/gtest.h>

#include "support.hpp"
#include "weylmv/localization/checks.hpp"

using namespace weylmv;
using namespace weylmv::testing;

namespace {

RatFunc rf(const MultiPoly& n, const MultiPoly& d) { return RatFunc(n, d); }

}  // namespace

TEST(Localization, TangentEulerAtIdentity) {
  TorusRing R{2};
  Composition one = Composition::ones(2);
  Perm id = identity_perm(2);
  MultiPoly e1 = R.eps(0), e2 = R.eps(1), h = R.h();
  EXPECT_EQ(tangent_euler(one, Ambient::Flag, id), e2 - e1);
  EXPECT_EQ(tangent_euler(one, Ambient::Cotangent, id), (e2 - e1) * (e1 - e2 + h));
  EXPECT_EQ(tangent_euler(one, Ambient::Grothendieck, id), (e2 - e1) * (e1 - e2 + h) * h * h);
}

TEST(Localization, CorrespondenceSupportCounts) {
  // support is S_d / (S_target cap S_source)
  Composition a({2, 1, 1}), b({3, 0, 1});
  EXPECT_EQ(corr_Z(a, b).coeffs.size(), 12u);
  EXPECT_EQ(corr_X(Composition::ones(3), Composition::ones(3)).coeffs.size(), 6u);
  EXPECT_THROW(corr_Z(Composition({2, 1}), Composition({1, 1, 1})), CompositionError);
}

TEST(Localization, DiagonalOfFullFlagIsPointInverse) {
  // Z_{1,1} pairs (u,u) with 1/Eu_u, so it acts as the identity.
  for (int d = 2; d <= 3; ++d) {
    FixedPointLayout l = fixed_point_layout(d, d);
    Composition one = Composition::ones(d);
    for (Family fam : {Family::Z, Family::X}) {
      RatMatrix m = block_of(l, operator_matrix(l, correspondence(one, one, fam)), one, one);
      EXPECT_EQ(m, RatMatrix::identity(m.rows(), d + 1)) << to_string(fam) << d;
    }
  }
}

TEST(Localization, PointClassCompositeD2Explicit) {
  // Z_{1,(0,2)} * Z_{(0,2),1} * [id] = (a+h)/(-a) [id] + (a+h)/a [s], a = e1 - e2.
  TorusRing R{2};
  Composition one = Composition::ones(2), mid = f_tilde(1, one);
  MultiPoly al = R.eps(0) - R.eps(1), h = R.h();
  FixedPointClass u = point_class(one, identity_perm(2), Ambient::Cotangent);
  FixedPointClass out = convolve(corr_Z(one, mid), convolve(corr_Z(mid, one), u));
  FixedPointClass want{one, Ambient::Cotangent, 2, {}};
  want.add(coset_key(identity_perm(2), one.parts), rf(al + h, -al));
  want.add(coset_key(simple_reflection(2, 1), one.parts), rf(al + h, al));
  EXPECT_TRUE(out == want);
}

TEST(Localization, ConvolutionIsAssociative) {
  for (Family fam : {Family::Z, Family::X}) {
    Composition one = Composition::ones(3);
    Composition m1 = f_tilde(1, one), m2 = e_tilde(2, one);
    CorrClass a = correspondence(one, m1, fam), b = correspondence(m1, one, fam), c = correspondence(one, m2, fam);
    CorrClass left = convolve(convolve(a, b), c), right = convolve(a, convolve(b, c));
    ASSERT_EQ(left.coeffs.size(), right.coeffs.size());
    for (const auto& [k, v] : left.coeffs) EXPECT_TRUE(v == right.coeffs.at(k));
  }
}

TEST(Localization, ConvolutionTagMismatchThrows) {
  Composition one = Composition::ones(2), mid = f_tilde(1, one);
  EXPECT_THROW(convolve(corr_Z(one, mid), corr_Z(one, mid)), CompositionError);
  EXPECT_THROW(convolve(corr_Z(one, mid), corr_X(mid, one)), CompositionError);
}

TEST(Localization, CompositeMatchesDemazureLusztigForm) {
  for (int d = 2; d <= 4; ++d)
    for (int a = 1; a < d; ++a)
      for (Family fam : {Family::Z, Family::X}) {
        auto r = check_composite(fam, d, a);
        EXPECT_TRUE(r.ok) << r.name << " " << r.detail;
      }
}

TEST(Localization, WeightZeroTIsSignedReflection) {
  for (int d = 2; d <= 4; ++d)
    for (int a = 1; a < d; ++a)
      for (Family fam : {Family::Z, Family::X}) {
        auto r = check_weight_zero_T(fam, d, a);
        EXPECT_TRUE(r.ok) << r.name << " " << r.detail;
      }
}

TEST(Localization, GlRelationsAtHZero) {
  for (int d = 2; d <= 3; ++d)
    for (Family fam : {Family::Z, Family::X}) {
      auto r = check_local_relations(fam, d, d);
      EXPECT_TRUE(r.ok) << r.name << " " << r.detail;
    }
}

TEST(Localization, BGMatchesSymmetrizerOperators) {
  for (int d = 2; d <= 3; ++d) {
    auto r = check_bg_schur_weyl(d, d);
    EXPECT_TRUE(r.ok) << r.name << " " << r.detail;
  }
  auto r = check_bg_schur_weyl(2, 3);
  EXPECT_TRUE(r.ok) << r.name << " " << r.detail;
}

TEST(Localization, RandomPointCompositeEvaluation) {
  // evaluation oracle: [u] -> -(b+h)/b [u] + (b+h)/b [u s_a], b = u(alpha_a)
  Rng rng(split_seed(7, 1));
  for (int d = 2; d <= 3; ++d) {
    Composition one = Composition::ones(d);
    const auto keys = fixed_point_layout(d, d).keys.at(one);
    for (int a = 1; a < d; ++a) {
      RatMatrix got = composite_through_merge(Family::Z, d, a);
      Perm sa = simple_reflection(d, a);
      for (int t = 0; t < 50; ++t) {
        auto pt = random_point(rng, d + 1);
        for (int j = 0; j < got.cols(); ++j) {
          Perm u = coset_min_rep(keys[j], one.parts);
          Q beta = pt[u[a - 1]] - pt[u[a]];
          if (beta == 0) continue;
          Q h = pt[d];
          for (int i = 0; i < got.rows(); ++i) {
            Q want = 0;
            if (keys[i] == coset_key(u, one.parts)) want -= (beta + h) / beta;
            if (keys[i] == coset_key(compose(u, sa), one.parts)) want += (beta + h) / beta;
            EXPECT_EQ(got.get(i, j).evaluate(pt), want);
          }
        }
      }
    }
  }
}

TEST(Localization, SignExponentExample) { EXPECT_EQ(sgn_a(1, Composition({1, 1})), 1); }

TEST(Localization, FOnlySignsBreakAdjacentCommutation) {
  // Literal F-only signs: [E_a,F_a] = H_a holds, but E_1 F_2 = -F_2 E_1 at n = 3.
  EXPECT_TRUE(check_local_relations(Family::Z, 2, 2, SignConvention::FOnly).ok);
  EXPECT_TRUE(check_weight_zero_T(Family::Z, 3, 1, SignConvention::FOnly).ok);
  auto r = check_local_relations(Family::Z, 3, 3, SignConvention::FOnly);
  EXPECT_FALSE(r.ok);
  EXPECT_NE(r.detail.find("[E1,F2]"), std::string::npos);
}
