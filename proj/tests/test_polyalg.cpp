#include <gtest/gtest.h>

#include "support.hpp"
#include "weylmv/polyalg/ratfunc.hpp"
#include "weylmv/polyalg/torus.hpp"

using namespace weylmv;
using namespace weylmv::testing;

namespace {

// Independent oracle: (w.f)(x) = f(y) with y_i = x_{w(i)}, h unchanged.
Q act_then_eval(const Perm& w, const MultiPoly& f, const std::vector<Q>& x) {
  std::vector<Q> y(x.size());
  for (std::size_t i = 0; i < w.size(); ++i) y[i] = x[w[i]];
  y.back() = x.back();
  return f.evaluate(y);
}

}  // namespace

TEST(WeylAct, TranspositionSwapsVariables) {
  TorusRing R{3};
  EXPECT_EQ(weyl_act(simple_reflection(3, 1), R.alpha(1)), R.eps(1) - R.eps(0));
}

TEST(WeylAct, IdentityFixes) {

  Rng rng(11);
  MultiPoly f = random_poly(rng, 4, 4, 6);
  EXPECT_EQ(weyl_act(identity_perm(3), f), f);
}

TEST(WeylAct, VandermondeIsAlternating) {
  TorusRing R{3};
  MultiPoly v = (R.eps(0) - R.eps(1)) * (R.eps(0) - R.eps(2)) * (R.eps(1) - R.eps(2));
  MultiPoly got = weyl_act(simple_reflection(3, 1), v);
  EXPECT_EQ(got, -v);
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    auto x = random_point(rng, 4);
    EXPECT_EQ(got.evaluate(x), act_then_eval(simple_reflection(3, 1), v, x));
  }
}

TEST(WeylAct, DimensionMismatchThrows) {
  TorusRing R{3};
  EXPECT_THROW(weyl_act(identity_perm(2), R.eps(0)), CompositionError);
}

TEST(EulerClass, PositiveRootsD3) {
  TorusRing R{3};
  MultiPoly expect = (R.eps(0) - R.eps(1)) * (R.eps(0) - R.eps(2)) * (R.eps(1) - R.eps(2));
  EXPECT_EQ(euler_class(nilradical_weights({1, 1, 1}), false, 3), expect);
}

TEST(EulerClass, ParabolicWithShift) {
  TorusRing R{2};
  auto p = parabolic_weights({1, 1});
  EXPECT_EQ(p.size(), 3u);
  MultiPoly expect = R.h() * R.h() * (R.alpha(1) + R.h());
  EXPECT_EQ(euler_class(p, true, 2), expect);
}

TEST(EulerClass, ZeroWeightIsSingular) {
  EXPECT_THROW(euler_class({TorusWeight::zero(2)}, false, 2), DomainError);
}

TEST(EulerClass, WeightSetShapes) {
  EXPECT_EQ(nilradical_weights({2, 1}).size(), 2u);
  EXPECT_EQ(parabolic_weights({2, 1}).size(), 7u);
  EXPECT_EQ(opposite_nilradical_weights({1, 2})[0], -TorusWeight::root(3, 0, 1));
}

TEST(Bgg, OnLinearAndConstant) {
  TorusRing R{3};
  EXPECT_EQ(bgg_delta(1, R.eps(0)), R.one());
  EXPECT_TRUE(bgg_delta(1, MultiPoly(4, Q(7))).is_zero());
  EXPECT_TRUE(bgg_delta(1, R.h()).is_zero());
}

TEST(Bgg, SquaresToZeroOnCubics) {
  Rng rng(3);
  for (int t = 0; t < 25; ++t) {
    MultiPoly f = random_poly(rng, 4, 3, 8);
    EXPECT_TRUE(bgg_delta(1, bgg_delta(1, f)).is_zero());
    EXPECT_TRUE(bgg_delta(2, bgg_delta(2, f)).is_zero());
  }
}

TEST(RatFunc, CancelsCommonFactors) {
  TorusRing R{2};
  MultiPoly a = R.alpha(1), b = R.alpha(1) + R.h();
  RatFunc f(a * b, b * R.h());
  EXPECT_EQ(f.num(), a);
  ASSERT_EQ(f.den_factors().size(), 1u);
  EXPECT_EQ(f.den(), R.h());
  EXPECT_FALSE(f.regular_along(R.h_index()));
  EXPECT_THROW(f.specialize(R.h_index(), 0), DomainError);
}

TEST(RatFunc, GcdCancellationOfNonLinearFactor) {
  TorusRing R{2};
  MultiPoly p = R.eps(0) * R.eps(0) + R.eps(1) * R.h() + Q(1);
  MultiPoly q = R.eps(1) - R.h() + Q(3);
  RatFunc f(p * q, q * p * R.eps(0));
  RatFunc expect(R.one(), R.eps(0));
  EXPECT_EQ(f, expect);
  EXPECT_EQ(f.num(), R.one());
}

TEST(RatFunc, FieldIdentities) {
  TorusRing R{2};
  RatFunc x = R.eps(0), y = R.eps(1);
  RatFunc s = RatFunc(R.one()) / x + RatFunc(R.one()) / y;
  EXPECT_EQ(s, (x + y) / (x * y));
  EXPECT_TRUE((s - s).is_zero());
  EXPECT_EQ(s * (x * y), x + y);
}

TEST(Render, Canonical) {
  TorusRing R{2};
  MultiPoly f = (R.eps(0) - R.eps(1)) * (R.eps(0) - R.eps(1)) + R.h() * R.h();
  EXPECT_EQ(f.render(R.names()), "e1^2 - 2*e1*e2 + e2^2 + h^2");
}

TEST(Gcd, Basics) {
  TorusRing R{3};
  MultiPoly a = R.alpha(1), b = R.alpha(2) + R.h();
  MultiPoly c = R.eps(2) * R.eps(2) + R.h();
  EXPECT_EQ(gcd(a * b * c, b * c * c), (b * c).monic());
  EXPECT_TRUE(gcd(a, b).is_constant());
}
