#include <gtest/gtest.h>

#include <set>

#include "support.hpp"
#include "weylmv/localization/brion.hpp"
#include "weylmv/orbital/conjecture.hpp"

using namespace weylmv;
using namespace weylmv::testing;

namespace {

MultiPoly x(int d, int i, int j) {
  CoordRing r = CoordRing::upper_triangular(d);
  return r.var(CoordRing::ut_index(i, j));
}

MultiPoly root(int d, int i, int j) {
  TorusRing R{d};
  return R.eps(i - 1) - R.eps(j - 1);
}

std::vector<Partition> partitions_upto(int dmax) {
  std::vector<Partition> out;
  for (int d = 1; d <= dmax; ++d)
    for (const auto& l : partitions(d)) out.push_back(l);
  return out;
}

OrbitalDecomposition decompose_seeded(const Partition& l, std::uint64_t seed = 11) {
  Rng rng(seed);
  return decompose(l, rng);
}

}  // namespace

TEST(OrbitIdeal, Examples) {
  for (int d = 2; d <= 4; ++d) {
    std::vector<int> ones(d, 1);
    auto g = groebner(orbit_ideal(Partition(ones)).ideal);
    EXPECT_EQ(static_cast<int>(g.polys().size()), d * (d - 1) / 2);
    for (const auto& p : g.polys()) EXPECT_EQ(p.total_degree(), 1);
    EXPECT_TRUE(groebner(orbit_ideal(Partition({d})).ideal).is_zero_ideal());
  }
  auto g = groebner(orbit_ideal(Partition({2, 1})).ideal);
  ASSERT_EQ(g.polys().size(), 1u);
  EXPECT_EQ(g.polys()[0], x(3, 1, 2) * x(3, 2, 3));
}

TEST(OrbitIdeal, DimensionIsHalfOrbit) {
  for (const auto& l : partitions_upto(5)) EXPECT_EQ(dimension(orbit_ideal(l).ideal), half_orbit_dim(l)) << l.str();
}

// Points of O_mu lie in the closure of O_lambda exactly when mu <= lambda in dominance.
TEST(OrbitIdeal, SamplingOracle) {
  Rng rng(2024);
  for (int d = 2; d <= 4; ++d)
    for (const auto& l : partitions(d)) {
      auto I = orbit_ideal(l).ideal;
      for (const auto& mu : partitions(d)) {
        int per_flag = std::max(1, 200 / static_cast<int>(coordinate_flag_conjugates(mu).size()));
        for (const auto& pt : sample_orbit_points(rng, mu, per_flag)) {
          ASSERT_EQ(jordan_type(pt), mu);
          bool on = true;
          for (const auto& f : I.gens)
            if (f.evaluate(upper_coords(pt)) != 0) on = false;
          ASSERT_EQ(on, mu.dominated_by(l)) << l.str() << " vs " << mu.str();
          if (!(mu == l)) break;  // one witness per boundary stratum
        }
      }
    }
}

TEST(Decompose, Examples) {
  for (int d = 1; d <= 4; ++d) {
    std::vector<int> ones(d, 1);
    auto dec = decompose_seeded(Partition(ones));
    ASSERT_EQ(dec.components.size(), 1u);
    std::vector<std::vector<int>> column;
    for (int i = 1; i <= d; ++i) column.push_back({i});
    EXPECT_EQ(dec.components[0].tableau, StandardTableau(column));
  }
  auto dec = decompose_seeded(Partition({2, 1}));
  ASSERT_EQ(dec.components.size(), 2u);
  EXPECT_EQ(dec.components[0].ideal.gens, std::vector<MultiPoly>{x(3, 2, 3)});
  EXPECT_EQ(dec.components[0].tableau, StandardTableau({{1, 2}, {3}}));
  EXPECT_EQ(dec.components[1].ideal.gens, std::vector<MultiPoly>{x(3, 1, 2)});
  EXPECT_EQ(dec.components[1].tableau, StandardTableau({{1, 3}, {2}}));
  EXPECT_EQ(decompose_seeded(Partition({2, 2})).components.size(), 2u);
}

TEST(Decompose, CountsLabelsAndAdditivity) {
  int total4 = 0;
  for (const auto& l : partitions_upto(4)) {
    auto dec = decompose_seeded(l);
    EXPECT_FALSE(dec.used_fallback) << l.str();
    EXPECT_EQ(static_cast<long>(dec.components.size()), hook_length_count(l)) << l.str();
    std::vector<StandardTableau> labels;
    for (const auto& c : dec.components) labels.push_back(c.tableau);
    EXPECT_EQ(labels, standard_tableaux(l));
    EXPECT_TRUE(dec.additive) << l.str();
    int codim = l.size() * (l.size() - 1) / 2 - half_orbit_dim(l);
    for (const auto& c : dec.components) {
      EXPECT_EQ(c.dim, half_orbit_dim(l));
      EXPECT_FALSE(c.joseph.is_zero());
      EXPECT_TRUE(c.joseph.is_homogeneous());
      EXPECT_EQ(c.joseph.total_degree(), codim);
      EXPECT_EQ(c.equiv_mult, RatFunc(c.joseph, nilradical_euler(l.size())));
    }
    if (l.size() == 4) total4 += static_cast<int>(dec.components.size());
  }
  EXPECT_EQ(total4, 10);
}

TEST(Decompose, StretchFive) {
  for (const auto& l : partitions(5)) {
    auto dec = decompose_seeded(l);
    EXPECT_EQ(static_cast<long>(dec.components.size()), hook_length_count(l)) << l.str();
    EXPECT_TRUE(dec.additive) << l.str();
  }
}

TEST(Decompose, InterpolationFallbackRecoversHyperplanes) {
  Rng rng(5);
  auto oi = orbit_ideal(Partition({2, 1}));
  std::vector<std::string> notes;
  DecomposeOptions opt;
  auto comps = detail::decompose_by_interpolation(oi, half_orbit_dim(Partition({2, 1})), rng, opt, notes);
  ASSERT_EQ(comps.size(), 2u);
  std::set<std::string> js;
  for (const auto& c : comps) js.insert(c.joseph.render(TorusRing{3}.names()));
  EXPECT_EQ(js, (std::set<std::string>{"e1 - e2", "e2 - e3"}));
}

TEST(Joseph, Examples) {
  for (int d = 2; d <= 4; ++d) {
    auto top = decompose_seeded(Partition({d}));
    EXPECT_EQ(top.components[0].joseph, MultiPoly(d + 1, Q(1)));
    std::vector<int> ones(d, 1);
    EXPECT_EQ(decompose_seeded(Partition(ones)).components[0].joseph, nilradical_euler(d));
  }
  auto dec = decompose_seeded(Partition({2, 1}));
  EXPECT_EQ(dec.components[0].joseph, root(3, 2, 3));
  EXPECT_EQ(dec.components[1].joseph, root(3, 1, 2));
}

TEST(WeylSpan, Examples) {
  for (int d = 2; d <= 4; ++d) {
    auto top = decompose_seeded(Partition({d}));
    std::vector<int> ones(d, 1);
    auto bottom = decompose_seeded(Partition(ones));
    for (int a = 1; a < d; ++a) {
      EXPECT_EQ(weyl_matrix_on_span(top.components, a, SpanBasis::J).m, QMatrix::identity(1));
      EXPECT_EQ(weyl_matrix_on_span(bottom.components, a, SpanBasis::E).m, QMatrix::identity(1));
      EXPECT_EQ(weyl_matrix_on_span(bottom.components, a, SpanBasis::J).m, Q(-1) * QMatrix::identity(1));
    }
  }
  // basis ordered (e1 - e2, e2 - e3): columns [-1, 0] and [1, 1]
  auto dec = decompose_seeded(Partition({2, 1}));
  std::vector<OrbitalComponent> ordered{dec.components[1], dec.components[0]};
  auto m = weyl_matrix_on_span(ordered, 1, SpanBasis::J);
  ASSERT_TRUE(m.in_span);
  QMatrix want(2, 2);
  want(0, 0) = -1;
  want(0, 1) = 1;
  want(1, 1) = 1;
  EXPECT_EQ(m.m, want);
}

TEST(WeylSpan, LeavingTheSpanIsReported) {
  auto dec = decompose_seeded(Partition({2, 1}));
  std::vector<OrbitalComponent> only{dec.components[0]};  // J = e2 - e3
  auto m = weyl_matrix_on_span(only, 1, SpanBasis::J);
  EXPECT_FALSE(m.in_span);
  EXPECT_FALSE(m.detail.empty());
  EXPECT_FALSE(weyl_matrix_on_span(only, 1, SpanBasis::E).in_span);
  EXPECT_TRUE(weyl_matrix_on_span(only, 2, SpanBasis::J).in_span);
}

TEST(Hotta, Examples) {
  auto h = hotta_check(decompose_seeded(Partition({2, 1})));
  ASSERT_TRUE(h.ok());
  EXPECT_EQ(h.chi_E.at({1, 1, 1}), 2);
  EXPECT_EQ(h.chi_E.at({2, 1}), 0);
  EXPECT_EQ(h.chi_E.at({3}), -1);
  EXPECT_EQ(h.outcome_E, "both");
  auto top = hotta_check(decompose_seeded(Partition({3})));
  EXPECT_EQ(top.chi_E, irreducible_character(Partition({1, 1, 1})));
  auto bottom = hotta_check(decompose_seeded(Partition({1, 1, 1})));
  EXPECT_EQ(bottom.chi_E, irreducible_character(Partition({3})));
}

TEST(Hotta, AllPartitionsUpToFour) {
  for (const auto& l : partitions_upto(4)) {
    if (l.size() < 2) continue;
    auto h = hotta_check(decompose_seeded(l));
    EXPECT_TRUE(h.ok()) << l.str();
    EXPECT_TRUE(h.injective && h.stable_J && h.stable_E && h.e_is_minus_J && h.coxeter_J && h.coxeter_E);
    EXPECT_TRUE(h.outcome_J == "lambda" || h.outcome_J == "both") << l.str();
    EXPECT_TRUE(h.outcome_E == "transpose" || h.outcome_E == "both") << l.str();
  }
}

TEST(Conjecture, FlagshipAndAllOfFour) {
  for (int d = 2; d <= 4; ++d) {
    KLData kl(d);
    for (const auto& l : partitions(d)) {
      auto dec = decompose_seeded(l);
      auto c = conjecture_check(dec, hotta_check(dec), kl);
      EXPECT_EQ(c.verdict, Verdict::Pass) << l.str();
      EXPECT_TRUE(c.labels_agree) << l.str();
    }
  }
}

TEST(Conjecture, PolytabloidBasisIsNotAPermutationMatch) {
  auto dec = decompose_seeded(Partition({2, 1}));
  auto c = conjecture_check(dec, hotta_check(dec), KLData(3));
  EXPECT_EQ(c.verdict, Verdict::Pass);
  EXPECT_EQ(c.specht_diagnostic, "no match");
}

TEST(Conjecture, MatcherFindsPermutationsAndScalings) {
  QMatrix s(2, 2);
  s(0, 0) = -1;
  s(1, 0) = 1;
  s(1, 1) = 1;
  QMatrix p(2, 2);
  p(0, 1) = p(1, 0) = 1;
  std::vector<QMatrix> model{s}, swapped{p * s * p};
  auto m = match_generators(swapped, model);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->perm, (std::vector<int>{1, 0}));
  EXPECT_TRUE(m->all_scales_one());
  QMatrix dg(2, 2), dginv(2, 2);
  dg(0, 0) = 1;
  dg(1, 1) = 3;
  dginv(0, 0) = 1;
  dginv(1, 1) = Q(1, 3);
  auto r = match_generators({dginv * s * dg}, model);
  ASSERT_TRUE(r);
  EXPECT_FALSE(r->all_scales_one());
  QMatrix other = QMatrix::identity(2);
  EXPECT_FALSE(match_generators({other}, model));
}

TEST(Localization, SmoothPointExamples) {
  int d = 3;
  CoordRing u = CoordRing::upper_triangular(d);
  TorusRing R{d};
  CoordinateSubspace origin{u, {}};
  EXPECT_TRUE(localization_check(origin));
  EXPECT_EQ(multiplicity_via_multidegree(origin), RatFunc(R.one()));
  CoordinateSubspace full{u, {0, 1, 2}};
  EXPECT_TRUE(localization_check(full));
  EXPECT_EQ(multiplicity_via_multidegree(full), RatFunc(R.one(), nilradical_euler(d)));
  CoordinateSubspace hyper{u, {1, 2}};  // x12 = 0
  EXPECT_TRUE(localization_check(hyper));
  EXPECT_EQ(multiplicity_via_multidegree(hyper), RatFunc(R.one(), root(3, 1, 3) * root(3, 2, 3)));
  CoordRing flat = CoordRing::upper_triangular(d);
  flat.weights[0] = TorusWeight::zero(d);
  EXPECT_THROW(localization_check(CoordinateSubspace{flat, {0}}), DomainError);
}

TEST(Localization, RandomCoordinateSubspaces) {
  Rng rng(77);
  for (int t = 0; t < kTrials; ++t) {
    int d = static_cast<int>(uniform_int(rng, 2, 4));
    CoordRing u = CoordRing::upper_triangular(d);
    std::vector<int> free;
    for (int v = 0; v < u.nvars(); ++v)
      if (uniform_int(rng, 0, 1)) free.push_back(v);
    ASSERT_TRUE(localization_check(CoordinateSubspace{u, free}));
  }
}
