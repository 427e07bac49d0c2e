// Randomized invariants, one suite per module, kTrials draws each from fixed seeds.
// Invariants over finite families (all partitions, all compositions) run exhaustively.
#include <gtest/gtest.h>

#include <set>

#include "support.hpp"
#include "weylmv/groebner/primes.hpp"
#include "weylmv/harness/run.hpp"
#include "weylmv/localization/brion.hpp"

using namespace weylmv;
using namespace weylmv::testing;

namespace {

TorusWeight random_weight(Rng& rng, int d) {
  TorusWeight w = TorusWeight::zero(d);
  while (w.is_zero())
    for (auto& c : w.coeffs) c = uniform_int(rng, -2, 2);
  return w;
}

Composition random_composition(Rng& rng, int n, int d) {
  std::vector<int> parts(n, 0);
  for (int i = 0; i < d; ++i) ++parts[uniform_int(rng, 0, n - 1)];
  return Composition{parts, false};
}

QMatrix random_strictly_upper(Rng& rng, int d) {
  QMatrix x(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (uniform_int(rng, 0, 2)) x(i, j) = Q(uniform_int(rng, -3, 3));
  return x;
}

const std::vector<Partition>& partitions_to_four() {
  static const std::vector<Partition> v = [] {
    std::vector<Partition> out;
    for (int d = 1; d <= 4; ++d)
      for (const auto& l : partitions(d)) out.push_back(l);
    return out;
  }();
  return v;
}

const OrbitalDecomposition& cached_decomposition(const Partition& l) {
  static std::map<Partition, OrbitalDecomposition> cache;
  auto it = cache.find(l);
  if (it == cache.end()) {
    Rng rng(split_seed(5, detail::partition_stream(l)));
    it = cache.emplace(l, decompose(l, rng)).first;
  }
  return it->second;
}

}  // namespace

// ---- polyalg

TEST(PolyalgProperty, WeylActionIsAGroupAction) {
  Rng rng(101);
  for (int t = 0; t < kTrials; ++t) {
    int d = static_cast<int>(uniform_int(rng, 1, 4));
    Perm v = random_perm(rng, d), w = random_perm(rng, d);
    MultiPoly f = random_poly(rng, d + 1, 4, 6);
    ASSERT_EQ(weyl_act(v, weyl_act(w, f)), weyl_act(compose(v, w), f));
  }
}

TEST(PolyalgProperty, DividedDifferencesNilCoxeter) {
  Rng rng(102);
  for (int t = 0; t < kTrials; ++t) {
    MultiPoly f = random_poly(rng, 4, 4, 6);  // d = 3 plus h
    for (int a = 1; a <= 2; ++a) {
      ASSERT_TRUE(bgg_delta(a, bgg_delta(a, f)).is_zero());
      ASSERT_EQ(bgg_delta(a, weyl_act(simple_reflection(3, a), f)), -bgg_delta(a, f));
    }
    ASSERT_EQ(bgg_delta(1, bgg_delta(2, bgg_delta(1, f))), bgg_delta(2, bgg_delta(1, bgg_delta(2, f))));
  }
}

TEST(PolyalgProperty, EulerClassMultiplicative) {
  Rng rng(103);
  for (int t = 0; t < kTrials; ++t) {
    int d = static_cast<int>(uniform_int(rng, 1, 4));
    WeightMultiset a, b;
    for (long k = uniform_int(rng, 0, 3); k > 0; --k) a.push_back(random_weight(rng, d));
    for (long k = uniform_int(rng, 0, 3); k > 0; --k) b.push_back(random_weight(rng, d));
    bool shift = uniform_int(rng, 0, 1);
    ASSERT_EQ(euler_class(multiset_union(a, b), shift, d), euler_class(a, shift, d) * euler_class(b, shift, d));
  }
}

TEST(PolyalgProperty, RatFuncInverse) {
  Rng rng(104);
  for (int t = 0; t < kTrials; ++t) {
    MultiPoly f = random_nonzero_poly(rng, 3, 3, 4), g = random_nonzero_poly(rng, 3, 3, 4);
    RatFunc q = RatFunc(f, g) * RatFunc(g, f);
    ASSERT_EQ(q, RatFunc(MultiPoly(3, Q(1))));
  }
}

// ---- groebner

TEST(GroebnerProperty, NormalFormIdempotentOnRandomIdeals) {
  Rng rng(201);
  CoordRing r = CoordRing::plain(3);
  for (int t = 0; t < kTrials; ++t) {
    PolyIdeal I{r, {random_nonzero_poly(rng, 3, 2, 3), random_nonzero_poly(rng, 3, 2, 3)}};
    auto g = groebner(I);
    MultiPoly f = random_poly(rng, 3, 3, 5);
    MultiPoly nf = g.normal_form(f);
    ASSERT_EQ(g.normal_form(nf), nf);
    ASSERT_TRUE(g.contains(f - nf));
  }
}

TEST(GroebnerProperty, CodimensionAndTermOrderInvariance) {
  Rng rng(202);
  // standard grading: every variable carries e_1, so each generator below is homogeneous
  CoordRing r = CoordRing::plain(4);
  TorusWeight w = TorusWeight::zero(1);
  w.coeffs[0] = 1;
  r.weights.assign(4, w);
  int tested = 0;
  for (int t = 0; t < kTrials; ++t) {
    PolyIdeal I{r, {}};
    for (long k = uniform_int(rng, 1, 3); k > 0; --k) {
      int deg = static_cast<int>(uniform_int(rng, 1, 2));
      MultiPoly f(4);
      for (int j = 0; j < 3; ++j) {
        Monomial m;
        for (int s = 0; s < deg; ++s) ++m.e[uniform_int(rng, 0, 3)];
        f.add_term(m, Q(uniform_int(rng, -2, 2)));
      }
      if (!f.is_zero()) I.gens.push_back(f);
    }
    auto g = groebner(I);
    if (g.is_unit()) continue;
    MultiPoly m = multidegree(g, r);
    ASSERT_EQ(dimension(g) + m.total_degree(), 4);
    PolyIdeal J = I;
    J.ring = r.with_order(TermOrder::lex(4));
    ASSERT_EQ(multidegree(J), m);
    ++tested;
  }
  EXPECT_GT(tested, kTrials / 2);
}

TEST(GroebnerProperty, CoordinateArrangementsDecomposeExactly) {
  Rng rng(203);
  int n = 4;
  CoordRing r = CoordRing::plain(n);
  for (int t = 0; t < kTrials; ++t) {
    std::vector<unsigned> sets;
    for (long k = uniform_int(rng, 1, 3); k > 0; --k) sets.push_back(static_cast<unsigned>(uniform_int(rng, 1, 15)));
    std::vector<Monomial> gens{Monomial{}};
    for (unsigned s : sets) {
      std::vector<Monomial> next;
      for (const auto& m : gens)
        for (int v = 0; v < n; ++v)
          if (s >> v & 1u) next.push_back(Monomial::lcm(m, unit_monomial(v)));
      gens = next;
    }
    PolyIdeal I{r, {}};
    for (const auto& m : MonomialIdeal::from(n, gens).gens) I.gens.push_back(MultiPoly::monomial(n, m));
    std::set<unsigned> expect;
    for (unsigned s : sets) {
      bool minimal = true;
      for (unsigned o : sets)
        if (o != s && (o & s) == o) minimal = false;
      if (minimal) expect.insert(s);
    }
    auto dec = minimal_primes_desk(I, rng);
    ASSERT_FALSE(dec.incomplete);
    std::set<unsigned> got;
    for (const auto& p : dec.primes) {
      unsigned s = 0;
      for (const auto& g : p.gens)
        for (int v = 0; v < n; ++v)
          if (g.degree_in(v)) s |= 1u << v;
      got.insert(s);
    }
    ASSERT_EQ(got, expect) << "trial " << t;
  }
}

TEST(GroebnerProperty, OrbitalIdealsAreAdditive) {
  for (const auto& l : partitions_to_four()) {
    const auto& dec = cached_decomposition(l);
    EXPECT_TRUE(dec.additive) << l.str();
  }
}

// ---- symgrp

TEST(SymgrpProperty, SpechtCoxeterAndCharacters) {
  for (int d = 1; d <= 5; ++d)
    for (const auto& l : partitions(d)) {
      auto s = specht_module(l);
      EXPECT_TRUE(coxeter_relations_hold(s.gens, s.dim)) << l.str();
      auto chi = character_by_class(s.gens, s.dim, d);
      for (const auto& mu : partitions(d)) EXPECT_EQ(chi.at(mu.parts), mn_character(l, mu)) << l.str() << " " << mu.str();
    }
}

TEST(SymgrpProperty, SpaltensteinShapeIsJordanType) {
  Rng rng(301);
  for (int t = 0; t < kTrials; ++t) {
    QMatrix x = random_strictly_upper(rng, static_cast<int>(uniform_int(rng, 1, 5)));
    ASSERT_EQ(spaltenstein_tableau(x).shape(), jordan_type(x));
  }
}

TEST(SymgrpProperty, DenseSamplingHitsEveryTableau) {
  Rng rng(302);
  for (const auto& l : partitions_to_four()) {
    std::set<std::vector<std::vector<int>>> seen;
    for (const auto& x : sample_orbit_points(rng, l, 200)) seen.insert(spaltenstein_tableau(x).rows);
    EXPECT_EQ(static_cast<long>(seen.size()), hook_length_count(l)) << l.str();
  }
}

TEST(SymgrpProperty, RaiseThenLowerIsIdentity) {
  Rng rng(303);
  for (int t = 0; t < kTrials; ++t) {
    int n = static_cast<int>(uniform_int(rng, 2, 5));
    Composition c = random_composition(rng, n, static_cast<int>(uniform_int(rng, 0, 6)));
    int a = static_cast<int>(uniform_int(rng, 1, n - 1));
    Composition up = e_tilde(a, c);
    if (!up.ghost) {
      ASSERT_EQ(f_tilde(a, up), c);
    }
    Composition down = f_tilde(a, c);
    if (!down.ghost) {
      ASSERT_EQ(e_tilde(a, down), c);
    }
  }
}

// ---- schurweyl

TEST(SchurweylProperty, WeightZeroOperatorsOnRandomSubtowers) {
  // random direct sums of Specht modules: T_a is computed blockwise yet must still
  // satisfy the Coxeter relations and agree with the full-tower formula
  Rng rng(401);
  std::map<Partition, std::vector<QMatrix>> cache;
  for (int t = 0; t < kTrials; ++t) {
    int d = static_cast<int>(uniform_int(rng, 2, 4));
    auto ps = partitions(d);
    const Partition& l = ps[uniform_int(rng, 0, static_cast<long>(ps.size()) - 1)];
    if (!cache.count(l)) {
      auto tower = build_tower(specht_module(l), d);
      std::vector<QMatrix> ts;
      for (int a = 1; a < d; ++a) {
        ts.push_back(weight_zero_T(tower, a));
        ASSERT_EQ(ts.back(), weight_zero_T_full(tower, a));
      }
      ASSERT_TRUE(coxeter_relations_hold(ts, ts.front().rows()));
      cache[l] = ts;
    }
    // T_a acts as s_a on a random zero-weight vector: T_a^2 v = v
    const auto& ts = cache[l];
    int a = static_cast<int>(uniform_int(rng, 0, d - 2));
    QMatrix v(ts[a].rows(), 1);
    for (int i = 0; i < v.rows(); ++i) v(i, 0) = random_q(rng, 5);
    ASSERT_EQ(ts[a] * (ts[a] * v), v);
  }
}

// ---- localization

TEST(LocalizationProperty, ConvolutionAssociative) {
  Rng rng(501);
  for (int t = 0; t < kTrials; ++t) {
    int d = static_cast<int>(uniform_int(rng, 1, 3));
    int n = static_cast<int>(uniform_int(rng, 1, 3));
    Family fam = uniform_int(rng, 0, 1) ? Family::Z : Family::X;
    Composition c0 = random_composition(rng, n, d), c1 = random_composition(rng, n, d),
                c2 = random_composition(rng, n, d), c3 = random_composition(rng, n, d);
    CorrClass a = correspondence(c0, c1, fam), b = correspondence(c1, c2, fam), c = correspondence(c2, c3, fam);
    CorrClass left = convolve(convolve(a, b), c), right = convolve(a, convolve(b, c));
    ASSERT_EQ(left.coeffs.size(), right.coeffs.size());
    for (const auto& [k, v] : left.coeffs) ASSERT_TRUE(v == right.coeffs.at(k));
  }
}

TEST(LocalizationProperty, SmoothCoordinateSubspaces) {
  Rng rng(502);
  for (int t = 0; t < kTrials; ++t) {
    CoordRing u = CoordRing::upper_triangular(static_cast<int>(uniform_int(rng, 2, 4)));
    std::vector<int> free;
    for (int v = 0; v < u.nvars(); ++v)
      if (uniform_int(rng, 0, 1)) free.push_back(v);
    ASSERT_TRUE(localization_check(CoordinateSubspace{u, free}));
  }
}

// ---- orbital

TEST(OrbitalProperty, JosephPolynomialsHomogeneousOfCodimension) {
  for (const auto& l : partitions_to_four()) {
    const auto& dec = cached_decomposition(l);
    int d = l.size();
    int codim = d * (d - 1) / 2 - half_orbit_dim(l);
    EXPECT_EQ(static_cast<long>(dec.components.size()), hook_length_count(l));
    for (const auto& c : dec.components) {
      EXPECT_FALSE(c.joseph.is_zero());
      EXPECT_TRUE(c.joseph.is_homogeneous());
      EXPECT_EQ(c.joseph.total_degree(), codim) << l.str();
    }
  }
}

TEST(OrbitalProperty, SpanActionIsCoxeterAndSignFlipped) {
  for (const auto& l : partitions_to_four()) {
    if (l.size() < 2) continue;
    auto h = hotta_check(cached_decomposition(l));
    EXPECT_TRUE(h.injective) << l.str();
    EXPECT_TRUE(h.stable_J && h.stable_E);
    EXPECT_TRUE(coxeter_relations_hold(h.J, h.components));
    EXPECT_TRUE(coxeter_relations_hold(h.E, h.components));
    for (std::size_t a = 0; a < h.J.size(); ++a) EXPECT_EQ(h.E[a], -h.J[a]);
  }
}

TEST(OrbitalProperty, RandomCombinationsStayInSpan) {
  // W-stability on random vectors of the span: s_a(sum c_Z J_Z) expands with the matrix column
  Rng rng(601);
  std::vector<std::pair<Partition, HottaReport>> reps;
  for (const auto& l : partitions_to_four())
    if (l.size() >= 2) reps.emplace_back(l, hotta_check(cached_decomposition(l)));
  for (int t = 0; t < kTrials; ++t) {
    const auto& [l, h] = reps[uniform_int(rng, 0, static_cast<long>(reps.size()) - 1)];
    const auto& cs = cached_decomposition(l).components;
    int d = l.size();
    int a = static_cast<int>(uniform_int(rng, 1, d - 1));
    std::vector<Q> coef(cs.size());
    MultiPoly f(d + 1);
    for (std::size_t k = 0; k < cs.size(); ++k) {
      coef[k] = random_q(rng, 5);
      f += coef[k] * cs[k].joseph;
    }
    MultiPoly want(d + 1);
    for (std::size_t i = 0; i < cs.size(); ++i) {
      Q c = 0;
      for (std::size_t k = 0; k < cs.size(); ++k) c += h.J[a - 1](static_cast<int>(i), static_cast<int>(k)) * coef[k];
      want += c * cs[i].joseph;
    }
    ASSERT_EQ(weyl_act(simple_reflection(d, a), f), want);
  }
}

// ---- cli

TEST(CliProperty, ReportsAreDeterministic) {
  Rng rng(701);
  const std::vector<std::string> cheap{"orbital", "hotta", "conjecture", "lattice"};
  for (int t = 0; t < kTrials; ++t) {
    RunConfig c;
    c.d = static_cast<int>(uniform_int(rng, 1, 2));
    c.seed = rng();
    for (const auto& k : cheap)
      if (uniform_int(rng, 0, 1)) c.checks.insert(k);
    if (c.checks.empty()) c.checks.insert("lattice");
    c.jobs = static_cast<int>(uniform_int(rng, 1, 3));
    auto a = run(c), b = run(c);
    a.report.erase("timings");
    b.report.erase("timings");
    ASSERT_EQ(a.report.dump(), b.report.dump());
    ASSERT_EQ(a.exit_code, 0);
  }
}

TEST(CliProperty, ConfigErrorsAreRejectedBeforeWork) {
  Rng rng(702);
  for (int t = 0; t < kTrials; ++t) {
    int d = static_cast<int>(uniform_int(rng, 1, 5));
    std::string text;
    int sum = 0;
    bool decreasing = true, prev_set = false;
    int prev = 0;
    for (long k = uniform_int(rng, 1, 4); k > 0; --k) {
      int p = static_cast<int>(uniform_int(rng, 1, 4));
      if (prev_set && p > prev) decreasing = false;
      prev = p;
      prev_set = true;
      sum += p;
      text += (text.empty() ? "" : ",") + std::to_string(p);
    }
    if (uniform_int(rng, 0, 9) == 0) text += ",x";
    bool malformed = text.find('x') != std::string::npos || !decreasing;
    RunConfig c;
    c.d = d;
    c.checks = {"lattice"};
    if (malformed) {
      ASSERT_THROW(parse_partition(text), ConfigError) << text;
      continue;
    }
    c.lambdas = {parse_partition(text)};
    if (sum != d) {
      ASSERT_THROW(validate(c), ConfigError) << text << " d=" << d;
    } else {
      ASSERT_NO_THROW(validate(c));
    }
  }
}
