#include <gtest/gtest.h>

#include <algorithm>

#include "medcurv/conjugacy.hpp"
#include "medcurv/curvature.hpp"
#include "medcurv/error.hpp"
#include "oracles.hpp"

using namespace medcurv;

namespace {

TEST(Orbit, CentralElementIsClosed) {
  const auto heis = spec_from_shorthand("heis3");
  const auto t = enumerate_ball(heis, 6);
  const auto z = heis.g().parse("(0,0,1)");
  const auto o = orbit(t, z, 6);
  EXPECT_EQ(o.verdict, OrbitVerdict::kClosedWithinBound);
  EXPECT_FALSE(o.frontier_escaped);
  ASSERT_EQ(o.members.size(), 1u);
  EXPECT_EQ(o.members[0], z);
}

TEST(Orbit, AbelianSingleton) {
  const auto z3 = spec_from_shorthand("zn:3");
  const auto t = enumerate_ball(z3, 4);
  for (const Element& x : t.sphere(2)) {
    const auto o = orbit(t, x, 4);
    EXPECT_EQ(o.members.size(), 1u);
    EXPECT_EQ(o.verdict, OrbitVerdict::kClosedWithinBound);
  }
}

TEST(Orbit, FreeGeneratorEscapes) {
  const auto free = spec_from_shorthand("free:2");
  const auto t = enumerate_ball(free, 5);
  const auto o = orbit(t, free.g().parse("a"), 5);
  EXPECT_EQ(o.verdict, OrbitVerdict::kEscapesBound);
  EXPECT_TRUE(o.frontier_escaped);
  // the cyclically reduced conjugates b^k a b^-k of length <= 5
  for (const char* w : {"a", "baB", "Bab", "bbaBB", "aba" /* not a conjugate */}) {
    const bool in = std::binary_search(o.members.begin(), o.members.end(), free.g().parse(w));
    EXPECT_EQ(in, std::string(w) != "aba") << w;
  }
}

TEST(Orbit, MembersAreConjugateAndInBall) {
  const auto heis = spec_from_shorthand("heis3");
  const auto t = enumerate_ball(heis, 6);
  const auto x = heis.g().parse("ab");
  const auto o = orbit(t, x, 6);
  EXPECT_TRUE(std::is_sorted(o.members.begin(), o.members.end()));
  const auto ab = heis.g().abelianization(x);
  for (const Element& m : o.members) {
    EXPECT_LE(t.norm(m), 6);
    EXPECT_EQ(heis.g().abelianization(m), ab);
  }
}

TEST(Orbit, Preconditions) {
  const auto free = spec_from_shorthand("free:2");
  const auto t = enumerate_ball(free, 4);
  EXPECT_THROW(orbit(t, free.g().parse("abab"), 3), PreconditionError);
  EXPECT_THROW(orbit(t, free.g().parse("a"), 5), PreconditionError);
}

TEST(ExitingTime, Examples) {
  const auto free = spec_from_shorthand("free:2");
  const auto ft = enumerate_ball(free, 8);
  EXPECT_EQ(exiting_time(ft, free.g().parse("aa"), 2), 1);
  const auto z2 = spec_from_shorthand("zn:2");
  const auto zt = enumerate_ball(z2, 8);
  EXPECT_EQ(exiting_time(zt, z2.g().parse("(1,2)"), 2), std::nullopt);
  const auto heis = spec_from_shorthand("heis3");
  const auto ht = enumerate_ball(heis, 10);
  EXPECT_EQ(exiting_time(ht, heis.g().parse("(0,0,1)"), 3), std::nullopt);
  EXPECT_EQ(exiting_time(ht, heis.g().parse("a"), 3), 1);
  EXPECT_THROW(exiting_time(ft, free.g().parse("aaaa"), 3), PreconditionError);
}

TEST(ExitingTime, EqualsOneExactlyForExits) {
  // tau = 1 iff some generator conjugate is longer
  for (const auto& [name, spec] : oracle::builtin_specs()) {
    const auto t = enumerate_ball(spec, 7);
    for (int n = 0; n <= 3; ++n) {
      for (const Element& x : t.sphere(n)) {
        bool exit = false;
        for (const Element& s : spec.generators) exit = exit || t.norm(spec.g().conjugate(s, x)) > n;
        const auto tau = exiting_time(t, x, 2);
        EXPECT_EQ(exit, tau == 1) << name << " " << spec.g().render(x);
        if (tau) {
          EXPECT_GE(*tau, 1);
          EXPECT_LE(*tau, 2);
        }
      }
    }
  }
}

TEST(Exits, FreeGroupEveryElementExits) {
  const auto r = exits_per_sphere(spec_from_shorthand("free:2"), 5, 1);
  ASSERT_EQ(r.spheres.size(), 5u);
  for (const auto& s : r.spheres) EXPECT_EQ(s.exits, s.size) << s.sphere;
}

TEST(Exits, AbelianNeverExits) {
  const auto r = exits_per_sphere(spec_from_shorthand("zn:2"), 8, 2);
  for (const auto& s : r.spheres) {
    EXPECT_EQ(s.exits, 0u);
    EXPECT_EQ(s.k_step_exits, 0u);
    EXPECT_EQ(s.y_size, 0u);
  }
  EXPECT_EQ(r.L, 0u);
  EXPECT_TRUE(r.exits_bounded(1, 8));
}

TEST(Exits, FlatExtensionIsBounded) {
  const auto r = exits_per_sphere(spec_from_shorthand("z2xdinf"), 10, 1);
  EXPECT_EQ(r.L, 8u);
  EXPECT_TRUE(r.exits_bounded(1, 10));
  EXPECT_TRUE(r.k_step_bounded(1, 10));
  for (const auto& s : r.spheres) {
    EXPECT_EQ(s.y_size, 8u);
    EXPECT_LE(s.exits, r.L);
  }
}

TEST(Exits, CountsMatchExitingTime) {
  const auto heis = spec_from_shorthand("heis3");
  const auto r = exits_per_sphere(heis, 5, 2);
  const auto t = enumerate_ball(heis, 9);
  for (const auto& s : r.spheres) {
    std::size_t one = 0;
    std::size_t within = 0;
    for (const Element& x : t.sphere(s.sphere)) {
      const auto tau = exiting_time(t, x, 2);
      one += tau == 1 ? 1 : 0;
      within += tau ? 1 : 0;
    }
    EXPECT_EQ(s.exits, one);
    EXPECT_EQ(s.k_step_exits, within);
    EXPECT_LE(s.exits, s.y_size);
  }
  EXPECT_EQ(r.k_step_bound, t.ball_size(1) * 3 * r.L);
}

TEST(Exits, KStepBoundHoldsEveryFamily) {
  for (const auto& [name, spec] : oracle::builtin_specs()) {
    const auto r = exits_per_sphere(spec, 4, 2);
    for (const auto& s : r.spheres) {
      EXPECT_LE(s.exits, s.y_size) << name;
      EXPECT_LE(s.k_step_exits, r.k_step_bound) << name << " sphere " << s.sphere;
      EXPECT_LE(s.exits, s.k_step_exits) << name;
    }
  }
}

TEST(Reduce, Examples) {
  const auto free = spec_from_shorthand("free:2");
  const auto ft = enumerate_ball(free, 5);
  const auto r = reduce_conjugate(ft, free.g().parse("baB"));
  EXPECT_EQ(r.minimal, free.g().parse("a"));
  EXPECT_EQ(r.minimal_norm, 1);
  ASSERT_EQ(r.chain.size(), 1u);
  EXPECT_EQ(r.chain[0].conjugator, free.g().parse("B"));

  const auto heis = spec_from_shorthand("heis3");
  const auto ht = enumerate_ball(heis, 6);
  const auto z = heis.g().parse("(0,0,1)");
  const auto rz = reduce_conjugate(ht, z);
  EXPECT_EQ(rz.minimal, z);
  EXPECT_TRUE(rz.chain.empty());
  const auto rb = reduce_conjugate(ht, heis.g().parse("(0,1,1)"));
  EXPECT_EQ(rb.minimal, heis.g().parse("b"));
  EXPECT_EQ(rb.minimal_norm, 1);
}

TEST(Reduce, ChainIsConsistent) {
  for (const auto& [name, spec] : oracle::builtin_specs()) {
    const auto t = enumerate_ball(spec, 5);
    for (const Element& x : oracle::sample_elements(t, 50, 7)) {
      const auto r = reduce_conjugate(t, x);
      Element cur = x;
      int last = t.norm(x);
      for (const auto& step : r.chain) {
        EXPECT_TRUE(spec.generators.contains(step.conjugator)) << name;
        cur = spec.g().conjugate(step.conjugator, cur);
        EXPECT_EQ(cur, step.result) << name;
        EXPECT_EQ(t.norm(cur), step.norm) << name;
        EXPECT_LT(step.norm, last) << name;
        last = step.norm;
      }
      EXPECT_EQ(cur, r.minimal) << name;
      EXPECT_EQ(r.minimal_norm, last) << name;
    }
  }
}

TEST(Conjugacy, NonnegativeCurvatureStepProperty) {
  // kappa(x) >= 0 and some generator conjugate is longer forces one that is shorter
  for (const auto& [name, spec] : oracle::builtin_specs()) {
    const auto t = enumerate_ball(spec, 7);
    for (int n = 1; n <= 5; ++n) {
      for (const Element& x : t.sphere(n)) {
        if (kappa(t, x) < Rational(0)) continue;
        bool longer = false;
        bool shorter = false;
        for (const Element& s : spec.generators) {
          const int m = t.norm(spec.g().conjugate(s, x));
          longer = longer || m > n;
          shorter = shorter || m < n;
        }
        if (longer) EXPECT_TRUE(shorter) << name << " " << spec.g().render(x);
      }
    }
  }
}

TEST(Boundary, AbelianGraphIsAPoint) {
  const auto z2 = spec_from_shorthand("zn:2");
  const auto& g = z2.g();
  const auto p = conjugacy_graph_boundary(z2, g.parse("(1,0)"), g.parse("(1,0)"), g.parse("(0,1)"), {2, 4});
  ASSERT_EQ(p.levels.size(), 2u);
  for (const auto& l : p.levels) {
    EXPECT_EQ(l.vertices, 1u);
    EXPECT_LE(l.boundary, 1u);
  }
  EXPECT_EQ(p.lipschitz_violations, 0u);
}

TEST(Boundary, FreeGroupDependentPairIsNotInjective) {
  const auto free = spec_from_shorthand("free:2");
  const auto& g = free.g();
  BoundaryOptions opts;
  opts.window = 4;
  const auto p = conjugacy_graph_boundary(free, g.parse("a"), g.parse("b"), g.parse("bb"), {3, 5}, opts);
  EXPECT_GT(p.injectivity_violations, 0u);
  EXPECT_EQ(p.lipschitz_constant, 4);
  EXPECT_EQ(p.lipschitz_violations, 0u);
  EXPECT_EQ(p.window, 4);
}

TEST(Boundary, HeisenbergProfile) {
  const auto heis = spec_from_shorthand("heis3");
  const auto& g = heis.g();
  const auto p = conjugacy_graph_boundary(heis, g.parse("a"), g.parse("b"), g.parse("(0,0,1)"), {4, 6, 8});
  ASSERT_EQ(p.levels.size(), 3u);
  EXPECT_GT(p.lipschitz_checked, 0u);
  EXPECT_EQ(p.lipschitz_violations, 0u);
  for (std::size_t i = 1; i < p.levels.size(); ++i) EXPECT_GE(p.levels[i].vertices, p.levels[i - 1].vertices);
  for (const auto& l : p.levels) EXPECT_LE(l.boundary, l.vertices);
}

}  // namespace
