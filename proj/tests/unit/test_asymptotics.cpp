#include <gtest/gtest.h>

#include <cmath>

#include "medcurv/asymptotics.hpp"
#include "medcurv/error.hpp"
#include "oracles.hpp"

using namespace medcurv;

namespace {

TEST(StableNorm, AbelianGeneratorIsCertified) {
  const auto z2 = spec_from_shorthand("zn:2");
  const auto e = stable_norm(z2, z2.g().parse("(1,0)"), 16, 20);
  ASSERT_TRUE(e.upper.has_value());
  EXPECT_EQ(*e.upper, Rational(1));
  EXPECT_EQ(e.lower, Rational(1));
  EXPECT_EQ(e.verdict, DistortionVerdict::kUndistortedCertified);
  EXPECT_EQ(verdict_name(e.verdict), "undistorted-certified");
}

TEST(StableNorm, FreeProductOfGenerators) {
  const auto free = spec_from_shorthand("free:2");
  const auto e = stable_norm(free, free.g().parse("ab"), 8, 20);
  ASSERT_TRUE(e.upper.has_value());
  EXPECT_EQ(*e.upper, Rational(2));
  EXPECT_EQ(e.lower, Rational(2));
  EXPECT_EQ(e.verdict, DistortionVerdict::kUndistortedCertified);
}

TEST(StableNorm, HeisenbergCentreIsDistorted) {
  const auto heis = spec_from_shorthand("heis3");
  const auto e = stable_norm(heis, heis.g().parse("(0,0,1)"), 64, 40);
  EXPECT_EQ(e.element_norm, 4);
  ASSERT_TRUE(e.upper.has_value());
  EXPECT_EQ(*e.upper, Rational(1, 2));
  EXPECT_EQ(e.lower, Rational(0));
  EXPECT_EQ(e.verdict, DistortionVerdict::kDistortionSuspected);
  EXPECT_EQ(verdict_name(e.verdict), "distortion-suspected");
  EXPECT_EQ(e.subadditivity_violations, 0u);
}

TEST(StableNorm, ShortRunIsInconclusive) {
  const auto heis = spec_from_shorthand("heis3");
  const auto e = stable_norm(heis, heis.g().parse("(0,0,1)"), 8, 40);
  EXPECT_EQ(e.verdict, DistortionVerdict::kInconclusive);
}

TEST(StableNorm, SamplesBeyondLimitAreSkipped) {
  const auto z2 = spec_from_shorthand("zn:2");
  const auto e = stable_norm(z2, z2.g().parse("(1,1)"), 10, 9);
  ASSERT_EQ(e.samples.size(), 10u);
  for (const auto& s : e.samples) EXPECT_EQ(s.norm.has_value(), 2 * s.n <= 9) << s.n;
  EXPECT_EQ(*e.upper, Rational(2));
}

TEST(StableNorm, UpperTraceDecreasesAndBoundsHold) {
  for (const auto& [name, spec] : oracle::builtin_specs()) {
    const auto t = enumerate_ball(spec, 3);
    for (const Element& x : oracle::sample_elements(t, 3, 11)) {
      if (spec.g().is_identity(x)) continue;
      const auto e = stable_norm(spec, x, 12, 14);
      EXPECT_EQ(e.subadditivity_violations, 0u) << name;
      for (std::size_t i = 1; i < e.upper_trace.size(); ++i) EXPECT_LE(e.upper_trace[i], e.upper_trace[i - 1]) << name;
      if (e.upper) {
        EXPECT_LE(*e.upper, Rational(e.element_norm)) << name;
        EXPECT_LE(e.lower, *e.upper) << name << " " << spec.g().render(x);
      }
    }
  }
}

TEST(StableNorm, InverseHasSameEstimate) {
  const auto heis = spec_from_shorthand("heis3");
  const auto x = heis.g().parse("aab");
  const auto e = stable_norm(heis, x, 12, 40);
  const auto f = stable_norm(heis, heis.g().invert(x), 12, 40);
  EXPECT_EQ(e.upper, f.upper);
  EXPECT_EQ(e.lower, f.lower);
}

TEST(StableNorm, DeterministicAcrossThreads) {
  const auto heis = spec_from_shorthand("heis3");
  StableNormOptions four;
  four.threads = 4;
  const auto a = stable_norm(heis, heis.g().parse("(0,0,1)"), 24, 30);
  const auto b = stable_norm(heis, heis.g().parse("(0,0,1)"), 24, 30, four);
  ASSERT_EQ(a.samples.size(), b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) EXPECT_EQ(a.samples[i].norm, b.samples[i].norm);
}

TEST(Growth, FreeGroupClosedForm) {
  const auto g = growth_series(spec_from_shorthand("free:2"), 8, std::nullopt);
  ASSERT_EQ(g.ball_sizes.size(), 9u);
  std::size_t p = 1;
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(g.ball_sizes[n], 2 * p - 1);
    p *= 3;
  }
  EXPECT_NEAR(g.fitted_base, 3.0, 0.05);
  EXPECT_EQ(g.guaranteed_base_squared, Rational(9, 8));
  EXPECT_NEAR(g.guaranteed_base, std::sqrt(9.0 / 8.0), 1e-12);
}

TEST(Growth, AbelianClosedForm) {
  const auto g = growth_series(spec_from_shorthand("zn:2"), 10, std::nullopt);
  for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(g.ball_sizes[n], 2 * n * n + 2 * n + 1);
  EXPECT_LT(g.fitted_base, 1.5);
}

TEST(Growth, KernelCountsOnlyKernel) {
  const auto free = spec_from_shorthand("free:2");
  const KernelSpec k(FiniteTable::cyclic(2), {1, 1, 0, 0}, free);
  const auto g = growth_series(free, 6, k);
  const auto t = restrict_to_kernel(enumerate_ball(free, 6), k);
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(g.ball_sizes[n], t.ball_size(n));
  EXPECT_TRUE(g.filter.has_value());
}

TEST(VerifyGrowth, FreeGroupChainHolds) {
  const auto v = verify_negative_curvature_growth(spec_from_shorthand("free:2"), std::nullopt, 0, 7);
  EXPECT_TRUE(v.hypothesis_holds);
  ASSERT_TRUE(v.chain_holds.has_value());
  EXPECT_TRUE(*v.chain_holds);
  ASSERT_TRUE(v.tight_sphere_bound_holds.has_value());
  EXPECT_TRUE(*v.tight_sphere_bound_holds);
  EXPECT_EQ(v.base_squared, Rational(9, 8));
  EXPECT_NEAR(v.base, std::sqrt(9.0 / 8.0), 1e-12);
  EXPECT_FALSE(v.checks.empty());
  for (const auto& c : v.checks) {
    EXPECT_TRUE(c.holds);
    EXPECT_GE(c.left, c.right);
  }
  // the guaranteed base is far below the observed one
  EXPECT_GT(v.growth.fitted_base, v.base);
}

TEST(VerifyGrowth, HeisenbergHypothesisFails) {
  const auto v = verify_negative_curvature_growth(spec_from_shorthand("heis3"), std::nullopt, 2, 7);
  EXPECT_FALSE(v.hypothesis_holds);
  ASSERT_TRUE(v.first_counterexample_norm.has_value());
  EXPECT_GT(*v.first_counterexample_norm, 2);
  EXPECT_FALSE(v.chain_holds.has_value());
}

TEST(VerifyGrowth, RadiusTooSmallForAnyInstance) {
  const auto v = verify_negative_curvature_growth(spec_from_shorthand("free:2"), std::nullopt, 0, 4);
  EXPECT_TRUE(v.hypothesis_holds);
  EXPECT_FALSE(v.chain_holds.has_value());
}

}  // namespace
