#include <gtest/gtest.h>

#include "medcurv/error.hpp"
#include "medcurv/genset.hpp"
#include "oracles.hpp"

using namespace medcurv;

namespace {

TEST(Closure, AbelianIsUnchanged) {
  const auto z2 = spec_from_shorthand("zn:2");
  const auto c = conjugation_closure(z2, 100);
  EXPECT_TRUE(c.terminated);
  EXPECT_EQ(c.closed.size(), 4u);
  for (auto n : c.orbit_sizes) EXPECT_EQ(n, 1u);
}

TEST(Closure, SymmetricTimesIntegers) {
  const auto spec = spec_from_shorthand("s3xz");
  const auto c = conjugation_closure(spec, 100);
  EXPECT_TRUE(c.terminated);
  EXPECT_EQ(c.closed.size(), 7u);
  const auto closed = c.closed_spec(spec);
  EXPECT_EQ(closed.generators.size(), 7u);
  EXPECT_TRUE(std::equal(c.original.begin(), c.original.end(), c.closed.begin()));
  const auto t = enumerate_ball(closed, 6);
  EXPECT_EQ(conjugation_invariance_violations(t), 0u);
}

TEST(Closure, ClosedSetIsConjugationInvariant) {
  for (const char* name : {"s3xz", "zn:3"}) {
    const auto spec = spec_from_shorthand(name);
    const auto c = conjugation_closure(spec, 1000);
    ASSERT_TRUE(c.terminated) << name;
    const auto closed = c.closed_spec(spec);
    for (const Element& s : closed.generators)
      for (const Element& t : closed.generators) EXPECT_TRUE(closed.generators.contains(closed.g().conjugate(t, s))) << name;
  }
}

TEST(Closure, FreeGroupRunsOutOfBudget) {
  const auto free = spec_from_shorthand("free:2");
  const auto c = conjugation_closure(free, 50);
  EXPECT_FALSE(c.terminated);
  EXPECT_THROW(c.closed_spec(free), PreconditionError);
  EXPECT_THROW(conjugation_closure(free, 2), PreconditionError);
}

TEST(DinfGenset, CyclicOfOrderTwo) {
  const auto spec = spec_from_shorthand("z2xdinf");
  const auto s = dinf_extension_genset(spec);
  EXPECT_EQ(s.size(), 5u);
}

TEST(DinfGenset, TrivialFiniteGivesDihedralGenerators) {
  nlohmann::json params{{"finite", FiniteTable::cyclic(1).to_json()}};
  const auto spec = spec_from_json({{"family", "finite_by_dihedral"}, {"params", params}});
  const auto s = dinf_extension_genset(spec);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_TRUE(s.contains(spec.g().parse("a")));
  EXPECT_TRUE(s.contains(spec.g().parse("b")));
}

TEST(DinfGenset, RejectsOtherFamilies) {
  EXPECT_THROW(dinf_extension_genset(spec_from_shorthand("heis3")), PreconditionError);
}

TEST(DinfGenset, NormIsTheDihedralNorm) {
  for (const auto& spec : {spec_from_shorthand("z2xdinf"), oracle::z3_semidirect_dinf(), oracle::z4_twisted_dinf()}) {
    const auto s = dinf_extension_genset(spec);
    const auto flat = spec.with_generators({s.begin(), s.end()});
    const auto t = enumerate_ball(flat, 9);
    EXPECT_EQ(dinf_norm_mismatches(t), 0u) << spec.describe();
  }
}

TEST(VerifyFlat, Examples) {
  EXPECT_TRUE(verify_flat(spec_from_shorthand("zn:2"), 6, 3));
  EXPECT_TRUE(verify_flat(spec_from_shorthand("z2xdinf"), 10, 3));
  EXPECT_FALSE(verify_flat(spec_from_shorthand("free:2"), 8, 3));
  EXPECT_THROW(verify_flat(spec_from_shorthand("zn:2"), 5, 3), PreconditionError);
}

TEST(VerifyFlat, EveryExtensionIsFlat) {
  for (const auto& spec : {oracle::z3_semidirect_dinf(), oracle::z4_twisted_dinf()}) {
    const auto s = dinf_extension_genset(spec);
    const auto flat = spec.with_generators({s.begin(), s.end()});
    EXPECT_TRUE(verify_flat(flat, 9, 3)) << spec.describe();
  }
}

TEST(VerifyFlat, ClosedGeneratingSetIsFlat) {
  const auto spec = spec_from_shorthand("s3xz");
  const auto closed = conjugation_closure(spec, 100).closed_spec(spec);
  EXPECT_TRUE(verify_flat(closed, 8, 0));
}

}  // namespace
