#include "homgeo/diophantine.hpp"
#include "homgeo/errors.hpp"
#include "homgeo/localization.hpp"

#include <gtest/gtest.h>

using namespace homgeo;

TEST(PointLocalize, Examples) {
  EXPECT_EQ(point_localize(ParamSystem{3, 6, 0, 23}), 9);
  EXPECT_EQ(point_localize(ParamSystem{3, 10, 1, 23}), 13);
  EXPECT_EQ(point_localize(ParamSystem{4, 36, 0, 23}), 40);
  EXPECT_THROW(point_localize(ParamSystem{2, 0, 0, 23}), HypothesisError);
}

TEST(PointLocalize, MatchesPlaneCount) {
  for (long long s1 = 3; s1 <= 40; ++s1) {
    for (long long a = 0; a <= 60; ++a) {
      const Integer s2 = s2_of(s1, a);
      ASSERT_EQ((s2 - 1) % (s1 - 1), 0);
      ASSERT_EQ(point_localize(ParamSystem{s1, a, 0, 23}), (s2 - 1) / (s1 - 1));
    }
  }
}

TEST(S2Hat, Examples) {
  EXPECT_EQ(s2_hat(9, 72), 649);
  EXPECT_EQ(s2_hat(13, 156), 2029);
  for (long long s = 2; s <= 30; ++s) EXPECT_EQ(s2_hat(s, 0), 1 + s * (s - 1));
}

TEST(LocalizeUnder, ConditionsAtTheLocalization) {
  const ParamSystem c2{3, 6, 0, 23};
  const auto under2 = localize_under(c2, Condition::Cond2);
  ASSERT_TRUE(under2);
  EXPECT_EQ(under2->s1_hat, 9);
  EXPECT_EQ(under2->alpha_hat, 72);
  const auto under1 = localize_under(c2, Condition::Cond1Plus);
  ASSERT_TRUE(under1);
  EXPECT_EQ(under1->alpha_hat, 9 * 16);
  EXPECT_FALSE(localize_under(ParamSystem{3, 10, 1, 23}, Condition::Cond1Plus));
}

TEST(ObstructionValue, Examples) {
  EXPECT_EQ(obstruction_value(CaseLabel::C, 3), 649);
  EXPECT_EQ(obstruction_value(CaseLabel::C, 2), 49);
  EXPECT_EQ(obstruction_value(CaseLabel::E, 3), 1353);
  EXPECT_EQ(obstruction_value(CaseLabel::F, 3), 1465);
  EXPECT_EQ(obstruction_value(CaseLabel::BPlus, 2), 46801);
  EXPECT_THROW(obstruction_value(CaseLabel::A, 3), ExternalProvenanceError);
  EXPECT_THROW(obstruction_value(CaseLabel::D, 3), ExternalProvenanceError);
  EXPECT_THROW(obstruction_value(CaseLabel::C, 1), RangeError);
}

TEST(ObstructionValue, ByHandDerivation) {
  // Recomputed from the flat counts directly: s2, s1_hat, s2_hat, s3.
  for (long long s1 = 3; s1 <= 60; ++s1) {
    const long long s1h = s1 + s1 * (s1 - 1);
    EXPECT_EQ(obstruction_value(CaseLabel::C, s1), 1 + (s1h * (s1h - 1) + s1h) * (s1h - 1));
    const long long s1h3 = s1 + s1 * s1 + 1;
    for (auto label : {CaseLabel::E, CaseLabel::F}) {
      const long long ah = label == CaseLabel::E ? s1h3 * (s1h3 - 1) : s1h3 * s1h3 + 1;
      const Integer s2h = 1 + Integer(ah + s1h3) * (s1h3 - 1);
      const Integer s3 = 1 + (s1 - 1) * s2h;
      ASSERT_EQ(s3 % s1, 0);
      EXPECT_EQ(obstruction_value(label, s1), s3 / s1);
    }
  }
}

TEST(ObstructionValue, SymbolicDerivationMatchesCatalog) {
  for (const auto& obs : catalog()) {
    EXPECT_EQ(square_requirement(obs.label, UniPoly::x()), obs.f) << to_string(obs.label);
    for (long long s = hypothesis_floor(obs.label).convert_to<long long>(); s <= 200; ++s)
      ASSERT_EQ(obstruction_value(obs.label, s), obs.f.eval_integral(s));
  }
}

TEST(ObstructionValue, CaseEClosedForm) {
  // s3/s1 = 1 + (s1^2 - 1)(s1^2 + s1 + 1)^2
  for (long long s = 2; s <= 100; ++s) {
    const Integer q = s * s + s + 1;
    EXPECT_EQ(obstruction_value(CaseLabel::E, s), 1 + (s * s - 1) * q * q);
  }
}

TEST(EliminateCaseInstance, Examples) {
  const auto c3 = eliminate_case_instance(CaseLabel::C, 3);
  EXPECT_EQ(c3.verdict, Verdict::Eliminated);
  EXPECT_TRUE(c3.within_hypothesis);
  const auto c2 = eliminate_case_instance(CaseLabel::C, 2);
  EXPECT_EQ(c2.verdict, Verdict::SurvivesSquareTest);
  EXPECT_FALSE(c2.within_hypothesis);
  ASSERT_TRUE(c2.obstruction_value);
  EXPECT_EQ(*c2.obstruction_value, 49);
  EXPECT_EQ(eliminate_case_instance(CaseLabel::E, 3).verdict, Verdict::Eliminated);
  EXPECT_THROW(eliminate_case_instance(CaseLabel::A, 3), ExternalProvenanceError);
}

TEST(EliminateCaseInstance, EveryInRangeInstanceEliminated) {
  for (auto label : {CaseLabel::BPlus, CaseLabel::BMinus, CaseLabel::C, CaseLabel::E, CaseLabel::F}) {
    for (long long s = hypothesis_floor(label).convert_to<long long>(); s <= 2000; ++s)
      ASSERT_EQ(eliminate_case_instance(label, s).verdict, Verdict::Eliminated) << to_string(label) << " " << s;
  }
}

TEST(KnownSurvivors, MentionsCaseCAtTwo) {
  const auto ks = known_survivors();
  EXPECT_FALSE(ks.empty());
  try {
    obstruction_value(CaseLabel::E, 1);
    FAIL();
  } catch (const RangeError& e) {
    EXPECT_EQ(e.known_survivors(), ks);
  }
}
