#include "homgeo/errors.hpp"
#include "homgeo/param_model.hpp"

#include <gtest/gtest.h>

using namespace homgeo;

namespace {

ParamSystem ps(long long s1, long long alpha, int alpha_prime = 0, long long dim = 23) {
  return ParamSystem{s1, alpha, alpha_prime, dim};
}

}  // namespace

TEST(Validate, RejectsOutOfDomain) {
  EXPECT_NO_THROW(validate(ps(3, 0)));
  EXPECT_THROW(validate(ps(1, 0)), DomainError);
  EXPECT_THROW(validate(ps(3, -1)), DomainError);
  EXPECT_THROW(validate(ps(3, 1, 2)), ModelScopeError);
}

TEST(FlatProfileType, Invariants) {
  EXPECT_NO_THROW(FlatProfile({1, 3, 7, 15}));
  EXPECT_THROW(FlatProfile({2, 3}), DomainError);
  EXPECT_THROW(FlatProfile({1, 3, 3}), DomainError);
  const FlatProfile p({1, 3, 7, 15});
  EXPECT_EQ(truncate(p, 2), FlatProfile({1, 3, 7}));
  EXPECT_EQ(p.top_dimension(), 3u);
}

TEST(S2, Examples) {
  EXPECT_EQ(s2_of(3, 6), 19);
  EXPECT_EQ(s2_of(4, 0), 13);
  EXPECT_EQ(s2_of(3, 1), 9);
}

TEST(S2, MatchesClassicalPlanes) {
  for (long long q : {2, 3, 5, 7, 11}) {
    EXPECT_EQ(s2_of(q + 1, 0), q * q + q + 1);
    EXPECT_EQ(s2_of(q, 1), q * q);
  }
}

TEST(GrowthBound, Examples) {
  EXPECT_EQ(growth_lower_bound(3, 7, 3), Rational(8));
  EXPECT_EQ(growth_lower_bound(3, 7, 4), Rational(16));
  EXPECT_EQ(growth_lower_bound(3, 9, 3), Rational(18));
  EXPECT_THROW(growth_lower_bound(3, 7, 2), DomainError);
}

TEST(GrowthBound, BelowClassicalFlatSizes) {
  for (long long q : {2, 3, 4, 5, 7}) {
    Integer proj = q * q + q + 1;
    Integer aff = q * q;
    for (long long r = 3; r <= 8; ++r) {
      proj = proj * q + 1;
      aff *= q;
      EXPECT_LE(growth_lower_bound(q + 1, q * q + q + 1, r), Rational(proj));
      EXPECT_LE(growth_lower_bound(q, q * q, r), Rational(aff));
    }
  }
}

TEST(GrowthStep, Examples) {
  EXPECT_TRUE(growth_step_check(FlatProfile({1, 3, 7, 15}), 3));
  EXPECT_TRUE(growth_step_check(FlatProfile({1, 3, 9, 27}), 3));
  EXPECT_FALSE(growth_step_check(FlatProfile({1, 3, 7, 10}), 3));
}

TEST(Integrality, Examples) {
  EXPECT_TRUE(integrality_constraints(ps(3, 6)));
  EXPECT_FALSE(integrality_constraints(ps(3, 2)));
  EXPECT_TRUE(integrality_constraints(ps(3, 4, 1)));
}

TEST(AlphaFloor, Examples) {
  EXPECT_TRUE(alpha_floor_check(ps(4, 2)));
  EXPECT_FALSE(alpha_floor_check(ps(9, 2)));
  EXPECT_TRUE(alpha_floor_check(ps(9, 0)));
}

TEST(Classify, Examples) {
  const auto c1 = classify_condition(ps(4, 4));
  EXPECT_TRUE(c1.contains(Condition::Cond1Minus));
  EXPECT_EQ(c1.members().size(), 1u);
  const auto c2 = classify_condition(ps(3, 6));
  EXPECT_TRUE(c2.contains(Condition::Cond2));
  EXPECT_EQ(c2.members().size(), 1u);
  const auto c3 = classify_condition(ps(3, 10, 1));
  EXPECT_TRUE(c3.contains(Condition::Cond3));
  EXPECT_EQ(c3.members().size(), 1u);
  EXPECT_TRUE(classify_condition(ps(4, 0)).contains(Condition::ClassicalCompatible));
  EXPECT_TRUE(classify_condition(ps(3, 1)).contains(Condition::ClassicalCompatible));
  EXPECT_TRUE(classify_condition(ps(5, 7)).contains(Condition::NoneApplies));
}

TEST(Classify, ConditionsFromDefinitions) {
  for (long long t = 2; t <= 30; ++t) {
    const long long s1 = t * t;
    EXPECT_TRUE(classify_condition(ps(s1, s1 * (t + 1) * (t + 1))).contains(Condition::Cond1Plus));
    EXPECT_TRUE(classify_condition(ps(s1, s1 * (t - 1) * (t - 1))).contains(Condition::Cond1Minus));
  }
  for (long long s1 = 3; s1 <= 200; ++s1) {
    EXPECT_TRUE(classify_condition(ps(s1, s1 * (s1 - 1))).contains(Condition::Cond2));
    EXPECT_TRUE(classify_condition(ps(s1, s1 * s1 + 1, 1)).contains(Condition::Cond3));
    EXPECT_FALSE(classify_condition(ps(s1, s1 * s1 + 1, 0)).contains(Condition::Cond3));
  }
}

TEST(ParamsForCondition, RoundTrip) {
  EXPECT_FALSE(params_for_condition(Condition::Cond1Plus, 5, 23).has_value());
  for (long long s1 = 3; s1 <= 50; ++s1) {
    for (auto c : {Condition::Cond1Plus, Condition::Cond1Minus, Condition::Cond2, Condition::Cond3}) {
      const auto p = params_for_condition(c, s1, 23);
      if (!p) continue;
      EXPECT_TRUE(classify_condition(*p).contains(c)) << s1;
    }
  }
}
