#include "homgeo/diophantine.hpp"
#include "homgeo/errors.hpp"

#include <gtest/gtest.h>

#include <gmp.h>

using namespace homgeo;

namespace {

// Oracle: Horner evaluation plus GMP's own perfect-square predicate.
bool oracle_square(const Integer& v) { return v >= 0 && mpz_perfect_square_p(v.backend().data()) != 0; }

Integer eval_oracle(const SquareObstruction& obs, long long t) {
  const auto coeffs = obs.f.integer_coefficients();
  Integer acc = 0;
  for (auto it = coeffs->rbegin(); it != coeffs->rend(); ++it) acc = acc * t + *it;
  return acc;
}

}  // namespace

TEST(Catalog, OrderAndExamples) {
  const auto& cat = catalog();
  ASSERT_EQ(cat.size(), 5u);
  EXPECT_EQ(cat[0].label, CaseLabel::C);
  EXPECT_EQ(cat[0].f.eval_integral(3), 649);
  EXPECT_EQ(cat[0].g, UniPoly({0, Rational(-1, 2), 0, 1}));
  EXPECT_EQ(obstruction_for(CaseLabel::BMinus).f.eval_integral(2), obstruction_for(CaseLabel::BPlus).f.eval_integral(-2));
  EXPECT_EQ(obstruction_for(CaseLabel::C).t_min, 3);
  EXPECT_EQ(obstruction_for(CaseLabel::E).t_min, 2);
  EXPECT_THROW(obstruction_for(CaseLabel::A), ExternalProvenanceError);
}

TEST(Identity, AllCasesAndPerturbation) {
  for (const auto& obs : catalog()) EXPECT_TRUE(verify_identity(obs)) << to_string(obs.label);
  SquareObstruction bad = obstruction_for(CaseLabel::C);
  bad.h += UniPoly{1};
  EXPECT_FALSE(verify_identity(bad));
}

TEST(FactorEquation, DisplayedForms) {
  auto [a_c, h_c] = factor_equation(obstruction_for(CaseLabel::C));
  EXPECT_EQ(a_c, UniPoly({0, -1, 0, 2}));
  EXPECT_EQ(h_c, UniPoly({-4, 0, 1}));
  auto [a_e, h_e] = factor_equation(obstruction_for(CaseLabel::E));
  EXPECT_EQ(a_e, UniPoly({-1, 1, 2, 2}));
  EXPECT_EQ(h_e, UniPoly({1, 6, 5}));
  auto [a_f, h_f] = factor_equation(obstruction_for(CaseLabel::F));
  EXPECT_EQ(a_f, UniPoly({-1, 2, 2, 2}));
  EXPECT_EQ(h_f, UniPoly({9, 8, 4}));
}

TEST(FactorEquation, RejectsBrokenIdentity) {
  SquareObstruction bad = obstruction_for(CaseLabel::E);
  bad.h += UniPoly{1};
  EXPECT_THROW(factor_equation(bad), InvariantViolation);
}

TEST(Certificate, EveryCaseProved) {
  for (const auto& obs : catalog()) {
    const auto cert = certify_no_square(obs);
    EXPECT_EQ(cert.status, CertificateStatus::ProvedImpossible) << to_string(obs.label) << ": " << cert.explanation;
  }
}

TEST(Certificate, OracleShiftedCoefficients) {
  const auto c = certify_no_square(obstruction_for(CaseLabel::C));
  EXPECT_EQ(c.upper_gap.shifted, UniPoly({96, 100, 35, 4}));
  const auto bm = certify_no_square(obstruction_for(CaseLabel::BMinus));
  EXPECT_EQ(bm.upper_gap.shifted, UniPoly({52, 184, 295, 258, 131, 36, 4}));
  EXPECT_EQ(bm.nonzero.shifted, UniPoly({21, 58, 55, 26, 5}));
}

TEST(Certificate, FailsBelowTheRange) {
  // f_c(2) = 49, so no certificate can start at 2.
  const auto [a, h] = factor_equation(obstruction_for(CaseLabel::C));
  EXPECT_EQ(certify_gap(a, h, 2).status, CertificateStatus::Inconclusive);
  EXPECT_EQ(certify_gap(a, h, 3).status, CertificateStatus::ProvedImpossible);
}

TEST(Certificate, SoundAgainstBruteForce) {
  for (const auto& obs : catalog()) {
    const auto [a, h] = factor_equation(obs);
    for (long long t0 = 0; t0 <= 4; ++t0) {
      if (certify_gap(a, h, t0).status != CertificateStatus::ProvedImpossible) continue;
      for (long long t = t0; t <= 3000; ++t) ASSERT_FALSE(oracle_square(eval_oracle(obs, t))) << to_string(obs.label) << t;
    }
  }
}

TEST(Sieve, MatchesBruteForceOracle) {
  for (const auto& obs : catalog()) {
    std::vector<Integer> expected;
    for (long long t = 0; t <= 20000; ++t) {
      if (oracle_square(eval_oracle(obs, t))) expected.emplace_back(t);
    }
    EXPECT_EQ(sieve(obs, 20000), expected) << to_string(obs.label);
    EXPECT_EQ(expected, obs.known_square_args);
  }
}

TEST(Sieve, KnownSetsAndThreadIndependence) {
  EXPECT_EQ(sieve(obstruction_for(CaseLabel::C), 100000, 1), (std::vector<Integer>{0, 1, 2}));
  EXPECT_EQ(sieve(obstruction_for(CaseLabel::E), 100000, 3), (std::vector<Integer>{0, 1}));
  EXPECT_EQ(sieve(obstruction_for(CaseLabel::F), 100000, 4), (std::vector<Integer>{1}));
  EXPECT_EQ(sieve_range(obstruction_for(CaseLabel::C), 2, 2), (std::vector<Integer>{2}));
}
