#include "homgeo/errors.hpp"
#include "homgeo/geometry.hpp"

#include <gtest/gtest.h>

using namespace homgeo;

TEST(PrimeField, Axioms) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u}) {
    for (std::uint32_t a = 0; a < p; ++a) {
      const PrimeFieldElement x(a, p);
      EXPECT_EQ(x + (-x), PrimeFieldElement(0, p));
      if (a != 0) EXPECT_EQ(x * x.inverse(), PrimeFieldElement(1, p));
      for (std::uint32_t b = 0; b < p; ++b) {
        const PrimeFieldElement y(b, p);
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ(x - y + y, x);
      }
    }
  }
  EXPECT_THROW(PrimeFieldElement(0, 5).inverse(), DomainError);
  EXPECT_THROW(PrimeFieldElement(1, 4), UnsupportedFieldError);
}

TEST(Build, PointCounts) {
  EXPECT_EQ(build_projective(3, 2).point_count(), 15u);
  EXPECT_EQ(build_projective(2, 3).point_count(), 13u);
  EXPECT_EQ(build_projective(2, 2).point_count(), 7u);
  EXPECT_EQ(build_affine(3, 3).point_count(), 27u);
  EXPECT_EQ(build_affine(2, 2).point_count(), 4u);
  EXPECT_EQ(build_affine(2, 5).point_count(), 25u);
  EXPECT_THROW(build_projective(2, 4), UnsupportedFieldError);
  EXPECT_THROW(build_affine(2, 9), UnsupportedFieldError);
}

TEST(Flats, Profiles) {
  EXPECT_EQ(flat_profile(build_projective(3, 2)), FlatProfile({1, 3, 7, 15}));
  EXPECT_EQ(flat_profile(build_affine(3, 3)), FlatProfile({1, 3, 9, 27}));
  EXPECT_EQ(flat_profile(build_projective(2, 3)), FlatProfile({1, 4, 13}));
  EXPECT_EQ(flats_of_dimension(build_projective(2, 2), 1).size(), 7u);
  EXPECT_EQ(flats_of_dimension(build_affine(2, 3), 1).size(), 12u);
}

TEST(Flats, ClassicalFormulas) {
  for (auto [n, p] : {std::pair{2, 5u}, {3, 3u}, {4, 2u}, {2, 7u}}) {
    const FlatProfile pg = flat_profile(build_projective(n, p));
    const FlatProfile ag = flat_profile(build_affine(n, p));
    for (int i = 0; i <= n; ++i) {
      EXPECT_EQ(pg[i], (ipow(p, i + 1) - 1) / (p - 1));
      EXPECT_EQ(ag[i], ipow(p, i));
    }
  }
}

TEST(Closure, Basics) {
  const Geometry g = build_projective(2, 2);
  const PointId two[] = {0, 1};
  EXPECT_EQ(g.closure(two).size(), 3u);
  EXPECT_EQ(g.flat_dimension(two), 1);
  EXPECT_EQ(g.flat_dimension(std::span<const PointId>{}), -1);
  EXPECT_TRUE(g.closure(std::span<const PointId>{}).empty());
}

TEST(Closure, Axioms) {
  for (const Geometry& g : {build_projective(2, 2), build_projective(3, 2), build_affine(3, 3), build_projective(2, 3)}) {
    const AxiomReport r = check_closure_axioms(g);
    EXPECT_TRUE(r.ok()) << g.name() << ": " << r.first_failure;
    EXPECT_GT(r.subsets_checked, 0);
    EXPECT_GT(r.exchange_checks, 0);
  }
}

TEST(Localization, PointQuotients) {
  EXPECT_EQ(localize_at_point(build_projective(3, 2), 0), FlatProfile({1, 3, 7}));
  EXPECT_EQ(localize_at_point(build_affine(3, 3), 5), FlatProfile({1, 4, 13}));
  EXPECT_EQ(localize_at_point(build_projective(2, 3), 12), FlatProfile({1, 4}));
}

TEST(Localization, SameAtEveryPoint) {
  const Geometry g = build_affine(3, 3);
  const FlatProfile first = localize_at_point(g, 0);
  for (PointId x = 1; x < g.point_count(); ++x) EXPECT_EQ(localize_at_point(g, x), first);
}

TEST(Alpha, Values) {
  for (auto [n, p] : {std::pair{2, 2u}, {3, 2u}, {2, 3u}, {3, 3u}, {2, 5u}}) {
    EXPECT_EQ(alpha_of(build_projective(n, p)), 0);
    EXPECT_EQ(alpha_of(build_affine(n, p)), 1);
  }
  EXPECT_EQ(alpha_of(FlatProfile({1, 3, 19})), 6);
  EXPECT_THROW(alpha_of(FlatProfile({1, 3, 8})), ModelMismatchError);
}
