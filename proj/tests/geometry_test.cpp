#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <boost/math/special_functions/beta.hpp>
#include <gtest/gtest.h>

#include "pclique/errors.hpp"
#include "pclique/geometry.hpp"
#include "pclique/oracle.hpp"

namespace pclique {
namespace {

using std::numbers::pi;

// Two caps of height r - x/2 make up the lens; the regularized incomplete
// beta function gives each cap as a fraction of the ball.
double lens_fraction_via_beta(double u, int d) {
  const double z = 1.0 - (u / 2.0) * (u / 2.0);
  return boost::math::ibeta((d + 1) / 2.0, 0.5, z);
}

bool in_unit_lens(std::span<const double> p) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double c = i == 0 ? p[i] - 1.0 : p[i];
    s += c * c;
  }
  return s <= 1.0;
}

TEST(TorusDistance, WrapsAroundInOneDimension) {
  EXPECT_NEAR(torus_distance(Point({0.9}), Point({0.1})), 0.2, 1e-15);
}

TEST(TorusDistance, ZeroForIdenticalPoints) {
  const Point p({0.3, 0.7, 0.11});
  EXPECT_EQ(torus_distance(p, p), 0.0);
}

TEST(TorusDistance, MaximalWrapInTwoDimensions) {
  EXPECT_NEAR(torus_distance(Point({0.0, 0.0}), Point({0.5, 0.5})), std::sqrt(0.5), 1e-15);
}

TEST(TorusDistance, DimensionMismatchIsUsageError) {
  EXPECT_THROW(torus_distance(Point({0.1}), Point({0.1, 0.2})), UsageError);
}

TEST(TorusDistance, MetricAxiomsOnRandomTriples) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int d = 1; d <= 4; ++d) {
    for (int trial = 0; trial < 2000; ++trial) {
      std::vector<double> a(d), b(d), c(d), shift(d);
      for (int i = 0; i < d; ++i) {
        a[i] = u(rng);
        b[i] = u(rng);
        c[i] = u(rng);
        shift[i] = u(rng);
      }
      const double ab = torus_distance(a, b);
      const double bc = torus_distance(b, c);
      const double ac = torus_distance(a, c);
      ASSERT_EQ(ab, torus_distance(b, a));
      ASSERT_GT(ab, 0.0);
      ASSERT_LE(ab, std::sqrt(d) / 2.0 + 1e-15);
      ASSERT_LE(ac, ab + bc + 1e-12);

      std::vector<double> as(d), bs(d);
      for (int i = 0; i < d; ++i) {
        as[i] = std::fmod(a[i] + shift[i], 1.0);
        bs[i] = std::fmod(b[i] + shift[i], 1.0);
      }
      ASSERT_NEAR(torus_distance(as, bs), ab, 1e-12);
    }
  }
}

TEST(Point, RejectsCoordinatesOutsideUnitInterval) {
  EXPECT_THROW(Point({1.0}), UsageError);
  EXPECT_THROW(Point({-0.1, 0.5}), UsageError);
  EXPECT_EQ(Point::wrapped({1.25, -0.25}), Point({0.25, 0.75}));
}

TEST(UnitBallVolume, LowDimensions) {
  EXPECT_DOUBLE_EQ(unit_ball_volume(1), 2.0);
  EXPECT_DOUBLE_EQ(unit_ball_volume(2), pi);
  EXPECT_DOUBLE_EQ(unit_ball_volume(3), 4.0 * pi / 3.0);
  EXPECT_NEAR(unit_ball_volume(4), pi * pi / 2.0, 1e-14);
  EXPECT_THROW(unit_ball_volume(0), UsageError);
}

TEST(LensFraction, CoincidentBallsGiveOne) {
  for (int d = 1; d <= 6; ++d) {
    EXPECT_NEAR(lens_volume_fraction({0.0, 0.1, d}), 1.0, 1e-12) << "d=" << d;
  }
}

TEST(LensFraction, KnownValuesAtFullSeparation) {
  EXPECT_NEAR(lens_volume_fraction({0.1, 0.1, 1}), 0.5, 1e-15);
  EXPECT_NEAR(lens_volume_fraction({0.1, 0.1, 2}), 2.0 / 3.0 - std::sqrt(3.0) / (2.0 * pi), 1e-12);
  EXPECT_NEAR(lens_volume_fraction({0.1, 0.1, 3}), 5.0 / 16.0, 1e-12);
  EXPECT_NEAR(min_lens_fraction(2), 0.39100, 1e-5);
}

TEST(LensFraction, MatchesIncompleteBetaInEveryDimension) {
  for (int d = 1; d <= 8; ++d) {
    for (int i = 0; i <= 20; ++i) {
      const double u = i / 20.0;
      const double got = lens_volume_fraction({u * 0.02, 0.02, d});
      ASSERT_NEAR(got, lens_fraction_via_beta(u, d), 1e-10) << "d=" << d << " u=" << u;
    }
  }
}

TEST(LensFraction, QuadratureAgreesWithClosedForms) {
  for (int d = 1; d <= 3; ++d) {
    for (int i = 0; i <= 16; ++i) {
      const double u = i / 8.0;
      ASSERT_NEAR(detail::lens_fraction_quadrature(u, d), lens_fraction_via_beta(u, d), 1e-10)
          << "d=" << d << " u=" << u;
    }
  }
}

TEST(LensFraction, StrictlyDecreasingInSeparation) {
  for (int d = 1; d <= 5; ++d) {
    double prev = 2.0;
    for (int i = 0; i <= 50; ++i) {
      const double value = lens_volume_fraction({0.05 * i / 50.0, 0.05, d});
      ASSERT_LT(value, prev) << "d=" << d << " i=" << i;
      prev = value;
    }
  }
}

TEST(LensFraction, ScaleFree) {
  for (int d = 1; d <= 4; ++d) {
    EXPECT_NEAR(lens_volume_fraction({0.01, 0.02, d}), lens_volume_fraction({0.1, 0.2, d}), 1e-12);
  }
}

TEST(LensFraction, Errors) {
  EXPECT_THROW(lens_volume_fraction({0.2, 0.1, 2}), UsageError);
  EXPECT_THROW(lens_volume_fraction({0.1, 0.25, 2}), ModelDomainError);
  EXPECT_THROW(lens_volume_fraction({0.0, 0.0, 2}), UsageError);
  EXPECT_THROW(lens_volume_fraction({0.0, 0.1, 0}), UsageError);
}

TEST(LensFraction, MonteCarloWithinThreeStandardErrors) {
  for (int d = 1; d <= 3; ++d) {
    const auto est = oracle::monte_carlo_volume(in_unit_lens, d, 1'000'000, 100 + d);
    const double exact = lens_volume_fraction({0.1, 0.1, d});
    EXPECT_LE(std::abs(est.fraction - exact), 3.0 * est.std_error)
        << "d=" << d << " mc=" << est.fraction << " exact=" << exact;
  }
}

TEST(BlockingRegion, PositiveAndInsideTheLens) {
  for (int d = 1; d <= 8; ++d) {
    const double c1 = blocking_region_fraction(d);
    EXPECT_GT(c1, 0.0) << "d=" << d;
    EXPECT_LT(c1, min_lens_fraction(d)) << "d=" << d;
  }
  EXPECT_THROW(blocking_region_fraction(0), UsageError);
}

TEST(BlockingRegion, OneDimensionalConvention) {
  EXPECT_DOUBLE_EQ(blocking_region_fraction(1), 0.25);
}

TEST(BlockingRegion, TwoDimensionalValue) {
  EXPECT_NEAR(blocking_region_fraction(2), 0.0501572, 1e-6);
}

TEST(BlockingRegion, MonteCarloInTwoAndThreeDimensions) {
  // Lens points whose offset in the second coordinate exceeds half the radius.
  const auto region = [](std::span<const double> p) { return in_unit_lens(p) && p[1] > 0.5; };
  const auto est2 = oracle::monte_carlo_volume(region, 2, 10'000'000, 11);
  EXPECT_LE(std::abs(est2.fraction - blocking_region_fraction(2)), 3.0 * est2.std_error)
      << "mc=" << est2.fraction;
  const auto est3 = oracle::monte_carlo_volume(region, 3, 2'000'000, 12);
  EXPECT_LE(std::abs(est3.fraction - blocking_region_fraction(3)), 3.0 * est3.std_error)
      << "mc=" << est3.fraction;
}

TEST(BlockingRegion, RegionsAreMutuallyOutOfRange) {
  // Points of R1 (offset > 1/2) and of the mirrored R2 (offset < -1/2) are
  // more than one radius apart.
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 2.0);
  std::vector<std::vector<double>> r1, r2;
  while (r1.size() < 300 || r2.size() < 300) {
    std::vector<double> p{u(rng), u(rng), u(rng)};
    double s = 0.0;
    for (double c : p) s += c * c;
    if (s > 1.0 || !in_unit_lens(p)) continue;
    if (p[1] > 0.5 && r1.size() < 300) r1.push_back(p);
    if (p[1] < -0.5 && r2.size() < 300) r2.push_back(p);
  }
  for (const auto& p : r1) {
    for (const auto& q : r2) {
      double s = 0.0;
      for (int i = 0; i < 3; ++i) s += (p[i] - q[i]) * (p[i] - q[i]);
      ASSERT_GT(std::sqrt(s), 1.0);
    }
  }
}

}  // namespace
}  // namespace pclique
