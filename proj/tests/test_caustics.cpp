#include <doctest.h>

#include "bozd/caustics.hpp"
#include "support/fixtures.hpp"

using namespace bozd;

TEST_CASE("no caustics before the breaking time") {
  const auto data = testing::lorentzian();
  // Brute-force breaking time: min over characteristics of -1/(2 u0').
  double max_neg_slope = 0.0;
  for (int k = 0; k <= 4000; ++k) {
    const double y = -10.0 + 20.0 * k / 4000;
    max_neg_slope = std::max(
        max_neg_slope, -eval_u0_prime(data, Complex(y, 0.0)).real());
  }
  const double t_break = 1.0 / (2.0 * max_neg_slope);
  REQUIRE(t_break > 0.2);

  CausticScanOptions opt;
  opt.nt = 40;
  opt.nx = 80;
  const auto curves = caustic_scan(data, 1e-3, 0.2, -4.0, 4.0, opt);
  CHECK(curves.empty());
}

TEST_CASE("caustic curves appear for the two-pole sample") {
  const auto data = testing::two_pole();
  CausticScanOptions opt;
  opt.nt = 60;
  opt.nx = 140;
  const auto curves = caustic_scan(data, 0.05, 6.0, -10.0, 40.0, opt);
  REQUIRE(!curves.empty());

  size_t n_points = 0;
  for (const auto& curve : curves) n_points += curve.points.size();
  CHECK(n_points > 20);

  // Emitted points sit on the discriminant zero set (bisection-refined).
  double scale = 0.0;
  for (const auto& curve : curves)
    for (const auto& p : curve.points)
      scale = std::max(scale, std::abs(discriminant_at(data, {p.t, p.x})));
  for (const auto& curve : curves) {
    for (size_t i = 0; i < curve.points.size(); i += 5) {
      const auto& p = curve.points[i];
      const double d = std::abs(discriminant_at(data, {p.t, p.x}));
      // Compare against neighboring grid values rather than an absolute
      // threshold; the discriminant scale varies over many orders.
      const double dref = std::abs(discriminant_at(data, {p.t, p.x + 0.2})) +
                          std::abs(discriminant_at(data, {p.t, p.x - 0.2}));
      CHECK(d <= 1e-3 * (dref + 1e-30));
    }
  }
}

TEST_CASE("J map marks the pre-breaking region as single-valued") {
  const auto data = testing::lorentzian();
  const auto jm = j_map(data, 0.05, 0.2, -3.0, 3.0, 8, 40);
  for (int v : jm.J) CHECK(v == 0);
}

TEST_CASE("discriminant zeros in x bound the caustic cardinality") {
  const auto data = testing::two_pole();
  const auto zeros = discriminant_zeros_in_x(data, 3.0, -30.0, 60.0);
  CHECK(static_cast<int>(zeros.size()) <= 4 * data.pair_count());
  CHECK(!zeros.empty());
}
