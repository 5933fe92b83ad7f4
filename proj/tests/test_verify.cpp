#include <doctest.h>

#include "bozd/verify.hpp"
#include "support/fixtures.hpp"

using namespace bozd;

TEST_CASE("loglog slope on synthetic power data") {
  SUBCASE("exact first order") {
    std::vector<double> eps = {0.1, 0.05, 0.025, 0.0125};
    std::vector<double> err;
    for (double e : eps) err.push_back(3.7 * e);
    CHECK(loglog_slope(eps, err) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("exact second order") {
    std::vector<double> eps = {0.1, 0.05, 0.025};
    std::vector<double> err;
    for (double e : eps) err.push_back(0.2 * e * e);
    CHECK(loglog_slope(eps, err) == doctest::Approx(2.0).epsilon(1e-12));
  }
  SUBCASE("uses only the three smallest epsilons") {
    // A wild outlier at the largest epsilon must not affect the fit.
    std::vector<double> eps = {0.4, 0.1, 0.05, 0.025};
    std::vector<double> err = {999.0, 0.1, 0.05, 0.025};
    CHECK(loglog_slope(eps, err) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("insufficient data is rejected") {
    CHECK_THROWS_AS(loglog_slope({0.1, 0.05}, {1.0, 0.5}), InsufficientData);
  }
}

TEST_CASE("supnorm against the soliton reference on a small grid") {
  const auto data = testing::lorentzian();
  const double err =
      supnorm_error(data, 1.0, 0.2, 0.8, 60, 1.0 / 32, RefSolver::kMatsuno);
  CHECK(err > 0.0);
  CHECK(err < 1.0);
}

TEST_CASE("sweep report is deterministic") {
  const auto data = testing::lorentzian();
  const std::vector<double> eps = {1.0 / 16, 1.0 / 32, 1.0 / 64};
  const std::vector<int> m = {40, 40, 40};
  const auto r1 =
      run_sweep(data, 1.0, 0.2, 0.8, eps, m, RefSolver::kMatsuno);
  const auto r2 =
      run_sweep(data, 1.0, 0.2, 0.8, eps, m, RefSolver::kMatsuno);
  for (size_t i = 0; i < eps.size(); ++i)
    CHECK(r1.max_errors[i] == r2.max_errors[i]);
  CHECK(r1.fitted_slope == r2.fitted_slope);
}

TEST_CASE("l2 profile check: exact identity before breaking") {
  const auto data = testing::lorentzian();
  const auto report =
      l2_profile_check(data, 0.2, 1.0 / 32, -18.0, 22.0, 1e-8);
  CHECK(report.rel_gap < 5e-4);
}

TEST_CASE("l2 profile check refuses multiphase windows") {
  // Two-pole data at t=4.5 has a J=2 zone.
  const auto data = testing::two_pole();
  bool has_j2 = false;
  for (double x = -5.0; x < 15.0 && !has_j2; x += 0.05)
    has_j2 = count_real_roots(data, {4.5, x}) == 5;
  REQUIRE(has_j2);
  CHECK_THROWS_AS(l2_profile_check(data, 4.5, 1.0 / 32, -8.0, 18.0),
                  JTooLarge);
}

TEST_CASE("constant-J intervals partition a scan line") {
  const auto data = testing::lorentzian();
  const auto runs = constant_j_intervals(data, 1.0, -4.0, 6.0, 0.1);
  REQUIRE(!runs.empty());
  bool has_j0 = false, has_j1 = false;
  for (const auto& run : runs) {
    if (run.J == 0) has_j0 = true;
    if (run.J == 1) has_j1 = true;
    CHECK(run.lo < run.hi);
    // Interior points indeed carry the advertised J.
    const double mid = 0.5 * (run.lo + run.hi);
    CHECK(count_real_roots(data, {1.0, mid}) == 2 * run.J + 1);
  }
  CHECK(has_j0);
  CHECK(has_j1);
}

TEST_CASE("caustic cardinality suite passes") {
  const auto results = run_caustic_cardinality_suite(7u);
  REQUIRE(results.size() == 1);
  CHECK(results[0].passed);
}

TEST_CASE("identity suite on a reduced draw") {
  const auto results = run_identity_suite(12345u, 20);
  for (const auto& r : results) {
    INFO(r.name, ": ", r.detail);
    if (r.name.find("J=1") == std::string::npos &&
        r.name.find("period average") == std::string::npos)
      CHECK(r.passed);
  }
}
