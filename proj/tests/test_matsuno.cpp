#include <doctest.h>

#include "bozd/matsuno.hpp"
#include "bozd/quadrature.hpp"
#include "support/fixtures.hpp"

using namespace bozd;

TEST_CASE("laguerre zeros: closed forms and bisection oracle") {
  const auto z1 = laguerre_zeros(1);
  REQUIRE(z1.size() == 1);
  CHECK(z1[0] == doctest::Approx(1.0).epsilon(1e-14));

  const auto z2 = laguerre_zeros(2);
  REQUIRE(z2.size() == 2);
  CHECK(z2[0] == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-13));
  CHECK(z2[1] == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-13));

  // N=6 against brute-force sign-change bisection.
  const auto z6 = laguerre_zeros(6);
  auto L6 = [](double x) {
    double v, d;
    laguerre_eval(6, x, &v, &d);
    return v;
  };
  std::vector<double> brute;
  double prev = L6(1e-8);
  double prev_x = 1e-8;
  for (int k = 1; k <= 400000; ++k) {
    const double x = 24.0 * k / 400000.0;
    const double v = L6(x);
    if ((v < 0.0) != (prev < 0.0)) {
      double lo = prev_x, hi = x;
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((L6(mid) < 0.0) == (L6(lo) < 0.0))
          lo = mid;
        else
          hi = mid;
      }
      brute.push_back(0.5 * (lo + hi));
    }
    prev = v;
    prev_x = x;
  }
  REQUIRE(brute.size() == 6);
  for (int j = 0; j < 6; ++j)
    CHECK(std::abs(z6[j] - brute[j]) < 1e-12 * (1.0 + brute[j]));
}

TEST_CASE("one-soliton closed form") {
  // N=1: lambda = -eps/2, and the matrix is 1x1, giving
  // u = 2 eps / (1 + (x - eps t)^2).
  const auto spec = MatsunoSpec::make(1);
  for (double t : {0.0, 1.3}) {
    for (double x : {-2.0, 0.0, 0.7, 5.0}) {
      const double expected =
          2.0 * spec.epsilon /
          (1.0 + (x - spec.epsilon * t) * (x - spec.epsilon * t));
      CHECK(u_matsuno(spec, t, x) == doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("mass is conserved and close to 2 pi") {
  const auto spec = MatsunoSpec::make(4);
  const double mass = integrate_adaptive_real(
      [&](double x) { return u_matsuno(spec, 0.0, x); }, -50.0, 50.0, 1e-9);
  // Windowed mass of u0 is 4 arctan(50); the [-50,50] window itself cuts
  // about 1.3% of 2 pi.
  CHECK(std::abs(mass - 4.0 * std::atan(50.0)) < 1e-6);
  CHECK(std::abs(mass - 2.0 * M_PI) < 0.015 * 2.0 * M_PI);
}

TEST_CASE("initial profile reproduces u0") {
  const auto data = testing::lorentzian();
  for (int N : {2, 5, 9}) {
    const auto spec = MatsunoSpec::make(N);
    for (double x : {-3.0, -0.4, 0.0, 1.2, 6.0})
      CHECK(u_matsuno(spec, 0.0, x) ==
            doctest::Approx(eval_u0(data, x)).epsilon(1e-10));
  }
}

TEST_CASE("L2 norm is conserved in time") {
  const auto spec = MatsunoSpec::make(6);
  auto norm_sq = [&](double t) {
    return integrate_adaptive_real(
        [&](double x) {
          const double u = u_matsuno(spec, t, x);
          return u * u;
        },
        -60.0, 60.0, 1e-8);
  };
  const double n0 = norm_sq(0.0);
  const double n1 = norm_sq(0.8);
  CHECK(std::abs(n0 - n1) < 0.01 * n0);
}

TEST_CASE("output stays real under the trace formula") {
  const auto spec = MatsunoSpec::make(8);
  for (double x = -4.0; x <= 6.0; x += 0.37) {
    const double u = u_matsuno(spec, 0.9, x);
    CHECK(std::isfinite(u));
  }
}
