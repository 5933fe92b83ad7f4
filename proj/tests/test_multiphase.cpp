#include <doctest.h>

#include "bozd/multiphase.hpp"
#include "bozd/zd_profile.hpp"
#include "support/fixtures.hpp"

using namespace bozd;

TEST_CASE("periodic wave basics") {
  const double M = 1.3, r = 0.6, a = 0.2, alpha = 0.7, eps = 0.05;

  SUBCASE("peak-to-trough variation") {
    double umax = -1e9, umin = 1e9;
    for (int k = 0; k < 20000; ++k) {
      const double x = -1.0 + 2.0 * k / 20000.0;
      const double u = periodic_wave(M, r, a, alpha, eps, 0.0, x);
      umax = std::max(umax, u);
      umin = std::min(umin, u);
    }
    CHECK(umax - umin ==
          doctest::Approx(4.0 * M * r / (1.0 - r * r)).epsilon(1e-6));
  }

  SUBCASE("spatial period is 2 pi eps / M") {
    const double period = 2.0 * M_PI * eps / M;
    for (double x : {-0.3, 0.1, 0.45}) {
      CHECK(periodic_wave(M, r, a, alpha, eps, 0.0, x) ==
            doctest::Approx(periodic_wave(M, r, a, alpha, eps, 0.0, x + period))
                .epsilon(1e-12));
    }
  }

  SUBCASE("traveling invariance") {
    const double cr = M * (1.0 + r * r) / (1.0 - r * r);
    for (double x : {-0.2, 0.0, 0.8}) {
      CHECK(periodic_wave(M, r, a, alpha, eps, 0.7, x) ==
            doctest::Approx(periodic_wave(M, r, a, alpha, eps, 0.0, x - cr * 0.7))
                .epsilon(1e-12));
    }
  }
}

TEST_CASE("gamma constructor enforces the modulus constraint") {
  const std::vector<double> R = {-0.5, 0.3, 1.1};
  const auto spec = make_jphase_spec(R, {0.4}, 0.1);
  CHECK(spec.J() == 1);
  spec.validate();

  JPhaseSpec bad = spec;
  bad.gamma[0] *= 1.5;
  CHECK_THROWS_AS(bad.validate(), ConfigError);

  CHECK_THROWS_AS(make_jphase_spec({1.0, 0.5, 2.0}, {0.0}, 0.1), ConfigError);
}

TEST_CASE("single-phase solution reduces to the periodic wave") {
  const std::vector<double> R = {-0.4, 0.25, 1.2};
  const double eps = 0.08;
  const auto spec = make_jphase_spec(R, {1.1}, eps);

  // Expected one-phase parameters from the reduction of the determinant:
  // amplitude M = R2 - R1, modulus r^2 = (R1 - R0)/(R2 - R0), mean level R0,
  // phase theta/eps + arg gamma.
  const double M = R[2] - R[1];
  const double r = std::sqrt((R[1] - R[0]) / (R[2] - R[0]));
  for (double t : {0.0, 0.4}) {
    for (double x : {-0.7, 0.0, 0.9}) {
      const double direct = jphase_u(spec, t, x);
      const double theta =
          (R[1] - R[2]) * x - (R[1] * R[1] - R[2] * R[2]) * t;
      const double wave =
          R[0] + M * periodic_profile_Ur(r, theta / eps + std::arg(spec.gamma[0]));
      CHECK(direct == doctest::Approx(wave).epsilon(1e-10));
    }
  }
}

TEST_CASE("output is real and Galilean covariant") {
  const std::vector<double> R = {-0.8, -0.1, 0.6, 0.9, 1.7};
  const auto spec = make_jphase_spec(R, {0.3, -1.2}, 0.07);

  SUBCASE("two-phase evaluation is finite and bounded") {
    for (double x = -1.0; x <= 1.0; x += 0.01) {
      const double u = jphase_u(spec, 0.3, x);
      CHECK(std::isfinite(u));
      CHECK(std::abs(u) < 50.0);
    }
  }

  SUBCASE("shifting all R by a and x by 2 a t shifts u by a") {
    const double a = 0.45, t = 0.6;
    std::vector<double> Rs = R;
    for (auto& v : Rs) v += a;
    // gamma moduli are translation invariant, phases kept.
    const auto spec_shift =
        make_jphase_spec(Rs, {0.3, -1.2}, 0.07);
    for (double x : {-0.4, 0.2, 0.9}) {
      const double lhs = jphase_u(spec_shift, t, x + 2.0 * a * t);
      const double rhs = jphase_u(spec, t, x) + a;
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
  }
}

TEST_CASE("frozen zero-dispersion profile matches the exact multiphase wave") {
  // At the expansion point the frozen-parameter profile and the J-phase
  // solution with the same constants coincide.
  const auto data = testing::lorentzian();
  double xj = std::nan("");
  for (double x = 0.0; x < 4.0; x += 0.01) {
    if (count_real_roots(data, {1.0, x}) == 3) {
      xj = x + 0.1;
      break;
    }
  }
  REQUIRE(std::isfinite(xj));
  const LaxOleinikPoint pt{1.0, xj};
  const auto branches = solve_branches(data, pt);
  REQUIRE(branches.J == 1);
  const auto params = compute_zd_params(data, pt, branches);
  const double eps = 0.05;

  JPhaseSpec spec;
  spec.R = branches.branch_values;
  spec.epsilon = eps;
  // Phase chosen so the linear phase at (t,x) matches theta_1(t,x).
  const double theta_lin =
      (spec.R[1] - spec.R[2]) * pt.x -
      (spec.R[1] * spec.R[1] - spec.R[2] * spec.R[2]) * pt.t;
  const double offset = params.theta[0] - theta_lin;
  spec.gamma = {params.gamma(0) * std::polar(1.0, offset / eps)};
  spec.validate(1e-10);

  const double frozen = u_zd_frozen(params, eps);
  const double exact_wave = jphase_u(spec, pt.t, pt.x);
  CHECK(std::abs(frozen - exact_wave) < 1e-10);
}
