#include <doctest.h>

#include <random>

#include "bozd/zd_profile.hpp"
#include "support/fixtures.hpp"

using namespace bozd;

namespace {

// Midpoint of the first run (scanning right) with 2J+1 = 3 real roots.
double find_j1_x(const RationalInitialData& data, double t, double x0,
                 double x1) {
  double first = std::nan(""), last = std::nan("");
  for (double x = x0; x <= x1; x += 0.01) {
    if (count_real_roots(data, {t, x}) == 3) {
      if (std::isnan(first)) first = x;
      last = x;
    }
  }
  REQUIRE(!std::isnan(first));
  return 0.5 * (first + last);
}

}  // namespace

TEST_CASE("periodic profile: stable form and Fourier coefficients") {
  CHECK(fourier_coeff_Ur(0.5, 0, 1) == doctest::Approx(1.0));
  CHECK(fourier_coeff_Ur(0.5, 2, 1) == doctest::Approx(0.25));
  for (double r : {0.3, 0.7}) {
    for (int p : {1, 2}) {
      for (int n = -3; n <= 3; ++n) {
        const int grid = 8192;
        Complex acc(0.0, 0.0);
        for (int k = 0; k < grid; ++k) {
          const double th = 2.0 * M_PI * k / grid;
          acc += std::pow(periodic_profile_Ur(r, th), p) *
                 std::polar(1.0, -n * th);
        }
        acc /= static_cast<double>(grid);
        CHECK(std::abs(acc.real() - fourier_coeff_Ur(r, n, p)) < 1e-10);
        CHECK(std::abs(acc.imag()) < 1e-12);
      }
    }
  }
}

TEST_CASE("mean of the periodic profile is one") {
  for (double r : {0.1, 0.5, 0.9, 0.99}) {
    const int grid = 1 << 14;
    double acc = 0.0;
    for (int k = 0; k < grid; ++k)
      acc += periodic_profile_Ur(r, 2.0 * M_PI * k / grid);
    CHECK(std::abs(acc / grid - 1.0) < 1e-10);
  }
}

TEST_CASE("phase derivatives match the wavenumber and frequency") {
  const auto data = testing::lorentzian();
  const double t = 1.0;
  const double x = find_j1_x(data, t, 0.0, 4.0);
  const LaxOleinikPoint pt{t, x};
  const auto branches = solve_branches(data, pt);
  REQUIRE(branches.J == 1);
  const auto params = compute_zd_params(data, pt, branches);

  const double dx = 1e-6;
  auto theta_at = [&](double tt, double xx) {
    const auto b = solve_branches(data, {tt, xx});
    REQUIRE(b.J == 1);
    return nonlinear_phases(data, {tt, xx}, b)[0];
  };
  const double dtheta_dx =
      (theta_at(t, x + dx) - theta_at(t, x - dx)) / (2 * dx);
  const double dtheta_dt =
      (theta_at(t + dx, x) - theta_at(t - dx, x)) / (2 * dx);
  CHECK(std::abs(dtheta_dx - params.kappa[0]) <=
        1e-6 * (1.0 + std::abs(params.kappa[0])));
  CHECK(std::abs(-dtheta_dt - params.omega[0]) <=
        1e-6 * (1.0 + std::abs(params.omega[0])));
  // The ordering convention makes kappa negative.
  CHECK(params.kappa[0] < 0.0);
}

TEST_CASE("phase correction function: closed form vs integral form") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 8; ++trial) {
    const auto data = testing::random_data(rng, 1 + trial % 3);
    BranchData branches;
    const auto pt = testing::random_point(rng, data, &branches);
    std::uniform_real_distribution<double> yd(-3.0 * data.scale(),
                                              3.0 * data.scale());
    for (int probe = 0; probe < 3; ++probe) {
      const double y = yd(rng);
      const double closed = phi_closed_form(data, branches, y);
      const double integral = phi_integral_form(data, pt, branches, y);
      CHECK(std::abs(closed - integral) < 1e-6);
    }
  }
}

TEST_CASE("g is positive and normalizes at infinity") {
  const auto data = testing::two_pole();
  const LaxOleinikPoint pt{4.5, 4.5};
  const auto branches = solve_branches(data, pt);
  for (double y = -20.0; y <= 40.0; y += 0.37)
    CHECK(eval_g(data, branches, y) > 0.0);
  const double far = 1e6 * data.scale();
  const double tail = eval_g(data, branches, far) *
                      std::pow(far, 2.0 * branches.J);
  CHECK(tail == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("closed-form arguments stay in (-pi, 0)") {
  const auto data = testing::two_pole();
  const auto branches = solve_branches(data, {4.5, 4.5});
  for (double y : {-5.0, 0.0, 4.2, 20.0}) {
    for (const auto& p : data.poles) {
      const double a = std::arg(Complex(y, 0.0) - p);
      CHECK(a < 0.0);
      CHECK(a > -M_PI);
    }
    for (const auto& z : branches.complex_roots) {
      const double a = std::arg(Complex(y, 0.0) - z);
      CHECK(a < 0.0);
      CHECK(a > -M_PI);
    }
  }
}

TEST_CASE("single-pole phase correction reduces to the arg difference") {
  const auto data = testing::lorentzian();
  const double t = 1.0;
  const double x = find_j1_x(data, t, 0.0, 4.0);
  const auto branches = solve_branches(data, {t, x});
  REQUIRE(branches.J == 1);
  const auto phi = phase_corrections(data, branches);
  const Complex i(0.0, 1.0);
  const double expected = std::arg(branches.real_roots[1] - i) -
                          std::arg(branches.real_roots[2] - i) + M_PI / 2.0;
  CHECK(phi[0] == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("gamma modulus: closed J=1 form, homogeneity, translation") {
  const auto data = testing::lorentzian();
  const double x = find_j1_x(data, 1.0, 0.0, 4.0);
  const auto branches = solve_branches(data, {1.0, x});
  REQUIRE(branches.J == 1);
  const auto mods = gamma_modulus(branches);
  const auto& R = branches.branch_values;
  const double direct = std::sqrt(
      (R[2] - R[0]) / ((R[1] - R[0]) * (R[2] - R[1]) * (R[2] - R[1])));
  CHECK(mods[0] == doctest::Approx(direct).epsilon(1e-12));

  // Scaling R by lambda scales |gamma|^2 by lambda^-2; translation is exact.
  BranchData scaled = branches;
  const double lam = 2.7;
  for (auto& v : scaled.branch_values) v *= lam;
  CHECK(gamma_modulus(scaled)[0] ==
        doctest::Approx(mods[0] / lam).epsilon(1e-12));
  BranchData shifted = branches;
  for (auto& v : shifted.branch_values) v += 1.37;
  CHECK(gamma_modulus(shifted)[0] == doctest::Approx(mods[0]).epsilon(1e-12));
}

TEST_CASE("modulation matrix is nonsingular along a grid") {
  const auto data = testing::two_pole();
  const double eps = std::pow(2.0, -5);
  int checked = 0;
  for (int k = 0; k <= 200; ++k) {
    const double x = 4.0 + k / 200.0;
    BranchData branches;
    try {
      branches = solve_branches(data, {4.5, x});
    } catch (const Error&) {
      continue;
    }
    if (branches.J < 1) continue;
    const auto params = compute_zd_params(data, {4.5, x}, branches);
    const auto M = build_M(params, eps);  // throws SingularM on failure
    CHECK(M.M.rows() == branches.J);
    ++checked;
  }
  CHECK(checked > 150);
}

TEST_CASE("J=1 determinant path agrees with the closed form") {
  const auto data = testing::two_pole();
  const double eps = std::pow(2.0, -5);
  int checked = 0;
  for (int k = 0; k <= 50; ++k) {
    const double x = 4.0 + k / 50.0;
    BranchData branches;
    try {
      branches = solve_branches(data, {4.5, x});
    } catch (const Error&) {
      continue;
    }
    if (branches.J != 1) continue;
    const double closed =
        u_zd_from_branches(data, {4.5, x}, branches, eps, ZDRoute::kAuto);
    const double det = u_zd_from_branches(data, {4.5, x}, branches, eps,
                                          ZDRoute::kDeterminant);
    CHECK(std::abs(closed - det) < 1e-8);
    ++checked;
  }
  CHECK(checked >= 40);
}

TEST_CASE("period average of the profile equals the weak limit") {
  const auto data = testing::lorentzian();
  const double x = find_j1_x(data, 1.0, 0.0, 4.0);
  const auto branches = solve_branches(data, {1.0, x});
  const auto params = compute_zd_params(data, {1.0, x}, branches);
  const double eps = std::pow(2.0, -5);
  const int grid = 2048;
  double avg = 0.0;
  for (int k = 0; k < grid; ++k)
    avg += u_zd_frozen(params, eps, {2.0 * M_PI * eps * k / grid});
  avg /= grid;
  CHECK(std::abs(avg - weak_limit_ubar(branches)) < 1e-8);
}

TEST_CASE("J=0 region returns the single branch") {
  const auto data = testing::two_pole();
  const LaxOleinikPoint pt{3.0, -8.0};
  const auto branches = solve_branches(data, pt);
  REQUIRE(branches.J == 0);
  CHECK(u_zd(data, pt, 0.01) == doctest::Approx(branches.branch_values[0]));
}

TEST_CASE("profile boundedness in the single-phase zone") {
  const auto data = testing::lorentzian();
  const double bound = 9.0 * data.sup_abs_u0();
  for (double x = -6.0; x <= 8.0; x += 0.05) {
    BranchData branches;
    try {
      branches = solve_branches(data, {1.0, x});
    } catch (const Error&) {
      continue;
    }
    for (int e = 4; e <= 7; ++e)
      CHECK(std::abs(u_zd_from_branches(data, {1.0, x}, branches,
                                        std::pow(2.0, -e))) <= bound);
  }
}
