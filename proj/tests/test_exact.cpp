#include <doctest.h>

#include "bozd/exact.hpp"
#include "bozd/quadrature.hpp"
#include "bozd/matsuno.hpp"
#include "bozd/zd_profile.hpp"
#include "support/fixtures.hpp"

using namespace bozd;

TEST_CASE("contour construction: topology in the one- and three-saddle zones") {
  const auto data = testing::lorentzian();

  SUBCASE("J=1: W_0 passes all three real saddles, W_1 carries the pair") {
    const LaxOleinikPoint pt{1.0, testing::find_j1_x(data, 1.0, 0.0, 4.0)};
    const auto branches = solve_branches(data, pt);
    REQUIRE(branches.J == 1);
    const auto contours = build_contours(data, pt, branches, 0.05);
    REQUIRE(contours.size() == 2);
    CHECK(contours[0].role == ContourRole::kW0);
    CHECK(contours[0].arcs.size() == 3);
    CHECK(contours[0].dominant_saddles.size() == 3);
    CHECK(contours[1].dominant_saddles.size() == 2);
    // The pair contour carries y_1 and y_2 (the two leftmost saddles).
    for (const auto& s : contours[1].dominant_saddles) {
      const bool is_y1 = std::abs(s.real() - branches.real_roots[1]) < 1e-12;
      const bool is_y2 = std::abs(s.real() - branches.real_roots[2]) < 1e-12;
      CHECK((is_y1 || is_y2));
    }
  }

  SUBCASE("J=0: the second contour is dominated by the complex saddle") {
    const LaxOleinikPoint pt{0.15, 0.3};
    const auto branches = solve_branches(data, pt);
    REQUIRE(branches.J == 0);
    REQUIRE(branches.complex_roots.size() == 1);
    const auto contours = build_contours(data, pt, branches, 0.05);
    REQUIRE(contours.size() == 2);
    CHECK(contours[0].arcs.size() == 1);
    REQUIRE(contours[1].dominant_saddles.size() == 1);
    CHECK(std::abs(contours[1].dominant_saddles[0] -
                   branches.complex_roots[0]) < 1e-12);
  }
}

TEST_CASE("dominance validation accepts built contours") {
  const auto data = testing::two_pole();
  const LaxOleinikPoint pt{4.5, 4.5};
  const auto branches = solve_branches(data, pt);
  SolverConfig config;
  const auto contours =
      build_contours(data, pt, branches, std::pow(2.0, -5), config);
  for (const auto& path : contours) {
    const auto report = validate_dominance(data, pt, path, config.delta);
    CHECK(report.ok);
    CHECK(continuation_residual(data, pt, path) < 1e-10);
  }
}

TEST_CASE("contour integral: brute-force oracle at large epsilon") {
  const auto data = testing::lorentzian();
  const LaxOleinikPoint pt{0.5, 0.4};
  const auto branches = solve_branches(data, pt);
  const double eps = 10.0;
  const auto contours = build_contours(data, pt, branches, eps);

  // Dense trapezoid over the same polyline with h continued along each chord.
  const auto& path = contours[0];
  for (IntegrandKind kind : {IntegrandKind::kOne, IntegrandKind::kU0}) {
    const auto smart = contour_integral(data, pt, path, kind, 0, eps);
    auto f = [&](Complex z) {
      if (kind == IntegrandKind::kOne) return Complex(1.0, 0.0);
      return eval_u0_complex(data, z);
    };
    auto hp = [&](Complex z) { return eval_h_prime(data, pt, z); };
    auto trapezoid = [&](int sub) {
      Complex total(0.0, 0.0);
      for (const auto& arc : path.arcs) {
        Complex arc_sum(0.0, 0.0);
        for (size_t i = 1; i < arc.z.size(); ++i) {
          Complex hcur = arc.h[i - 1];
          Complex prev_g =
              f(arc.z[i - 1]) *
              std::exp(Complex(0, -1) * (hcur - arc.h_saddle) / eps);
          for (int s = 1; s <= sub; ++s) {
            const Complex za =
                arc.z[i - 1] + (arc.z[i] - arc.z[i - 1]) *
                                   (static_cast<double>(s - 1) / sub);
            const Complex zb =
                arc.z[i - 1] +
                (arc.z[i] - arc.z[i - 1]) * (static_cast<double>(s) / sub);
            hcur += integrate_segment(hp, za, zb, 16);
            const Complex g =
                f(zb) * std::exp(Complex(0, -1) * (hcur - arc.h_saddle) / eps);
            arc_sum += 0.5 * (prev_g + g) * (zb - za);
            prev_g = g;
          }
        }
        total += arc_sum * std::polar(1.0, -arc.h_saddle.real() / eps);
      }
      return total;
    };
    // Richardson-extrapolated trapezoid (~1e5 nodes total at the fine level).
    const Complex t1 = trapezoid(400), t2 = trapezoid(800);
    const Complex brute = (4.0 * t2 - t1) / 3.0;
    const Complex got = smart.mantissa * std::exp(smart.log_scale -
                                                  path.arcs[0].level() / eps);
    CHECK(std::abs(got - brute) <= 1e-8 * (1.0 + std::abs(brute)));
  }
}

TEST_CASE("path reversal negates the integral") {
  const auto data = testing::lorentzian();
  const LaxOleinikPoint pt{0.5, 0.4};
  const auto branches = solve_branches(data, pt);
  const double eps = 0.5;
  auto contours = build_contours(data, pt, branches, eps);
  const auto fwd = contour_integral(data, pt, contours[0], IntegrandKind::kOne,
                                    0, eps);
  for (auto& arc : contours[0].arcs) {
    std::reverse(arc.z.begin(), arc.z.end());
    std::reverse(arc.h.begin(), arc.h.end());
  }
  const auto bwd = contour_integral(data, pt, contours[0], IntegrandKind::kOne,
                                    0, eps);
  CHECK(std::abs(fwd.mantissa + bwd.mantissa) <=
        1e-12 * (1.0 + std::abs(fwd.mantissa)));
}

TEST_CASE("saddle-point asymptotics of the contour integral") {
  const auto data = testing::lorentzian();
  const LaxOleinikPoint pt{0.2, 0.1};
  const auto branches = solve_branches(data, pt);
  REQUIRE(branches.J == 0);
  const double y0 = branches.real_roots[0];
  const double h2 = eval_h_second(data, pt, Complex(y0, 0.0)).real();

  double prev_ratio_err = 1e9;
  for (int k = 4; k <= 8; ++k) {
    const double eps = std::pow(2.0, -k);
    const auto contours = build_contours(data, pt, branches, eps);
    const auto got =
        contour_integral(data, pt, contours[0], IntegrandKind::kU0, 0, eps);
    const double gauss = std::sqrt(2.0 * M_PI * eps / std::abs(h2));
    // |integral| ~ |u0(y0)| * sqrt(2 pi eps / |h''|); the phase carries
    // e^{-i h(y0)/eps + i phi}.
    const double ratio =
        std::abs(got.mantissa * std::exp(got.log_scale)) /
        (gauss * std::abs(eval_u0(data, y0)));
    CHECK(std::abs(ratio - 1.0) < prev_ratio_err + 1e-12);
    prev_ratio_err = std::abs(ratio - 1.0);
  }
  CHECK(prev_ratio_err < 0.02);
}

TEST_CASE("exact solution matches the soliton oracle") {
  const auto data = testing::lorentzian();
  const double eps = 0.25;
  const auto spec = MatsunoSpec::make(4);
  for (double t : {0.5, 1.0}) {
    for (double x : {-1.0, 0.7, 1.9, 3.0}) {
      const double ue = u_exact(data, {t, x}, eps);
      const double um = u_matsuno(spec, t, x);
      CHECK(std::abs(ue - um) < 1e-6);
    }
  }
}

TEST_CASE("exact solution tends to u0 as t -> 0+") {
  const auto data = testing::lorentzian();
  for (double x : {-0.8, 0.0, 1.2}) {
    const double ue = u_exact(data, {1e-3, x}, 1e-2);
    CHECK(std::abs(ue - eval_u0(data, x)) < 1e-2);
  }
}

TEST_CASE("row rescaling leaves the determinant ratio unchanged") {
  const auto data = testing::lorentzian();
  const LaxOleinikPoint pt{1.0, testing::find_j1_x(data, 1.0, 0.0, 4.0)};
  const double eps = std::pow(2.0, -5);
  const auto r1 = u_exact_detailed(data, pt, eps);
  const auto r2 = u_exact_detailed(data, pt, eps);
  CHECK(r1.u == doctest::Approx(r2.u).epsilon(1e-14));
}

TEST_CASE("perturbing contour nodes leaves the value invariant") {
  const auto data = testing::lorentzian();
  const LaxOleinikPoint pt{1.0, testing::find_j1_x(data, 1.0, 0.0, 4.0)};
  const double eps = std::pow(2.0, -5);
  SolverConfig config;
  const auto branches = solve_branches(data, pt);
  const auto contours = build_contours(data, pt, branches, eps, config);
  const auto base = u_exact_on_contours(data, pt, contours, eps, config);
  std::vector<ContourPath> shaken;
  for (size_t c = 0; c < contours.size(); ++c)
    shaken.push_back(perturb_path(data, pt, contours[c], 1e-3, 17 + c));
  const auto moved = u_exact_on_contours(data, pt, shaken, eps, config);
  CHECK(std::abs(base.u - moved.u) < 10.0 * config.quad_tol);
}

TEST_CASE("exceptional residue configurations nudge epsilon") {
  RationalInitialData data;
  data.poles = {Complex(0.0, 1.0)};
  data.residues = {Complex(0.0, 0.5)};  // c = i/2 = i*eps*1 at eps=1/2
  data.validate();
  const auto r = u_exact_detailed(data, {0.4, 0.2}, 0.5);
  CHECK(r.epsilon_nudged);
  CHECK(r.epsilon_used != 0.5);
}

TEST_CASE("nonspecial configuration report") {
  SUBCASE("same-sign real parts pass the subset test") {
    RationalInitialData data;
    data.poles = {Complex(0.0, 1.0), Complex(2.0, 1.5)};
    data.residues = {Complex(-0.8, 0.7), Complex(-0.4, -0.9)};
    data.validate();
    const auto report = nonspecial_check(data, {0.7, 0.3});
    CHECK(report.re_c_sums_ok);
  }
  SUBCASE("purely imaginary residue fails") {
    RationalInitialData data;
    data.poles = {Complex(0.0, 1.0)};
    data.residues = {Complex(0.0, -1.0)};
    data.validate();
    const auto report = nonspecial_check(data, {0.7, 0.3});
    CHECK(!report.re_c_sums_ok);
  }
  SUBCASE("two-pole sample at (3,6) has nonzero discriminant") {
    const auto report = nonspecial_check(testing::two_pole(), {3.0, 6.0});
    CHECK(report.discriminant_ok);
  }
}
