#include <doctest.h>

#include <cmath>

#include "bozd/errors.hpp"
#include "bozd/quadrature.hpp"

using namespace bozd;
using Complex = std::complex<double>;

TEST_CASE("gauss-kronrod integrates smooth functions to near machine") {
  double err = 0.0;
  const Complex v = gauss_kronrod_15(
      [](double x) { return Complex(std::exp(-x * x), 0.0); }, -1.0, 1.0, &err);
  CHECK(v.real() == doctest::Approx(1.4936482656248540).epsilon(1e-13));
}

TEST_CASE("adaptive integration handles oscillation and reports tolerance") {
  const double val = integrate_adaptive_real(
      [](double x) { return std::cos(40.0 * x); }, 0.0, 2.0, 1e-12);
  CHECK(val == doctest::Approx(std::sin(80.0) / 40.0).epsilon(1e-10));
}

TEST_CASE("adaptive integration fails loudly on a hopeless budget") {
  CHECK_THROWS_AS(integrate_adaptive_real(
                      [](double x) { return 1.0 / std::sqrt(std::abs(x)); },
                      -1.0, 1.0, 1e-14, 0.0, 4),
                  QuadratureFailure);
}

TEST_CASE("straight-segment integral of an analytic function") {
  // Integral of z^2 from 0 to 1+i equals (1+i)^3/3.
  const Complex end(1.0, 1.0);
  const Complex got = integrate_segment(
      [](Complex z) { return z * z; }, Complex(0.0, 0.0), end, 16);
  const Complex want = end * end * end / 3.0;
  CHECK(std::abs(got - want) < 1e-14);
}
