#include "bozd/polyroots.hpp"

#include <algorithm>
#include <cmath>

#include "bozd/errors.hpp"

namespace bozd {

using Complex = std::complex<double>;

Complex eval_poly(const std::vector<double>& coeffs, Complex z) {
  Complex v(coeffs[0], 0.0);
  for (size_t k = 1; k < coeffs.size(); ++k) v = v * z + coeffs[k];
  return v;
}

Complex eval_poly_deriv(const std::vector<double>& coeffs, Complex z) {
  const int d = static_cast<int>(coeffs.size()) - 1;
  Complex v(coeffs[0] * d, 0.0);
  for (int k = 1; k < d; ++k) v = v * z + coeffs[k] * (d - k);
  return v;
}

namespace {

// Cauchy-style inclusion radius for the roots of a monic polynomial.
double root_radius(const std::vector<double>& coeffs) {
  double r = 0.0;
  for (size_t k = 1; k < coeffs.size(); ++k)
    r = std::max(r, std::pow(std::abs(coeffs[k]), 1.0 / static_cast<double>(k)));
  return 2.0 * std::max(r, 1e-8);
}

}  // namespace

std::vector<Complex> solve_monic_real(const std::vector<double>& coeffs,
                                      const std::vector<Complex>& warm_start) {
  const int d = static_cast<int>(coeffs.size()) - 1;
  if (d <= 0) return {};
  if (coeffs[0] != 1.0) throw RootFindingFailure("polynomial must be monic");

  std::vector<Complex> z(d);
  if (static_cast<int>(warm_start.size()) == d) {
    z = warm_start;
  } else {
    // Perturbed circle: non-real offset angle breaks the conjugacy symmetry
    // that would otherwise trap the iteration on the real axis.
    const double R = root_radius(coeffs);
    for (int k = 0; k < d; ++k) {
      const double phi = 2.0 * M_PI * k / d + 0.37;
      z[k] = R * Complex(std::cos(phi), std::sin(phi)) + Complex(0.0, 0.03 * R);
    }
  }

  double scale = 1.0;
  for (const auto& zi : z) scale = std::max(scale, std::abs(zi));

  const int max_iters = 200;
  for (int iter = 0; iter < max_iters; ++iter) {
    double max_step = 0.0;
    for (int k = 0; k < d; ++k) {
      const Complex pk = eval_poly(coeffs, z[k]);
      const Complex dpk = eval_poly_deriv(coeffs, z[k]);
      Complex repulsion(0.0, 0.0);
      for (int j = 0; j < d; ++j) {
        if (j == k) continue;
        Complex diff = z[k] - z[j];
        if (std::abs(diff) < 1e-300) diff = Complex(1e-300, 0.0);
        repulsion += 1.0 / diff;
      }
      const Complex newton = (std::abs(dpk) > 0.0) ? pk / dpk : pk;
      const Complex denom = 1.0 - newton * repulsion;
      Complex step = (std::abs(denom) > 1e-300) ? newton / denom : newton;
      // Damp absurd steps from near-coincident iterates.
      const double cap = 0.5 * (1.0 + std::abs(z[k]));
      if (std::abs(step) > cap) step *= cap / std::abs(step);
      z[k] -= step;
      max_step = std::max(max_step, std::abs(step));
    }
    if (max_step < 1e-14 * (1.0 + scale)) break;
  }

  // Newton polishing, each root independently.
  for (int k = 0; k < d; ++k) {
    for (int it = 0; it < 50; ++it) {
      const Complex pk = eval_poly(coeffs, z[k]);
      const Complex dpk = eval_poly_deriv(coeffs, z[k]);
      if (std::abs(dpk) == 0.0) break;
      const Complex step = pk / dpk;
      z[k] -= step;
      if (std::abs(step) < 1e-16 * (1.0 + std::abs(z[k]))) break;
    }
  }

  // Residual check against a derivative-scaled target; a failure here means
  // the iteration stagnated (e.g. clustered roots), not a caustic decision,
  // which is the caller's job.
  for (int k = 0; k < d; ++k) {
    const double res = std::abs(eval_poly(coeffs, z[k]));
    const double dp = std::abs(eval_poly_deriv(coeffs, z[k]));
    const double target = 1e-10 * std::max(1.0, dp * (1.0 + std::abs(z[k])));
    if (!(res <= target))
      throw RootFindingFailure("residual " + std::to_string(res) +
                               " at root " + std::to_string(k));
  }
  return z;
}

}  // namespace bozd
