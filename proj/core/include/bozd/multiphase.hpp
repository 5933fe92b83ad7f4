#pragma once

#include <vector>

#include "bozd/rational.hpp"

namespace bozd {

// Exact J-phase solution parameters: constants R_0 < R_1 < ... < R_{2J} and
// complex amplitudes gamma_1..gamma_J whose moduli satisfy the solvability
// constraint (validated on construction).
struct JPhaseSpec {
  std::vector<double> R;        // size 2J+1, strictly increasing
  std::vector<Complex> gamma;   // size J, nonzero
  double epsilon = 1.0;

  int J() const { return static_cast<int>(gamma.size()); }
  void validate(double tol = 1e-8) const;
};

// |gamma_j|^2 required by the solvability constraint for given R's.
std::vector<double> jphase_gamma_modulus(const std::vector<double>& R);

// Build a spec from R's and user phases; moduli are filled in from the
// constraint. Throws ConfigError on malformed R.
JPhaseSpec make_jphase_spec(const std::vector<double>& R,
                            const std::vector<double>& phases, double epsilon);

// The J-phase solution value at (t,x): R_0 + sum (R_{2j-1}-R_{2j})
// - 2 eps Im d/dx log det M with linear phases, all derivatives analytic.
double jphase_u(const JPhaseSpec& spec, double t, double x);

// One-phase periodic traveling wave M U_r(M (x - c_r t)/eps + alpha) + a,
// c_r = M (1+r^2)/(1-r^2).
double periodic_wave(double M, double r, double a, double alpha, double epsilon,
                     double t, double x);

}  // namespace bozd
