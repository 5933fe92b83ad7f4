#pragma once

#include <Eigen/Dense>

#include "bozd/contours.hpp"

namespace bozd {

// Integral value carried as mantissa * exp(log_scale): the exponential row
// factors would overflow doubles long before the determinant ratio does.
struct ScaledComplex {
  Complex mantissa{0.0, 0.0};
  double log_scale = 0.0;
  Complex value() const { return mantissa * std::exp(log_scale); }
};

enum class IntegrandKind { kOne, kU0, kPoleTerm };

// Integral of f(z) e^{-i h(z)/eps} dz over the path, with h the continued
// values stored on the path. kPoleTerm uses f = 1/(z - p_{pole_index}).
ScaledComplex contour_integral(const RationalInitialData& data,
                               const LaxOleinikPoint& pt,
                               const ContourPath& path, IntegrandKind kind,
                               int pole_index, double epsilon,
                               const SolverConfig& config = {});

struct ExactResult {
  double u = 0.0;
  double epsilon_used = 0.0;
  bool epsilon_nudged = false;  // exceptional residue configuration detected
  Complex det_ratio{0.0, 0.0};
};

// Exact Benjamin-Ono solution via the determinant ratio 2 Re(det A / det B),
// rows integrated over the steepest-descent contour system.
ExactResult u_exact_detailed(const RationalInitialData& data,
                             const LaxOleinikPoint& pt, double epsilon,
                             const SolverConfig& config = {});

double u_exact(const RationalInitialData& data, const LaxOleinikPoint& pt,
               double epsilon, const SolverConfig& config = {});

// Same evaluation on caller-supplied contours (perturbation studies, manual
// paths already realized).
ExactResult u_exact_on_contours(const RationalInitialData& data,
                                const LaxOleinikPoint& pt,
                                const std::vector<ContourPath>& contours,
                                double epsilon,
                                const SolverConfig& config = {});

enum class TriState { kOk, kViolated, kNotComputed };

struct NonspecialReport {
  bool discriminant_ok = false;
  bool re_c_sums_ok = false;
  TriState heteroclinic_ok = TriState::kNotComputed;
  double discriminant = 0.0;
};

// Genericity tests: nonzero discriminant, nonzero subset sums of Re(c_n),
// and the saddle-pair level-difference inequalities checked along straight
// probe segments (tri-state, since the probe path choice is heuristic).
NonspecialReport nonspecial_check(const RationalInitialData& data,
                                  const LaxOleinikPoint& pt);

}  // namespace bozd
