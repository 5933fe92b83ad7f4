#pragma once

#include <string>

#include "bozd/exact.hpp"
#include "bozd/zd_profile.hpp"

namespace bozd {

// Which reference solution the sup-norm is taken against.
enum class RefSolver { kContour, kMatsuno };

struct SweepReport {
  double t = 0.0, a = 0.0, b = 0.0;
  std::vector<double> epsilons;      // strictly decreasing
  std::vector<int> m;                // samples per interval (m+1 points)
  std::vector<double> max_errors;    // sup_k |u_ref - u_zd|
  std::vector<double> wall_times_s;
  double fitted_slope = 0.0;
};

// max over x_k = a + (k/m)(b-a), k = 0..m, of |u_ref(t,x_k;eps) - u_zd|.
double supnorm_error(const RationalInitialData& data, double t, double a,
                     double b, int m, double epsilon, RefSolver ref,
                     const SolverConfig& config = {});

// Least-squares slope of log(error) against log(eps) over the three smallest
// epsilons. Throws InsufficientData below three pairs.
double loglog_slope(const std::vector<double>& epsilons,
                    const std::vector<double>& errors);

SweepReport run_sweep(const RationalInitialData& data, double t, double a,
                      double b, const std::vector<double>& epsilons,
                      const std::vector<int>& m, RefSolver ref,
                      const SolverConfig& config = {});

struct L2Report {
  double norm_uzd_sq = 0.0;
  double norm_u0_sq = 0.0;
  double rel_gap = 0.0;
};

// Windowed L2 comparison of the profile against the initial data, excluding
// caustic-point neighborhoods of half-width `caustic_delta`. Requires
// max_x J(t,x) <= 1 in the window (JTooLarge otherwise).
L2Report l2_profile_check(const RationalInitialData& data, double t,
                          double epsilon, double window_lo, double window_hi,
                          double quad_tol = 1e-6, double caustic_delta = 1e-3);

// Named pass/fail outcomes used by both the CLI `verify` command and the
// acceptance binary; every tolerance is pinned inside the suite.
struct CriterionResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<CriterionResult> run_paper_table_suite(const SolverConfig& config = {});
std::vector<CriterionResult> run_slope_suite(const SolverConfig& config = {});
std::vector<CriterionResult> run_matsuno_cross_suite(const SolverConfig& config = {});
std::vector<CriterionResult> run_identity_suite(unsigned seed = 20240801u,
                                                int n_configs = 200);
std::vector<CriterionResult> run_contour_validity_suite(const SolverConfig& config = {});
std::vector<CriterionResult> run_l2_suite();
std::vector<CriterionResult> run_boundedness_suite();
std::vector<CriterionResult> run_caustic_cardinality_suite(unsigned seed = 7u);

// x-intervals with constant J at fixed t, clipped away from caustics; used to
// choose sampling windows deterministically.
struct ConstantJInterval {
  double lo = 0.0, hi = 0.0;
  int J = 0;
};
std::vector<ConstantJInterval> constant_j_intervals(
    const RationalInitialData& data, double t, double x0, double x1,
    double margin, int scan_points = 2400);

}  // namespace bozd
