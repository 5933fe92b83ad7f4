#pragma once

#include <Eigen/Dense>

#include "bozd/branches.hpp"

namespace bozd {

// Modulation data entering the J-phase profile at one (t,x).
struct ZDProfileParams {
  BranchData branches;
  std::vector<double> theta;      // nonlinear phases, theta_j = h(y_{2j-1}) - h(y_{2j})
  std::vector<double> phi;        // phase corrections, radians
  std::vector<double> gamma_abs;  // |gamma_j| > 0
  std::vector<double> kappa;      // d theta_j / dx = u_{2j-1}^B - u_{2j}^B
  std::vector<double> omega;      // -d theta_j / dt = (u_{2j-1}^B)^2 - (u_{2j}^B)^2

  int J() const { return branches.J; }
  Complex gamma(int j) const {
    return gamma_abs[j] * std::polar(1.0, phi[j]);
  }
};

struct ModulationMatrix {
  Eigen::MatrixXcd M;
  double epsilon = 0.0;
};

// Periodic profile U_r(theta) = (1-r^2)/(1+r^2-2r cos theta), evaluated in the
// cancellation-free form (1-r^2)/((1-r)^2 + 4r sin^2(theta/2)).
double periodic_profile_Ur(double r, double theta);

// Closed form of the Fourier coefficient of U_r^p: r^{|n|} (|n| + (1+r^2)/(1-r^2))^{p-1}.
double fourier_coeff_Ur(double r, int n, int p);

// theta_j = h(y_{2j-1}) - h(y_{2j}), j = 1..J.
std::vector<double> nonlinear_phases(const RationalInitialData& data,
                                     const LaxOleinikPoint& pt,
                                     const BranchData& branches);

// Phi(y) = sum_n Arg(y - p_n) - sum_m Arg(y - z_m), principal arguments
// (each lies in (-pi, 0) since all points are in the open upper half-plane).
double phi_closed_form(const RationalInitialData& data, const BranchData& branches,
                       double y);

// Same function through the Hilbert-transform integral of ln g; retained as a
// cross-check oracle for the closed form.
double phi_integral_form(const RationalInitialData& data,
                         const LaxOleinikPoint& pt, const BranchData& branches,
                         double y);

// g(y) in the root-product form; strictly positive on R.
double eval_g(const RationalInitialData& data, const BranchData& branches,
              double y);

// phi_j = pi/2 + Phi(y_{2j-1}) - Phi(y_{2j}).
std::vector<double> phase_corrections(const RationalInitialData& data,
                                      const BranchData& branches);

// |gamma_j| from the J-phase modulus constraint with R_k = u_k^B.
// Throws NonPositiveModulus if the sign structure indicates branch mis-ordering.
std::vector<double> gamma_modulus(const BranchData& branches);

// All modulation parameters at once.
ZDProfileParams compute_zd_params(const RationalInitialData& data,
                                  const LaxOleinikPoint& pt,
                                  const BranchData& branches);

// M_jk = gamma_j e^{i theta_j / eps} delta_jk + 1/(u_{2j-1}^B - u_{2k}^B).
// Throws SingularM if the determinant is numerically zero.
ModulationMatrix build_M(const ZDProfileParams& params, double epsilon);

enum class ZDRoute {
  kAuto,         // closed form for J<=1, determinant path for J>=2
  kDeterminant,  // force the determinant path (test oracle for J=1)
};

// The zero-dispersion profile u^ZD(t,x;eps).
double u_zd(const RationalInitialData& data, const LaxOleinikPoint& pt,
            double epsilon, ZDRoute route = ZDRoute::kAuto);

// Same, reusing an already-solved branch structure.
double u_zd_from_branches(const RationalInitialData& data,
                          const LaxOleinikPoint& pt, const BranchData& branches,
                          double epsilon, ZDRoute route = ZDRoute::kAuto);

// J-phase evaluation with the modulation parameters frozen at their values in
// `params`: only the fast phases move, theta_j -> theta_j + theta_shift_j.
// This is the profile of the underlying exact multi-phase wave at the
// expansion point.
double u_zd_frozen(const ZDProfileParams& params, double epsilon,
                   const std::vector<double>& theta_shift = {});

}  // namespace bozd
