#pragma once

#include <complex>
#include <functional>

namespace bozd {

// Gauss-Kronrod 15/7 pair on [a,b] for a complex-valued integrand of a real
// variable. Returns the K15 value; err is |K15 - G7|.
std::complex<double> gauss_kronrod_15(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double* err);

// Adaptive bisection driven by the GK15/7 error estimate. rel_tol is relative
// to the accumulated integral (plus floor_abs). Throws QuadratureFailure when
// the subdivision budget is exhausted.
std::complex<double> integrate_adaptive(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double rel_tol, double floor_abs = 0.0, int max_depth = 28);

// Real-valued convenience wrapper around integrate_adaptive.
double integrate_adaptive_real(const std::function<double(double)>& f, double a,
                               double b, double rel_tol, double floor_abs = 0.0,
                               int max_depth = 28);

// Fixed-order Gauss-Legendre on [a,b]; n in {8, 16}.
std::complex<double> gauss_legendre(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    int n);

// Straight-segment integral of a complex function along [za, zb] by
// Gauss-Legendre of order n.
std::complex<double> integrate_segment(
    const std::function<std::complex<double>(std::complex<double>)>& f,
    std::complex<double> za, std::complex<double> zb, int n = 16);

}  // namespace bozd
