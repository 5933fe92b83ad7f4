#pragma once

#include <complex>
#include <vector>

namespace bozd {

// All roots of a monic polynomial with real coefficients,
//   P(z) = z^d + coeffs[1] z^{d-1} + ... + coeffs[d],
// by Aberth-Ehrlich simultaneous iteration from a perturbed-circle start,
// followed by Newton polishing of each root. coeffs[0] must be 1.
//
// warm_start, when nonempty, seeds the iteration (e.g. roots from a nearby
// (t,x) during a sweep) and must have exactly d entries.
//
// Throws RootFindingFailure if polishing stagnates above the residual target.
std::vector<std::complex<double>> solve_monic_real(
    const std::vector<double>& coeffs,
    const std::vector<std::complex<double>>& warm_start = {});

// P(z) and P'(z) by Horner evaluation of the same coefficient layout.
std::complex<double> eval_poly(const std::vector<double>& coeffs,
                               std::complex<double> z);
std::complex<double> eval_poly_deriv(const std::vector<double>& coeffs,
                                     std::complex<double> z);

}  // namespace bozd
