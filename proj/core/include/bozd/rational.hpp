#pragma once

#include <complex>
#include <vector>

#include "bozd/errors.hpp"

namespace bozd {

using Complex = std::complex<double>;

inline constexpr double kDefaultZeroTol = 1e-12;

// Scale-aware "is approximately zero" test: |v| <= tol * (1 + scale).
inline bool near_zero(double v, double scale, double tol = kDefaultZeroTol) {
  return std::abs(v) <= tol * (1.0 + std::abs(scale));
}

// Rational initial data u0(x) = sum_n [ c_n/(x - p_n) + conj(c_n)/(x - conj(p_n)) ].
// Only the upper half-plane poles p_n and their residues c_n are stored; the
// conjugate pair is generated on evaluation so u0 is real on R by construction.
struct RationalInitialData {
  std::vector<Complex> poles;     // Im(p_n) > 0, pairwise distinct
  std::vector<Complex> residues;  // same length as poles

  int pair_count() const { return static_cast<int>(poles.size()); }

  // Throws ConfigError naming the offending index on invalid data.
  void validate() const;

  // Geometric scale of the data, used for relative tolerances.
  double scale() const;

  // sup |u0| estimated by sampling plus local refinement.
  double sup_abs_u0() const;
};

struct LaxOleinikPoint {
  double t = 0.0;  // must be > 0 for any h-evaluation
  double x = 0.0;
};

// u0 at real x; the imaginary residue of the pairwise sum is discarded
// (checked to be < 1e-12 relative in debug).
double eval_u0(const RationalInitialData& data, double x);

// u0 continued to complex z.
Complex eval_u0_complex(const RationalInitialData& data, Complex z);

// Exact rational derivative u0'(z). Throws PoleHit within 1e-13*scale of a pole.
Complex eval_u0_prime(const RationalInitialData& data, Complex z);

// Lax-Oleinik objective h(y) = (y-x)^2/(4t) + sum_n 2 Re[c_n Log(y - p_n)]
// with principal logarithms; real for real y. Throws NonPositiveTime.
double eval_h_real(const RationalInitialData& data, const LaxOleinikPoint& pt,
                   double y);

// h'(z) = (z - x)/(2t) + u0(z), single-valued meromorphic on C.
Complex eval_h_prime(const RationalInitialData& data, const LaxOleinikPoint& pt,
                     Complex z);

// h''(z) = 1/(2t) + u0'(z).
Complex eval_h_second(const RationalInitialData& data, const LaxOleinikPoint& pt,
                      Complex z);

// h(z) for complex z by the principal-branch formula. Valid as long as no
// branch cut of the principal logs is crossed; contour code continues h'
// instead of relying on this.
Complex eval_h_principal(const RationalInitialData& data,
                         const LaxOleinikPoint& pt, Complex z);

}  // namespace bozd
