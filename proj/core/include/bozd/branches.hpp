#pragma once

#include <optional>
#include <vector>

#include "bozd/rational.hpp"

namespace bozd {

// Roots of the characteristic equation y - x + 2t u0(y) = 0 at one (t,x),
// split into real Burgers branches and complex-conjugate pairs.
struct BranchData {
  double t = 0.0, x = 0.0;
  // y_0 > y_1 > ... > y_{2J}, strictly descending.
  std::vector<double> real_roots;
  // z_1..z_{N-J} with Im > 0; conjugates implicit.
  std::vector<Complex> complex_roots;
  int J = 0;
  // u_k^B = u0(y_k), strictly ascending in k (consequence of y_j - y_k =
  // -2t (u_j^B - u_k^B)).
  std::vector<double> branch_values;
  double min_root_separation = 0.0;
};

struct BranchSolveOptions {
  double tau_real = 1e-9;     // reality snap, relative
  double tau_caustic = 1e-6;  // refuse below this root separation, relative
  std::vector<Complex> warm_start;  // previous roots, for sweeps
};

// Real monomial coefficients (monic, degree 2N+1, leading first) of the
// numerator of (y - x) + 2t u0(y) after clearing denominators.
std::vector<double> characteristic_poly(const RationalInitialData& data,
                                        const LaxOleinikPoint& pt);

// Solve and classify all 2N+1 characteristic roots. Throws NearCaustic when
// (t,x) is too close to the discriminant locus for reliable classification.
BranchData solve_branches(const RationalInitialData& data,
                          const LaxOleinikPoint& pt,
                          const BranchSolveOptions& opt = {});

// Count of real characteristic roots, tolerant near caustics (no throw);
// used by grid scans.
int count_real_roots(const RationalInitialData& data, const LaxOleinikPoint& pt,
                     double tau_real = 1e-9);

// Weak limit ubar = sum_k (-1)^k u_k^B.
double weak_limit_ubar(const BranchData& branches);

// Discriminant of the characteristic polynomial via the Sylvester resultant
// Res(P, P') of the monic P.
double discriminant_at(const RationalInitialData& data,
                       const LaxOleinikPoint& pt);

struct BranchDerivatives {
  std::vector<double> dx_y;  // d y_k / dx = 1 / (1 + 2t u0'(y_k))
  std::vector<double> dx_u;  // d u_k^B / dx = u0'(y_k) dx_y[k]
};

// Implicit differentiation of the characteristic equation at each real root.
BranchDerivatives branch_derivatives(const RationalInitialData& data,
                                     const LaxOleinikPoint& pt,
                                     const BranchData& branches);

// Warm-started branch continuation along a sweep; keeps per-instance state
// only, safe to use one instance per worker.
class BranchSweeper {
 public:
  explicit BranchSweeper(const RationalInitialData& data,
                         BranchSolveOptions opt = {})
      : data_(data), opt_(opt) {}

  BranchData solve(const LaxOleinikPoint& pt);

 private:
  RationalInitialData data_;
  BranchSolveOptions opt_;
  std::vector<Complex> prev_roots_;
};

}  // namespace bozd
