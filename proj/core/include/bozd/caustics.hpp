#pragma once

#include <vector>

#include "bozd/branches.hpp"

namespace bozd {

struct CausticPoint {
  double t = 0.0, x = 0.0;
};

struct CausticCurve {
  int id = 0;
  std::vector<CausticPoint> points;
};

struct CausticScanOptions {
  int nt = 120;  // grid resolution in t
  int nx = 240;  // grid resolution in x
};

// Zero-level contour of the discriminant over [t0,t1] x [x0,x1], traced by
// marching squares and filtered to cells where the count of real
// characteristic roots changes (the caustic locus proper). Edge crossings are
// refined by bisection on the discriminant. Returns chained polylines.
std::vector<CausticCurve> caustic_scan(const RationalInitialData& data,
                                       double t0, double t1, double x0,
                                       double x1,
                                       const CausticScanOptions& opt = {});

// J(t,x) on a grid (entries -1 where classification is ambiguous).
struct JMap {
  double t0, t1, x0, x1;
  int nt, nx;
  std::vector<int> J;  // row-major, nt rows of nx entries
};

JMap j_map(const RationalInitialData& data, double t0, double t1, double x0,
           double x1, int nt, int nx);

// Real zeros in x of the discriminant at fixed t, located by sign-change
// bisection on a fine scan grid.
std::vector<double> discriminant_zeros_in_x(const RationalInitialData& data,
                                            double t, double x0, double x1,
                                            int scan_points = 4000);

}  // namespace bozd
