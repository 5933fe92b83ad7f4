#pragma once

#include <vector>

#include "bozd/rational.hpp"

namespace bozd {

enum class TraceStop {
  kLevelDrop,    // Re(-ih) dropped by the requested amount (descent only)
  kEquilibrium,  // approached a pole or critical point
  kEscape,       // left the escape radius
  kBudget,       // step or arc-length budget exhausted
};

struct TraceOptions {
  double level_drop = 1.0;        // descent stop: drop of Re(-ih) from start
  double escape_radius = 50.0;
  double equilibrium_radius = 0.0;  // 0 = auto (1e-4 * scale)
  // Capture radius for critical-point termination; 0 = same as
  // equilibrium_radius. Descent rays ending on a stable manifold of another
  // saddle need a wider capture than the pole radius to stop reliably.
  double critical_capture_radius = 0.0;
  double max_arclength = 0.0;  // 0 = auto
  int max_steps = 40000;
  double rk_tol = 1e-9;
  // Known critical points, used for equilibrium detection where h' vanishes.
  std::vector<Complex> critical_points;
};

struct RawTrace {
  std::vector<Complex> z;
  std::vector<double> level;  // Re(-ih) relative to the start (starts at 0)
  TraceStop stop = TraceStop::kBudget;
};

// Integral curve of the renormalized level-curve field (the unit field along
// conj(h')), direction +1/-1. Re(-ih) is constant along the exact curve.
RawTrace trace_level_curve_raw(const RationalInitialData& data,
                               const LaxOleinikPoint& pt, Complex start,
                               int direction, const TraceOptions& opt);

// Steepest-descent ray leaving `saddle` at angle phi (must be one of the two
// descent arms). Re(-ih) decreases at unit rate in arc length.
RawTrace trace_descent_ray(const RationalInitialData& data,
                           const LaxOleinikPoint& pt, Complex saddle,
                           double phi, const TraceOptions& opt);

// Angle of one descent arm of the quadratic model at a simple saddle:
// -pi/4 - Arg(h''(saddle))/2; the other arm is this plus pi, the ascent
// arms are offset by pi/2. Throws DegenerateSaddle when |h''| is tiny.
double descent_angle(const RationalInitialData& data, const LaxOleinikPoint& pt,
                     Complex saddle);

// Spec-facing wrappers: polyline plus analytically continued h at the nodes.
struct TracedPath {
  std::vector<Complex> z;
  std::vector<Complex> h;  // continued along the chord polyline
  TraceStop stop = TraceStop::kBudget;
};

// Level curve through `start` (not an equilibrium); throws BudgetExceeded when
// the arc-length budget is hit, signaling possibly recurrent behavior.
TracedPath trace_level_curve(const RationalInitialData& data,
                             const LaxOleinikPoint& pt, Complex start,
                             int direction, const TraceOptions& opt = {});

// One of the four local steepest arms at a simple saddle: branch 0 and 2 are
// the two descent arms (traced with decreasing Re(-ih)), branch 1 and 3 the
// ascent arms (increasing). h at the saddle is taken from `h_saddle`.
TracedPath trace_steepest_descent(const RationalInitialData& data,
                                  const LaxOleinikPoint& pt, Complex saddle,
                                  Complex h_saddle, int branch,
                                  const TraceOptions& opt = {});

// Continue h along a chord polyline from a known value at the first node.
// Chords are subdivided so that quadrature of h' stays accurate near poles.
std::vector<Complex> continue_h_along(const RationalInitialData& data,
                                      const LaxOleinikPoint& pt,
                                      const std::vector<Complex>& nodes,
                                      Complex h_first);

// h at an arbitrary point, continued from the real axis (where the principal
// formula holds) along a pole-avoiding two-leg path.
Complex continue_h_from_real_axis(const RationalInitialData& data,
                                  const LaxOleinikPoint& pt, Complex z);

// Geometric thinning of a raw trace: keeps nodes by spacing, turning angle,
// level change, and pole clearance. Nodes listed in must_keep (exact values,
// e.g. saddle points the route passes through) are always retained.
std::vector<Complex> thin_polyline(const RationalInitialData& data,
                                   const RawTrace& trace, double level_quantum,
                                   const std::vector<Complex>& must_keep = {});

}  // namespace bozd
