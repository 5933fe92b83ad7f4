#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bozd/branches.hpp"
#include "bozd/stokes.hpp"

namespace bozd {

enum class ContourRole { kW0, kWn };

// One local steepest-descent passage over a saddle: the polyline runs through
// the saddle from one valley to the other, with h analytically continued along
// the chords from the saddle value.
struct SaddleArc {
  Complex saddle;
  Complex h_saddle;
  std::vector<Complex> z;  // polyline, saddle included as an interior node
  std::vector<Complex> h;  // continued h at the nodes
  double level() const { return h_saddle.imag(); }  // Re(-ih) at the saddle
};

// Integration contour realized as saddle-local arcs; the connecting pieces of
// the exact contour sit below the truncation level and are omitted from the
// quadrature. Rows of the solution determinants map 1-1 onto these paths.
struct ContourPath {
  ContourRole role = ContourRole::kWn;
  int index = 0;  // 0 for W_0, n = 1..N otherwise
  std::vector<SaddleArc> arcs;
  std::vector<Complex> dominant_saddles;
};

struct ManualPath {
  std::vector<Complex> nodes;  // user-supplied polyline, h continued internally
};

// Per-contour manual overrides keyed by contour index (0..N).
using ManualPaths = std::map<int, ManualPath>;

struct SolverConfig {
  double quad_tol = 1e-10;    // relative quadrature tolerance
  double truncation = 1e-16;  // relative integrand floor
  double delta = 0.05;        // dominance-validation level offset, |h''|-scaled
  double tau_real = 1e-9;
  double tau_caustic = 1e-6;
  std::optional<ManualPaths> manual_paths;
};

struct DominanceReport {
  bool ok = true;
  double worst_margin = 0.0;  // most violating excess above (level - delta/2)
  std::string detail;
};

// Steepest-descent contour system W_0..W_N for one (t,x): W_0 passes all real
// saddles left to right; each remaining path carries either one complex
// saddle or one consecutive real pair (y_{2j}, y_{2j-1}). Every returned path
// has passed dominance validation. Throws ContourConstructionFailure with a
// diagnostic when tracing cannot complete and no manual override is given.
std::vector<ContourPath> build_contours(const RationalInitialData& data,
                                        const LaxOleinikPoint& pt,
                                        const BranchData& branches,
                                        double epsilon,
                                        const SolverConfig& config = {});

// Runtime check of the steepest-descent contract: along the path, Re(-ih)
// reaches its maximum only inside the scaled neighborhoods of the intended
// saddles and sits at least delta/2 below elsewhere.
DominanceReport validate_dominance(const RationalInitialData& data,
                                   const LaxOleinikPoint& pt,
                                   const ContourPath& path, double delta);

// Continuation residual check: recompute h along every chord with a finer
// rule and report the largest mismatch.
double continuation_residual(const RationalInitialData& data,
                             const LaxOleinikPoint& pt, const ContourPath& path);

// Deterministically perturb interior nodes by `amplitude * (1+|z|)` and
// re-continue h from each arc anchor; used by the contour-independence check.
ContourPath perturb_path(const RationalInitialData& data,
                         const LaxOleinikPoint& pt, const ContourPath& path,
                         double amplitude, unsigned seed);

}  // namespace bozd
