#include "bozd/contours.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "bozd/quadrature.hpp"

namespace bozd {

namespace {

double level_drop_target(double epsilon, const SolverConfig& config) {
  return epsilon * std::log(1.0 / config.truncation);
}

double escape_radius(const RationalInitialData& data, const LaxOleinikPoint& pt,
                     double level_target) {
  double max_p = 0.0;
  for (const auto& p : data.poles) max_p = std::max(max_p, std::abs(p));
  const double base =
      10.0 * (1.0 + max_p + std::abs(pt.x) + pt.t * data.sup_abs_u0());
  // The quadratic part of h reaches the target drop at radius ~ sqrt(4 t L);
  // pad so that descent rays always terminate on level, not on escape.
  return 3.0 * base + std::sqrt(6.0 * pt.t * (level_target + 1.0)) + 10.0;
}

std::vector<Complex> all_critical_points(const BranchData& branches) {
  std::vector<Complex> out;
  for (double y : branches.real_roots) out.emplace_back(y, 0.0);
  for (const auto& z : branches.complex_roots) {
    out.push_back(z);
    out.push_back(std::conj(z));
  }
  return out;
}

// Routes one half of a saddle passage out to the far Gaussian region.
// Primitive descent rays are traced until they reach a pole, another critical
// point, or escape; whenever a ray falls into a pole valley whose ridge
// saddles still sit above the truncation floor, the route climbs back out
// over the highest such ridge and continues. When every ridge is below the
// floor the valley endpoint itself is admissible (the local exponent is
// integrable there and the neglected disk is below tolerance).
class DescentRouter {
 public:
  DescentRouter(const RationalInitialData& data, const LaxOleinikPoint& pt,
                const TraceOptions& base_opt, double epsilon,
                double level_target, double quad_tol)
      : data_(data),
        pt_(pt),
        base_opt_(base_opt),
        epsilon_(epsilon),
        target_(level_target),
        quad_tol_(quad_tol),
        scale_(data.scale() + std::abs(pt.x) + 1.0) {}

  // Critical points that routed rays may pass through exactly.
  const std::vector<Complex>& milestones() const {
    return base_opt_.critical_points;
  }

  // Stitched ray from `saddle` leaving at angle `phi`, ending in the far
  // field (or at an admissible valley endpoint).
  RawTrace route(Complex saddle, double phi) {
    std::vector<Complex> visited{saddle};
    RawTrace chain;
    chain.z.push_back(saddle);
    chain.level.push_back(0.0);
    extend(chain, saddle, phi, visited, 0);
    return chain;
  }

 private:
  struct PrimRay {
    RawTrace raw;
    enum class End { kSector, kPole, kCritical, kFail } end = End::kFail;
    Complex end_point{0.0, 0.0};
    Complex pole{0.0, 0.0};      // valid when end == kPole
    Complex residue{0.0, 0.0};   // residue of h' at that pole
    Complex critical{0.0, 0.0};  // valid when end == kCritical
  };

  const PrimRay& prim(Complex saddle, double phi) {
    const auto key = std::make_tuple(saddle.real(), saddle.imag(), phi);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    TraceOptions opt = base_opt_;
    opt.level_drop = 1e18;  // rays run to a pole, a saddle, or the far field
    opt.equilibrium_radius = 1e-9 * scale_;
    // Wide capture: a ray grazing a stable manifold otherwise crawls past the
    // saddle at vanishing speed; passing through it instead is an equally
    // valid contour.
    opt.critical_capture_radius = 1e-3 * scale_;
    opt.critical_points.clear();
    for (const auto& c : base_opt_.critical_points)
      if (std::abs(c - saddle) > 1e-9 * scale_) opt.critical_points.push_back(c);

    PrimRay ray;
    ray.raw = trace_descent_ray(data_, pt_, saddle, phi, opt);
    const Complex z_end = ray.raw.z.back();
    switch (ray.raw.stop) {
      case TraceStop::kEscape:
      case TraceStop::kLevelDrop:
        ray.end = PrimRay::End::kSector;
        break;
      case TraceStop::kBudget:
        ray.end = PrimRay::End::kFail;
        break;
      case TraceStop::kEquilibrium: {
        for (const auto& c : opt.critical_points) {
          if (std::abs(z_end - c) < 10.0 * opt.critical_capture_radius) {
            ray.end = PrimRay::End::kCritical;
            ray.critical = c;
          }
        }
        if (ray.end != PrimRay::End::kCritical) {
          double dist = std::numeric_limits<double>::infinity();
          for (size_t n = 0; n < data_.poles.size(); ++n) {
            if (std::abs(z_end - data_.poles[n]) < dist) {
              dist = std::abs(z_end - data_.poles[n]);
              ray.pole = data_.poles[n];
              ray.residue = data_.residues[n];
            }
            const Complex pc = std::conj(data_.poles[n]);
            if (std::abs(z_end - pc) < dist) {
              dist = std::abs(z_end - pc);
              ray.pole = pc;
              ray.residue = std::conj(data_.residues[n]);
            }
          }
          ray.end = PrimRay::End::kPole;
        }
        break;
      }
    }
    ray.end_point = z_end;
    return cache_.emplace(key, std::move(ray)).first->second;
  }

  // Principal-branch level estimate used only to rank ridge candidates.
  double level_estimate(Complex z) {
    if (std::abs(z.imag()) < 1e-12)
      return 0.0;  // real saddles carry the real-analytic h
    return eval_h_principal(data_, pt_, z).imag();
  }

  void append(RawTrace& chain, const RawTrace& piece, bool reversed,
              double rebase_to) {
    const size_t n = piece.z.size();
    if (n == 0) return;
    const double base = reversed ? piece.level.back() : piece.level.front();
    for (size_t i = 0; i < n; ++i) {
      const size_t idx = reversed ? n - 1 - i : i;
      chain.z.push_back(piece.z[idx]);
      chain.level.push_back(piece.level[idx] - base + rebase_to);
    }
  }

  // Copy of `piece` cut at the first node below `cut_level` (own level
  // scale). Deep valley passages are never integrated, and carrying the
  // continuation through |h'| ~ 1/r regions would only launder roundoff into
  // the phases of the ridge re-ascent.
  static RawTrace trim_below(const RawTrace& piece, double cut_level,
                             bool* trimmed) {
    RawTrace out;
    out.stop = piece.stop;
    *trimmed = false;
    for (size_t i = 0; i < piece.z.size(); ++i) {
      out.z.push_back(piece.z[i]);
      out.level.push_back(piece.level[i]);
      if (piece.level[i] < cut_level) {
        *trimmed = true;
        break;
      }
    }
    return out;
  }

  void connector_around(RawTrace& chain, Complex pole, Complex from,
                        Complex to) {
    // Small arc around the pole joining two near-pole ray endpoints; the
    // integrand is negligible here, the nodes only keep the continuation of
    // h well conditioned.
    const double r = std::max({std::abs(from - pole), std::abs(to - pole),
                               1e-10 * scale_});
    double a0 = std::arg(from - pole), a1 = std::arg(to - pole);
    double sweep = a1 - a0;
    while (sweep > M_PI) sweep -= 2.0 * M_PI;
    while (sweep < -M_PI) sweep += 2.0 * M_PI;
    const int steps = 6;
    for (int s = 1; s <= steps; ++s) {
      const double a = a0 + sweep * s / steps;
      chain.z.push_back(pole + r * std::polar(1.0, a));
      chain.level.push_back(chain.level.back());
    }
    chain.z.push_back(to);
    chain.level.push_back(chain.level.back());
  }

  void extend(RawTrace& chain, Complex saddle, double phi,
              std::vector<Complex>& visited, int depth) {
    if (depth > 8)
      throw ContourConstructionFailure("descent route exceeded depth limit");
    const PrimRay& ray = prim(saddle, phi);
    if (ray.end == PrimRay::End::kFail)
      throw BudgetExceeded("descent ray from saddle " +
                           std::to_string(saddle.real()) + "+" +
                           std::to_string(saddle.imag()) + "i");
    const double entry_level = chain.level.back();
    // Valley cut depth: comfortably below the truncation floor, padded by the
    // level swing one encirclement of the pole can cause.
    const double pole_re =
        ray.end == PrimRay::End::kPole ? std::abs(ray.residue.real()) : 0.0;
    const double cut_row =
        -(target_ + 2.0 + 2.0 * M_PI * pole_re);  // row-relative

    if (ray.end == PrimRay::End::kSector) {
      bool trimmed = false;
      const RawTrace cut =
          trim_below(ray.raw, cut_row - entry_level, &trimmed);
      append(chain, cut, /*reversed=*/false, entry_level);
      chain.stop = ray.raw.stop;
      return;
    }
    if (ray.end == PrimRay::End::kCritical)
      append(chain, ray.raw, /*reversed=*/false, entry_level);
    chain.stop = ray.raw.stop;

    if (ray.end == PrimRay::End::kCritical) {
      // Landed on a stable manifold: pass through along a descent arm,
      // turning left relative to the incoming direction.
      const Complex c = ray.critical;
      const size_t n = ray.raw.z.size();
      const Complex incoming =
          (n >= 2) ? (ray.raw.z[n - 1] - ray.raw.z[n - 2]) /
                         std::abs(ray.raw.z[n - 1] - ray.raw.z[n - 2])
                   : std::polar(1.0, phi);
      const double arm0 = descent_angle(data_, pt_, c);
      double best_phi = arm0;
      double best_cross = -2.0;
      for (double cand : {arm0, arm0 + M_PI}) {
        const double cross =
            (std::conj(incoming) * std::polar(1.0, cand)).imag();
        if (cross > best_cross) {
          best_cross = cross;
          best_phi = cand;
        }
      }
      chain.z.push_back(c);
      chain.level.push_back(chain.level.back());
      visited.push_back(c);
      extend(chain, c, best_phi, visited, depth + 1);
      return;
    }

    // Pole valley: cut the dive at the truncation depth before appending.
    bool in_trimmed = false;
    const RawTrace in_cut =
        trim_below(ray.raw, cut_row - entry_level, &in_trimmed);
    append(chain, in_cut, /*reversed=*/false, entry_level);

    // Ridge saddles whose own descent rays feed this pole and whose level is
    // above the truncation floor must be crossed on the way out; absent any,
    // the valley endpoint is admissible if the exponent is integrable and
    // the neglected disk is negligible.
    const Complex pole = ray.pole;
    const double row_floor = -target_ - 2.0;  // margin on the level estimate
    const double saddle_level_est = level_estimate(saddle) - 0.0;
    struct Candidate {
      Complex saddle;
      double arm_in = 0.0;
      double level = 0.0;
    };
    std::vector<Candidate> candidates;
    for (const auto& c : base_opt_.critical_points) {
      bool seen = false;
      for (const auto& v : visited)
        if (std::abs(v - c) < 1e-9 * scale_) seen = true;
      if (seen) continue;
      const double lvl = level_estimate(c) - saddle_level_est + entry_level;
      if (lvl < row_floor || lvl > 1e-9) continue;
      for (double cand_phi_base : {0.0, M_PI}) {
        double arm;
        try {
          arm = descent_angle(data_, pt_, c) + cand_phi_base;
        } catch (const DegenerateSaddle&) {
          continue;
        }
        const PrimRay& feeder = prim(c, arm);
        if (feeder.end == PrimRay::End::kPole &&
            std::abs(feeder.pole - pole) < 1e-9 * scale_) {
          candidates.push_back({c, arm, lvl});
          break;
        }
      }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) {
                return a.level > b.level;
              });

    for (const auto& cand : candidates) {
      const PrimRay& feeder = prim(cand.saddle, cand.arm_in);
      // The climb out is the feeder reversed, cut at the same depth.
      bool out_trimmed = false;
      const RawTrace out_cut =
          trim_below(feeder.raw, cut_row - cand.level, &out_trimmed);
      // Exit along the opposite arm of the ridge saddle.
      const double out_arm = cand.arm_in + M_PI;
      connector_around(chain, pole, chain.z.back(), out_cut.z.back());
      append(chain, out_cut, /*reversed=*/true, chain.level.back());
      visited.push_back(cand.saddle);
      extend(chain, cand.saddle, out_arm, visited, depth + 1);
      return;
    }

    // No ridge above the floor: admissible endpoint?
    const double nu = ray.residue.imag() / epsilon_;
    const double dist = std::abs(chain.z.back() - pole);
    const double neglected = std::exp(chain.level.back() / epsilon_) * dist /
                             std::max(1.0 + nu, 0.1);
    if (in_trimmed) return;  // already below the truncation depth
    if (nu > -0.5 && neglected <= 1e2 * quad_tol_) return;
    throw ContourConstructionFailure(
        "descent route trapped in a pole valley near saddle " +
        std::to_string(saddle.real()) + "+" + std::to_string(saddle.imag()) +
        "i (level " + std::to_string(chain.level.back()) + ")");
  }

  const RationalInitialData& data_;
  const LaxOleinikPoint& pt_;
  const TraceOptions& base_opt_;
  double epsilon_, target_, quad_tol_, scale_;
  std::map<std::tuple<double, double, double>, PrimRay> cache_;
};

// Build the two-sided steepest-descent passage over one saddle. The forward
// arm is chosen with positive real direction for real saddles so that W_0 and
// the pair contours share orientation.
SaddleArc build_saddle_arc(const RationalInitialData& data,
                           const LaxOleinikPoint& pt, Complex saddle,
                           Complex h_saddle, double level_target,
                           DescentRouter* router) {
  const double phi0 = descent_angle(data, pt, saddle);
  double phi_fwd = phi0;
  if (std::cos(phi0) < 0.0) phi_fwd = phi0 + M_PI;

  RawTrace fwd = router->route(saddle, phi_fwd);
  RawTrace bwd = router->route(saddle, phi_fwd + M_PI);

  // Saddles a route passes through are exact nodes and must survive
  // thinning: cutting such a corner replaces an exact saddle passage by a
  // near-copy and degrades the row system toward degeneracy.
  const auto quantum = level_target / 16.0;
  std::vector<Complex> fporto =
      thin_polyline(data, fwd, quantum, router->milestones());
  std::vector<Complex> bline =
      thin_polyline(data, bwd, quantum, router->milestones());

  SaddleArc arc;
  arc.saddle = saddle;
  arc.h_saddle = h_saddle;
  arc.z.reserve(bline.size() + fporto.size() - 1);
  for (auto it = bline.rbegin(); it != bline.rend(); ++it) arc.z.push_back(*it);
  for (size_t i = 1; i < fporto.size(); ++i) arc.z.push_back(fporto[i]);

  // The saddle is a node of both rays; continuation anchored there.
  const auto anchor =
      std::find_if(arc.z.begin(), arc.z.end(),
                   [&](Complex v) { return v == saddle; });
  const size_t idx = static_cast<size_t>(anchor - arc.z.begin());
  std::vector<Complex> back_part(arc.z.begin(), arc.z.begin() + idx + 1);
  std::reverse(back_part.begin(), back_part.end());
  const auto h_back = continue_h_along(data, pt, back_part, h_saddle);
  std::vector<Complex> fwd_part(arc.z.begin() + idx, arc.z.end());
  const auto h_fwd = continue_h_along(data, pt, fwd_part, h_saddle);
  arc.h.resize(arc.z.size());
  for (size_t i = 0; i <= idx; ++i) arc.h[idx - i] = h_back[i];
  for (size_t i = idx; i < arc.z.size(); ++i) arc.h[i] = h_fwd[i - idx];
  return arc;
}

SaddleArc arc_from_manual(const RationalInitialData& data,
                          const LaxOleinikPoint& pt, const ManualPath& manual) {
  if (manual.nodes.size() < 2)
    throw ConfigError("manual path needs at least two nodes");
  SaddleArc arc;
  arc.z = manual.nodes;
  const Complex h0 = continue_h_from_real_axis(data, pt, manual.nodes.front());
  arc.h = continue_h_along(data, pt, arc.z, h0);
  size_t best = 0;
  for (size_t i = 1; i < arc.z.size(); ++i)
    if (arc.h[i].imag() > arc.h[best].imag()) best = i;
  arc.saddle = arc.z[best];
  arc.h_saddle = arc.h[best];
  return arc;
}

}  // namespace

std::vector<ContourPath> build_contours(const RationalInitialData& data,
                                        const LaxOleinikPoint& pt,
                                        const BranchData& branches,
                                        double epsilon,
                                        const SolverConfig& config) {
  const double target = level_drop_target(epsilon, config);
  TraceOptions opt;
  opt.level_drop = target;
  opt.escape_radius = escape_radius(data, pt, target);
  opt.critical_points = all_critical_points(branches);

  const int J = branches.J;
  const int N = data.pair_count();
  DescentRouter router(data, pt, opt, epsilon, target, config.quad_tol);

  // Real-saddle passages, ordered left to right as W_0 traverses them. All
  // real saddles carry the real-analytic h, so their levels are exactly 0.
  std::vector<SaddleArc> real_arcs(branches.real_roots.size());
  for (size_t k = 0; k < branches.real_roots.size(); ++k) {
    const double y = branches.real_roots[k];
    real_arcs[k] = build_saddle_arc(data, pt, Complex(y, 0.0),
                                    Complex(eval_h_real(data, pt, y), 0.0),
                                    target, &router);
  }

  std::vector<ContourPath> paths;
  paths.reserve(N + 1);

  ContourPath w0;
  w0.role = ContourRole::kW0;
  w0.index = 0;
  for (auto it = real_arcs.rbegin(); it != real_arcs.rend(); ++it)
    w0.arcs.push_back(*it);
  for (double y : branches.real_roots) w0.dominant_saddles.emplace_back(y, 0.0);
  paths.push_back(std::move(w0));

  // One contour per consecutive real pair (y_{2j}, y_{2j-1}).
  for (int j = 1; j <= J; ++j) {
    ContourPath wj;
    wj.role = ContourRole::kWn;
    wj.index = j;
    wj.arcs.push_back(real_arcs[2 * j]);      // left saddle y_{2j}
    wj.arcs.push_back(real_arcs[2 * j - 1]);  // right saddle y_{2j-1}
    wj.dominant_saddles.emplace_back(branches.real_roots[2 * j - 1], 0.0);
    wj.dominant_saddles.emplace_back(branches.real_roots[2 * j], 0.0);
    paths.push_back(std::move(wj));
  }

  // One contour per upper half-plane saddle.
  for (size_t m = 0; m < branches.complex_roots.size(); ++m) {
    const Complex zsad = branches.complex_roots[m];
    ContourPath wm;
    wm.role = ContourRole::kWn;
    wm.index = J + 1 + static_cast<int>(m);
    const Complex h_sad = continue_h_from_real_axis(data, pt, zsad);
    wm.arcs.push_back(
        build_saddle_arc(data, pt, zsad, h_sad, target, &router));
    wm.dominant_saddles.push_back(zsad);
    paths.push_back(std::move(wm));
  }

  // Manual overrides replace auto-built paths wholesale.
  if (config.manual_paths) {
    for (const auto& [index, manual] : *config.manual_paths) {
      if (index < 0 || index > N)
        throw ConfigError("manual path index out of range");
      ContourPath replacement;
      replacement.role = index == 0 ? ContourRole::kW0 : ContourRole::kWn;
      replacement.index = index;
      replacement.arcs.push_back(arc_from_manual(data, pt, manual));
      replacement.dominant_saddles = paths[index].dominant_saddles;
      paths[index] = std::move(replacement);
    }
  }

  for (const auto& path : paths) {
    const auto report = validate_dominance(data, pt, path, config.delta);
    if (!report.ok)
      throw ContourConstructionFailure("dominance validation failed on W_" +
                                       std::to_string(path.index) + ": " +
                                       report.detail);
  }
  return paths;
}

namespace {

// Critical points of h at (t,x) with their local neighborhood radii at the
// delta level offset of the quadratic model.
struct CriticalNeighborhood {
  Complex z;
  double radius;
};

std::vector<CriticalNeighborhood> critical_neighborhoods(
    const RationalInitialData& data, const LaxOleinikPoint& pt, double delta) {
  std::vector<Complex> points;
  try {
    const BranchData b = solve_branches(data, pt);
    for (double y : b.real_roots) points.emplace_back(y, 0.0);
    for (const auto& z : b.complex_roots) {
      points.push_back(z);
      points.push_back(std::conj(z));
    }
  } catch (const Error&) {
  }
  std::vector<CriticalNeighborhood> out;
  for (const auto& c : points) {
    double dmin = std::numeric_limits<double>::infinity();
    for (const auto& other : points)
      if (std::abs(other - c) > 1e-12)
        dmin = std::min(dmin, std::abs(other - c));
    for (const auto& p : data.poles) {
      dmin = std::min(dmin, std::abs(c - p));
      dmin = std::min(dmin, std::abs(c - std::conj(p)));
    }
    if (!std::isfinite(dmin)) dmin = 1.0;
    out.push_back({c, 1.25 * dmin * std::sqrt(2.0 * delta)});
  }
  return out;
}

}  // namespace

DominanceReport validate_dominance(const RationalInitialData& data,
                                   const LaxOleinikPoint& pt,
                                   const ContourPath& path, double delta) {
  DominanceReport report;
  double path_max = -std::numeric_limits<double>::infinity();
  for (const auto& arc : path.arcs)
    path_max = std::max(path_max, arc.level());

  const auto neighborhoods = critical_neighborhoods(data, pt, delta);
  auto near_any_critical = [&](Complex z) {
    for (const auto& nb : neighborhoods)
      if (std::abs(z - nb.z) <= nb.radius) return true;
    return false;
  };
  auto near_dominant = [&](Complex z) {
    for (const auto& s : path.dominant_saddles)
      for (const auto& nb : neighborhoods)
        if (std::abs(nb.z - s) < 1e-9 && std::abs(z - nb.z) <= nb.radius)
          return true;
    return false;
  };

  for (const auto& arc : path.arcs) {
    const double h2 = std::abs(eval_h_second(data, pt, arc.saddle));
    double dmin = std::numeric_limits<double>::infinity();
    for (const auto& nb : neighborhoods)
      if (std::abs(nb.z - arc.saddle) > 1e-12)
        dmin = std::min(dmin, std::abs(nb.z - arc.saddle));
    for (const auto& p : data.poles) {
      dmin = std::min(dmin, std::abs(arc.saddle - p));
      dmin = std::min(dmin, std::abs(arc.saddle - std::conj(p)));
    }
    if (!std::isfinite(dmin)) dmin = 1.0;
    const double delta_level = delta * h2 * dmin * dmin;
    const double high = path_max - 0.5 * delta_level;

    // The path maximum is attained only inside dominant-saddle neighborhoods,
    // and the level may exceed max - delta/2 only on contiguous segments that
    // pass a critical point (the saddle passages and ridge crossings).
    size_t i = 0;
    while (i < arc.z.size()) {
      const double level = arc.h[i].imag();
      if (level > path_max + 1e-9 * (1.0 + std::abs(path_max)) &&
          !near_dominant(arc.z[i])) {
        report.ok = false;
        report.worst_margin = std::max(report.worst_margin, level - path_max);
        report.detail = "node above saddle level off-neighborhood";
      }
      if (level <= high) {
        ++i;
        continue;
      }
      // Maximal high run starting at i.
      size_t j = i;
      bool passes_critical = false;
      while (j < arc.z.size() && arc.h[j].imag() > high) {
        if (near_any_critical(arc.z[j])) passes_critical = true;
        ++j;
      }
      if (!passes_critical) {
        double worst = high;
        for (size_t k = i; k < j; ++k)
          worst = std::max(worst, arc.h[k].imag());
        report.ok = false;
        report.worst_margin = std::max(report.worst_margin, worst - high);
        report.detail = "high segment without a saddle passage";
      }
      i = j;
    }
  }
  return report;
}

double continuation_residual(const RationalInitialData& data,
                             const LaxOleinikPoint& pt,
                             const ContourPath& path) {
  double worst = 0.0;
  auto hp = [&](Complex z) { return eval_h_prime(data, pt, z); };
  for (const auto& arc : path.arcs) {
    for (size_t k = 1; k < arc.z.size(); ++k) {
      const Complex a = arc.z[k - 1], b = arc.z[k];
      const Complex dir = b - a;
      // Deep-valley chords evaluate h' at magnitudes where double roundoff
      // exceeds the residual target; the integrand weight there is far below
      // the truncation floor, so the check is restricted to chords the
      // quadrature can actually see.
      const double noise_ceiling =
          std::max(std::abs(hp(a)), std::abs(hp(b))) * std::abs(dir) * 1e-15;
      if (noise_ceiling > 1e-11) continue;
      const Complex dh = dir * integrate_adaptive(
                                   [&](double s) { return hp(a + s * dir); },
                                   0.0, 1.0, 1e-12, 1e-14, 38);
      const double res = std::abs((arc.h[k] - arc.h[k - 1]) - dh) /
                         (1.0 + std::abs(dh));
      worst = std::max(worst, res);
    }
  }
  return worst;
}

ContourPath perturb_path(const RationalInitialData& data,
                         const LaxOleinikPoint& pt, const ContourPath& path,
                         double amplitude, unsigned seed) {
  ContourPath out = path;
  unsigned state = seed * 2654435761u + 12345u;
  auto next_unit = [&state]() {
    state = state * 1664525u + 1013904223u;
    return (state >> 8) * (1.0 / 16777216.0) - 0.5;
  };
  for (auto& arc : out.arcs) {
    size_t anchor = 0;
    for (size_t i = 0; i < arc.z.size(); ++i)
      if (arc.z[i] == arc.saddle) anchor = i;
    for (size_t i = 0; i < arc.z.size(); ++i) {
      if (i == anchor) continue;
      // A legitimate Cauchy deformation stays within the analyticity domain:
      // near-pole nodes move proportionally less.
      double clearance = std::numeric_limits<double>::infinity();
      for (const auto& p : data.poles) {
        clearance = std::min(clearance, std::abs(arc.z[i] - p));
        clearance = std::min(clearance, std::abs(arc.z[i] - std::conj(p)));
      }
      const double mag =
          std::min(amplitude * (1.0 + std::abs(arc.z[i])), 0.25 * clearance);
      arc.z[i] += Complex(next_unit() * mag, next_unit() * mag);
    }
    std::vector<Complex> back(arc.z.begin(), arc.z.begin() + anchor + 1);
    std::reverse(back.begin(), back.end());
    const auto h_back = continue_h_along(data, pt, back, arc.h_saddle);
    std::vector<Complex> fwd(arc.z.begin() + anchor, arc.z.end());
    const auto h_fwd = continue_h_along(data, pt, fwd, arc.h_saddle);
    for (size_t i = 0; i <= anchor; ++i) arc.h[anchor - i] = h_back[i];
    for (size_t i = anchor; i < arc.z.size(); ++i) arc.h[i] = h_fwd[i - anchor];
  }
  return out;
}

}  // namespace bozd
