#include "bozd/stokes.hpp"

#include <algorithm>
#include <cmath>

#include "bozd/quadrature.hpp"

namespace bozd {

namespace {

double min_pole_distance(const RationalInitialData& data, Complex z) {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& p : data.poles) {
    d = std::min(d, std::abs(z - p));
    d = std::min(d, std::abs(z - std::conj(p)));
  }
  return d;
}

// Unit tangent fields. Level curves follow conj(h'); descent follows
// -i conj(h') (so d Re(-ih)/ds = -|h'|).
enum class FieldKind { kLevel, kDescent };

struct FieldEval {
  Complex dir;     // unit tangent
  double hp_abs;   // |h'|
  Complex hp;      // h'
};

FieldEval eval_field(const RationalInitialData& data, const LaxOleinikPoint& pt,
                     Complex z, FieldKind kind, int direction) {
  FieldEval out;
  out.hp = eval_h_prime(data, pt, z);
  out.hp_abs = std::abs(out.hp);
  if (out.hp_abs == 0.0) {
    out.dir = Complex(0.0, 0.0);
    return out;
  }
  Complex t = std::conj(out.hp) / out.hp_abs;
  if (kind == FieldKind::kDescent) t *= Complex(0.0, -1.0);
  out.dir = static_cast<double>(direction) * t;
  return out;
}

// Dormand-Prince 5(4) on z with dz/ds the unit field; h is accumulated by
// Gauss-Legendre over each accepted chord, which keeps the level bookkeeping
// as accurate as the final polyline continuation.
struct DPState {
  Complex z, h;
};

RawTrace trace_field(const RationalInitialData& data, const LaxOleinikPoint& pt,
                     Complex start, FieldKind kind, int direction,
                     const TraceOptions& opt) {
  static const double A[6][6] = {
      {},
      {1.0 / 5},
      {3.0 / 40, 9.0 / 40},
      {44.0 / 45, -56.0 / 15, 32.0 / 9},
      {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
      {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176,
       -5103.0 / 18656},
  };
  static const double B5[7] = {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192,
                               -2187.0 / 6784, 11.0 / 84, 0.0};
  static const double B4[7] = {5179.0 / 57600,   0.0,        7571.0 / 16695,
                               393.0 / 640,      -92097.0 / 339200,
                               187.0 / 2100,     1.0 / 40};

  const double scale = data.scale() + std::abs(pt.x) + std::abs(start);
  const double eq_radius =
      opt.equilibrium_radius > 0.0 ? opt.equilibrium_radius : 1e-4 * scale;
  const double capture = opt.critical_capture_radius > 0.0
                             ? opt.critical_capture_radius
                             : eq_radius;
  const double max_len =
      opt.max_arclength > 0.0 ? opt.max_arclength : 400.0 * scale;

  RawTrace out;
  out.z.push_back(start);
  out.level.push_back(0.0);

  DPState y{start, Complex(0.0, 0.0)};  // h tracked relative to the start
  double s_len = 0.0;
  double hstep = 1e-3 * scale;

  auto rhs = [&](Complex z, bool* singular) -> Complex {
    const FieldEval fe = eval_field(data, pt, z, kind, direction);
    if (fe.hp_abs < 1e-15 * scale) {
      *singular = true;
      return Complex(0, 0);
    }
    return fe.dir;
  };
  auto hp_fn = [&](Complex z) { return eval_h_prime(data, pt, z); };

  for (int step = 0; step < opt.max_steps; ++step) {
    // Stop conditions evaluated at the current node.
    const double pole_d = min_pole_distance(data, y.z);
    if (pole_d < eq_radius) {
      out.stop = TraceStop::kEquilibrium;
      return out;
    }
    for (const auto& c : opt.critical_points) {
      if (std::abs(y.z - c) < capture && s_len > 4.0 * capture) {
        out.stop = TraceStop::kEquilibrium;
        return out;
      }
    }
    if (std::abs(y.z) > opt.escape_radius) {
      out.stop = TraceStop::kEscape;
      return out;
    }
    // Re(-ih) equals Im h up to the start offset; with the reversed field the
    // same test catches the symmetric rise of the ascent arms.
    if (kind == FieldKind::kDescent &&
        direction * y.h.imag() <= -opt.level_drop) {
      out.stop = TraceStop::kLevelDrop;
      return out;
    }
    if (s_len > max_len) {
      out.stop = TraceStop::kBudget;
      return out;
    }

    // Cap the step by pole clearance and by per-chord level change. The floor
    // sits far below the equilibrium radius so the final approach to a pole
    // resolves instead of orbiting the stop ring.
    double cap = 0.5 * pole_d;
    if (kind == FieldKind::kDescent) {
      const FieldEval fe = eval_field(data, pt, y.z, kind, direction);
      if (fe.hp_abs > 0.0)
        cap = std::min(cap, 0.12 * opt.level_drop / fe.hp_abs);
    }
    hstep = std::min(hstep, std::max(cap, 1e-14 * scale));

    bool accepted = false;
    Complex znew = y.z;
    for (int attempt = 0; attempt < 40 && !accepted; ++attempt) {
      bool singular = false;
      Complex k[7];
      k[0] = rhs(y.z, &singular);
      for (int i = 1; i < 6 && !singular; ++i) {
        Complex zi = y.z;
        for (int j = 0; j < i; ++j) zi += hstep * A[i][j] * k[j];
        k[i] = rhs(zi, &singular);
      }
      if (singular) {
        out.stop = TraceStop::kEquilibrium;
        return out;
      }
      Complex z5 = y.z, z4 = y.z;
      for (int i = 0; i < 6; ++i) {
        z5 += hstep * B5[i] * k[i];
        z4 += hstep * B4[i] * k[i];
      }
      {
        bool singular7 = false;
        k[6] = rhs(z5, &singular7);
        if (!singular7) z4 += hstep * B4[6] * k[6];
      }
      const double err = std::abs(z5 - z4) / (opt.rk_tol * (1.0 + std::abs(z5)));
      if (err <= 1.0) {
        accepted = true;
        s_len += hstep;
        znew = z5;
        hstep *= std::clamp(0.9 * std::pow(std::max(err, 1e-10), -0.2), 1.0, 4.0);
      } else {
        hstep *= std::clamp(0.9 * std::pow(err, -0.2), 0.1, 0.9);
      }
    }
    if (!accepted) {
      out.stop = TraceStop::kBudget;
      return out;
    }
    y.h += integrate_segment(hp_fn, y.z, znew, 8);
    y.z = znew;
    // Newton projection back onto the conserved quantity: level curves keep
    // Im h, gradient curves keep Re h (both relative to the start).
    for (int proj = 0; proj < 2; ++proj) {
      const FieldEval fe = eval_field(data, pt, y.z, kind, direction);
      if (!(fe.hp_abs > 1e-12)) break;
      Complex dz(0.0, 0.0);
      if (kind == FieldKind::kLevel) {
        const double e = y.h.imag();
        dz = Complex(0.0, -1.0) * std::conj(fe.hp) *
             (e / (fe.hp_abs * fe.hp_abs));
      } else {
        const double e = y.h.real();
        dz = -std::conj(fe.hp) * (e / (fe.hp_abs * fe.hp_abs));
      }
      if (std::abs(dz) < 0.5 * hstep &&
          std::abs(dz) < 0.1 * min_pole_distance(data, y.z)) {
        y.h += fe.hp * dz;
        y.z += dz;
      } else {
        break;
      }
    }
    out.z.push_back(y.z);
    out.level.push_back(y.h.imag());  // Re(-ih) change from start
  }
  out.stop = TraceStop::kBudget;
  return out;
}

}  // namespace

RawTrace trace_level_curve_raw(const RationalInitialData& data,
                               const LaxOleinikPoint& pt, Complex start,
                               int direction, const TraceOptions& opt) {
  return trace_field(data, pt, start, FieldKind::kLevel, direction, opt);
}

double descent_angle(const RationalInitialData& data, const LaxOleinikPoint& pt,
                     Complex saddle) {
  const Complex h2 = eval_h_second(data, pt, saddle);
  if (std::abs(h2) < 1e-8 * (1.0 / (2.0 * pt.t)))
    throw DegenerateSaddle("|h''| = " + std::to_string(std::abs(h2)));
  return -M_PI / 4.0 - 0.5 * std::arg(h2);
}

RawTrace trace_descent_ray(const RationalInitialData& data,
                           const LaxOleinikPoint& pt, Complex saddle,
                           double phi, const TraceOptions& opt) {
  const double scale = data.scale() + std::abs(saddle) + 1.0;
  const Complex seed = saddle + 1e-5 * scale * std::polar(1.0, phi);
  RawTrace t = trace_field(data, pt, seed, FieldKind::kDescent, +1, opt);
  // Prepend the saddle itself; its level is above the seed's by the tiny
  // quadratic offset, which the caller re-anchors anyway.
  t.z.insert(t.z.begin(), saddle);
  t.level.insert(t.level.begin(), 0.0);
  return t;
}

std::vector<Complex> thin_polyline(const RationalInitialData& data,
                                   const RawTrace& trace, double level_quantum,
                                   const std::vector<Complex>& must_keep) {
  std::vector<Complex> kept;
  if (trace.z.empty()) return kept;
  kept.push_back(trace.z.front());
  double kept_level = trace.level.front();
  Complex last_dir(0.0, 0.0);
  for (size_t i = 1; i + 1 < trace.z.size(); ++i) {
    const Complex prev = kept.back();
    const Complex cand = trace.z[i];
    for (const auto& m : must_keep) {
      if (cand == m) {
        kept.push_back(cand);
        kept_level = trace.level[i];
        last_dir = Complex(0.0, 0.0);
        break;
      }
    }
    if (!kept.empty() && kept.back() == cand) continue;
    const double moved = std::abs(cand - prev);
    if (moved == 0.0) continue;
    // Chord length stays well under the pole clearance at both ends so that
    // straight chords cannot cut across a pole.
    const double clearance =
        std::min(min_pole_distance(data, cand), min_pole_distance(data, prev));
    const Complex dir = (cand - prev) / moved;
    const double turn =
        (last_dir == Complex(0.0, 0.0)) ? 1.0 : std::abs(dir - last_dir);
    const bool spacing = moved > 0.35 * std::max(clearance, 1e-12);
    const bool turning = turn > 0.15 && moved > 0.02 * clearance;
    const bool leveled =
        std::abs(trace.level[i] - kept_level) > level_quantum;
    if (spacing || turning || leveled) {
      kept.push_back(cand);
      kept_level = trace.level[i];
      last_dir = dir;
    }
  }
  kept.push_back(trace.z.back());
  return kept;
}

namespace {

// Integral of h' over a chord, recursively bisected until each piece is
// short against its own pole clearance.
Complex chord_dh(const RationalInitialData& data, const LaxOleinikPoint& pt,
                 Complex a, Complex b, int depth) {
  const double len = std::abs(b - a);
  const double clearance =
      std::min(min_pole_distance(data, a), min_pole_distance(data, b));
  auto hp = [&](Complex z) { return eval_h_prime(data, pt, z); };
  if (depth >= 42 || len <= 0.5 * clearance)
    return integrate_segment(hp, a, b, 16);
  const Complex m = 0.5 * (a + b);
  return chord_dh(data, pt, a, m, depth + 1) +
         chord_dh(data, pt, m, b, depth + 1);
}

}  // namespace

std::vector<Complex> continue_h_along(const RationalInitialData& data,
                                      const LaxOleinikPoint& pt,
                                      const std::vector<Complex>& nodes,
                                      Complex h_first) {
  std::vector<Complex> h(nodes.size());
  if (nodes.empty()) return h;
  h[0] = h_first;
  for (size_t k = 1; k < nodes.size(); ++k)
    h[k] = h[k - 1] + chord_dh(data, pt, nodes[k - 1], nodes[k], 0);
  return h;
}

Complex continue_h_from_real_axis(const RationalInitialData& data,
                                  const LaxOleinikPoint& pt, Complex z) {
  if (z.imag() == 0.0) return eval_h_real(data, pt, z.real());
  double min_im = std::numeric_limits<double>::infinity();
  for (const auto& p : data.poles) min_im = std::min(min_im, p.imag());
  // The final approach cannot clear the poles better than the target itself.
  const double clearance =
      std::min(0.2 * std::min(min_im, 1.0), 0.45 * min_pole_distance(data, z));

  // Pick a vertical leg [x_a, x_a + i Im(z)] staying clear of poles, then a
  // horizontal leg across to z. Candidates fan out from Re(z).
  const double s = data.scale();
  double x_a = z.real();
  bool found = false;
  for (int k = 0; k <= 80 && !found; ++k) {
    for (int sign : {+1, -1}) {
      const double cand = z.real() + sign * 0.25 * s * k;
      double d = std::numeric_limits<double>::infinity();
      for (const auto& p : data.poles) {
        for (const Complex pole : {p, std::conj(p)}) {
          // Distance from the vertical segment to the pole.
          const double yy =
              std::clamp(pole.imag(), std::min(0.0, z.imag()),
                         std::max(0.0, z.imag()));
          d = std::min(d, std::abs(Complex(cand, yy) - pole));
          // Distance from the horizontal leg at height Im(z).
          const double xx = std::clamp(pole.real(), std::min(cand, z.real()),
                                       std::max(cand, z.real()));
          d = std::min(d, std::abs(Complex(xx, z.imag()) - pole));
        }
      }
      if (d > clearance) {
        x_a = cand;
        found = true;
        break;
      }
      if (k == 0) break;  // first iteration tries Re(z) once
    }
  }
  if (!found)
    throw ContourConstructionFailure(
        "no pole-free continuation path from the real axis");

  const Complex corner(x_a, z.imag());
  std::vector<Complex> path{Complex(x_a, 0.0), corner, z};
  const Complex h0 = eval_h_real(data, pt, x_a);
  return continue_h_along(data, pt, path, h0).back();
}

TracedPath trace_level_curve(const RationalInitialData& data,
                             const LaxOleinikPoint& pt, Complex start,
                             int direction, const TraceOptions& opt) {
  RawTrace raw = trace_level_curve_raw(data, pt, start, direction, opt);
  if (raw.stop == TraceStop::kBudget)
    throw BudgetExceeded("level curve from " + std::to_string(start.real()) +
                         "+" + std::to_string(start.imag()) + "i");
  TracedPath out;
  out.z = thin_polyline(data, raw, 1e9);  // level never moves on level curves
  const Complex h0 = continue_h_from_real_axis(data, pt, start);
  out.h = continue_h_along(data, pt, out.z, h0);
  out.stop = raw.stop;
  return out;
}

TracedPath trace_steepest_descent(const RationalInitialData& data,
                                  const LaxOleinikPoint& pt, Complex saddle,
                                  Complex h_saddle, int branch,
                                  const TraceOptions& opt) {
  const double phi0 = descent_angle(data, pt, saddle);
  const double phi = phi0 + branch * (M_PI / 2.0);
  TracedPath out;
  if (branch % 2 == 0) {
    RawTrace raw = trace_descent_ray(data, pt, saddle, phi, opt);
    out.z = thin_polyline(data, raw, opt.level_drop / 16.0);
    out.stop = raw.stop;
  } else {
    // Ascent arm: trace the descent of -E by reversing the field direction.
    const double scale = data.scale() + std::abs(saddle) + 1.0;
    const Complex seed = saddle + 1e-5 * scale * std::polar(1.0, phi);
    RawTrace raw = trace_field(data, pt, seed, FieldKind::kDescent, -1, opt);
    raw.z.insert(raw.z.begin(), saddle);
    raw.level.insert(raw.level.begin(), 0.0);
    out.z = thin_polyline(data, raw, opt.level_drop / 16.0);
    out.stop = raw.stop;
  }
  out.h = continue_h_along(data, pt, out.z, h_saddle);
  return out;
}

}  // namespace bozd
