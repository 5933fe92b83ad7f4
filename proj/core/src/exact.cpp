#include "bozd/exact.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "bozd/quadrature.hpp"

namespace bozd {

namespace {

// Gauss-Kronrod nodes for the chord rule, [0,1) half plus center (see
// quadrature.cpp for the weights' provenance).
const double kX[8] = {0.991455371120812639206854697526329,
                      0.949107912342758524526189684047851,
                      0.864864423359769072789712788640926,
                      0.741531185599394439863864773280788,
                      0.586087235467691130294144838258730,
                      0.405845151377397166906606412076961,
                      0.207784955007898467600689403773245,
                      0.0};
const double kWK[8] = {0.022935322010529224963732008058970,
                       0.063092092629978553290700663189204,
                       0.104790010322250183839876322541518,
                       0.140653259715525918745189590510238,
                       0.169004726639267902826583426598550,
                       0.190350578064785409913256402421014,
                       0.204432940075298892414161999234649,
                       0.209482141084727828012999174891714};
const double kWG[4] = {0.129484966168869693270611432679082,
                       0.279705391489276667901467771423780,
                       0.381830050505118944950369775488975,
                       0.417959183673469387755102040816327};

struct KindSet {
  const RationalInitialData* data;
  int n_kinds;  // 2 + N: [one, u0, pole_1..pole_N]

  Complex eval(int kind, Complex z) const {
    if (kind == 0) return Complex(1.0, 0.0);
    if (kind == 1) return eval_u0_complex(*data, z);
    return 1.0 / (z - data->poles[kind - 2]);
  }
};

struct ChordWork {
  Complex za, zb;
  Complex ha, hb;
  int depth;
};

// Adaptive multi-integrand quadrature over one arc. Returns one integral per
// kind of f(z) e^{-i (h(z)-h_ref)/eps} dz with h_ref = arc.h_saddle, so the
// integrand has modulus <= 1 on the descent arc.
std::vector<Complex> integrate_arc(const RationalInitialData& data,
                                   const LaxOleinikPoint& pt,
                                   const SaddleArc& arc, double epsilon,
                                   const SolverConfig& config,
                                   const KindSet& kinds) {
  const Complex h_ref = arc.h_saddle;
  const double level_ref = h_ref.imag();
  const double trunc_drop = epsilon * std::log(1.0 / config.truncation);

  auto hp = [&](Complex z) { return eval_h_prime(data, pt, z); };
  auto weight = [&](Complex h) {
    return std::exp(Complex(0.0, -1.0) * (h - h_ref) / epsilon);
  };

  // Saddle-point magnitude estimate per kind sets the absolute tolerance.
  const double h2 = std::abs(eval_h_second(data, pt, arc.saddle));
  const double gauss_mag = std::sqrt(2.0 * M_PI * epsilon / std::max(h2, 1e-30));
  double arc_len = 0.0;
  for (size_t i = 1; i < arc.z.size(); ++i)
    arc_len += std::abs(arc.z[i] - arc.z[i - 1]);

  std::vector<double> tol_abs(kinds.n_kinds);
  for (int kind = 0; kind < kinds.n_kinds; ++kind) {
    double fmax = std::abs(kinds.eval(kind, arc.saddle));
    for (size_t i = 0; i < arc.z.size(); i += 7)
      fmax = std::max(fmax, 0.02 * std::abs(kinds.eval(kind, arc.z[i])));
    // Headroom under quad_tol: the determinant ratio amplifies row errors by
    // its own conditioning.
    tol_abs[kind] = 0.1 * config.quad_tol * gauss_mag * std::max(fmax, 1e-12);
  }

  std::vector<Complex> totals(kinds.n_kinds, Complex(0.0, 0.0));
  std::vector<ChordWork> stack;
  for (size_t i = 1; i < arc.z.size(); ++i) {
    // Chords entirely below the truncation level are dropped (both ends more
    // than the truncation drop below the saddle).
    const double la = arc.h[i - 1].imag(), lb = arc.h[i].imag();
    if (std::max(la, lb) < level_ref - trunc_drop) continue;
    stack.push_back({arc.z[i - 1], arc.z[i], arc.h[i - 1], arc.h[i], 0});
  }

  std::vector<Complex> k15(kinds.n_kinds), g7(kinds.n_kinds);
  int work_budget = 200000;
  while (!stack.empty()) {
    const ChordWork w = stack.back();
    stack.pop_back();
    if (--work_budget < 0)
      throw QuadratureFailure("chord refinement budget exhausted");

    const Complex dir = w.zb - w.za;
    const double len = std::abs(dir);
    std::fill(k15.begin(), k15.end(), Complex(0.0, 0.0));
    std::fill(g7.begin(), g7.end(), Complex(0.0, 0.0));

    auto accumulate = [&](double s, double wk, double wg) {
      const Complex z = w.za + s * dir;
      const Complex h = w.ha + integrate_segment(hp, w.za, z, 8);
      const Complex ew = weight(h);
      for (int kind = 0; kind < kinds.n_kinds; ++kind) {
        const Complex v = kinds.eval(kind, z) * ew;
        k15[kind] += wk * v;
        if (wg != 0.0) g7[kind] += wg * v;
      }
    };

    for (int i = 0; i < 7; ++i) {
      const double xm = 0.5 - 0.5 * kX[i], xp = 0.5 + 0.5 * kX[i];
      const double wg = (i == 1)   ? kWG[0]
                        : (i == 3) ? kWG[1]
                        : (i == 5) ? kWG[2]
                                   : 0.0;
      accumulate(xm, kWK[i], wg);
      accumulate(xp, kWK[i], wg);
    }
    accumulate(0.5, kWK[7], kWG[3]);

    bool ok = true;
    for (int kind = 0; kind < kinds.n_kinds && ok; ++kind) {
      const double err = std::abs(k15[kind] - g7[kind]) * 0.5 * len;
      const double tol =
          tol_abs[kind] * std::max(len / std::max(arc_len, 1e-12), 1e-3);
      if (err > tol) ok = false;
    }
    if (ok || w.depth >= 14) {
      if (!ok)
        throw QuadratureFailure("chord failed to converge at depth limit");
      const Complex half_dir = 0.5 * dir;
      for (int kind = 0; kind < kinds.n_kinds; ++kind)
        totals[kind] += k15[kind] * half_dir;
      continue;
    }
    const Complex zm = w.za + 0.5 * dir;
    const Complex hm = w.ha + integrate_segment(hp, w.za, zm, 16);
    stack.push_back({w.za, zm, w.ha, hm, w.depth + 1});
    stack.push_back({zm, w.zb, hm, w.hb, w.depth + 1});
  }
  return totals;
}

// Row values for every kind over a whole path, as mantissa plus path level:
// value_kind = mantissa_kind * exp(i * unit phases folded in) * e^{L/eps}.
struct PathRow {
  std::vector<Complex> mantissa;
  double level = 0.0;  // L: max Im h_ref over arcs; |value| = e^{L/eps}|mantissa|
};

PathRow integrate_path(const RationalInitialData& data,
                       const LaxOleinikPoint& pt, const ContourPath& path,
                       double epsilon, const SolverConfig& config,
                       const KindSet& kinds,
                       std::map<std::pair<double, double>,
                                std::vector<Complex>>* arc_cache) {
  PathRow row;
  row.mantissa.assign(kinds.n_kinds, Complex(0.0, 0.0));
  row.level = -std::numeric_limits<double>::infinity();
  for (const auto& arc : path.arcs)
    row.level = std::max(row.level, arc.level());

  for (const auto& arc : path.arcs) {
    std::vector<Complex> vals;
    const auto key = std::make_pair(arc.saddle.real(), arc.saddle.imag());
    if (arc_cache) {
      auto it = arc_cache->find(key);
      if (it != arc_cache->end()) {
        vals = it->second;
      } else {
        vals = integrate_arc(data, pt, arc, epsilon, config, kinds);
        (*arc_cache)[key] = vals;
      }
    } else {
      vals = integrate_arc(data, pt, arc, epsilon, config, kinds);
    }
    // e^{-i h_ref/eps} = unit phase times e^{Im h_ref / eps}; fold everything
    // except the shared e^{L/eps} into the mantissa.
    const Complex unit = std::polar(1.0, -arc.h_saddle.real() / epsilon);
    const double damp = std::exp((arc.level() - row.level) / epsilon);
    for (int kind = 0; kind < kinds.n_kinds; ++kind)
      row.mantissa[kind] += vals[kind] * unit * damp;
  }
  return row;
}

// Detection of the exceptional residue configuration c_n in i*eps*N, which
// degenerates the wrapped contours; the solution is continuous in eps, so a
// relative nudge restores the generic topology.
bool exceptional_epsilon(const RationalInitialData& data, double epsilon) {
  for (const auto& c : data.residues) {
    const double mag = std::abs(c);
    if (std::abs(c.real()) > 1e-9 * mag) continue;
    const double ratio = c.imag() / epsilon;
    if (ratio < 0.5) continue;
    if (std::abs(ratio - std::round(ratio)) < 1e-9 * std::max(1.0, ratio))
      return true;
  }
  return false;
}

}  // namespace

ScaledComplex contour_integral(const RationalInitialData& data,
                               const LaxOleinikPoint& pt,
                               const ContourPath& path, IntegrandKind kind,
                               int pole_index, double epsilon,
                               const SolverConfig& config) {
  KindSet kinds{&data, 2 + data.pair_count()};
  const auto row = integrate_path(data, pt, path, epsilon, config, kinds, nullptr);
  int col = 0;
  switch (kind) {
    case IntegrandKind::kOne:
      col = 0;
      break;
    case IntegrandKind::kU0:
      col = 1;
      break;
    case IntegrandKind::kPoleTerm:
      col = 2 + pole_index;
      break;
  }
  ScaledComplex out;
  out.mantissa = row.mantissa[col];
  out.log_scale = row.level / epsilon;
  return out;
}

ExactResult u_exact_on_contours(const RationalInitialData& data,
                                const LaxOleinikPoint& pt,
                                const std::vector<ContourPath>& contours,
                                double epsilon, const SolverConfig& config) {
  const int N = data.pair_count();
  if (static_cast<int>(contours.size()) != N + 1)
    throw ConfigError("need N+1 contours");

  KindSet kinds{&data, 2 + N};
  std::map<std::pair<double, double>, std::vector<Complex>> cache;

  Eigen::MatrixXcd A(N + 1, N + 1), B(N + 1, N + 1);
  for (int r = 0; r <= N; ++r) {
    const auto row =
        integrate_path(data, pt, contours[r], epsilon, config, kinds, &cache);
    // Common row factors (the e^{L/eps} scale and any continuation-branch
    // constant) cancel in the determinant ratio; scale rows to unit max.
    double rmax = 0.0;
    for (const auto& v : row.mantissa) rmax = std::max(rmax, std::abs(v));
    if (!(rmax > 0.0))
      throw QuadratureFailure("contour row vanished entirely");
    A(r, 0) = row.mantissa[1] / rmax;
    B(r, 0) = row.mantissa[0] / rmax;
    for (int k = 1; k <= N; ++k) {
      A(r, k) = row.mantissa[1 + k] / rmax;
      B(r, k) = row.mantissa[1 + k] / rmax;
    }
  }

  const Complex detA = A.partialPivLu().determinant();
  const Complex detB = B.partialPivLu().determinant();
  double hadamard = 1.0;
  for (int r = 0; r <= N; ++r) hadamard *= B.row(r).norm();
  if (!(std::abs(detB) > 1e-12 * hadamard))
    throw SingularB("|det B| = " + std::to_string(std::abs(detB)) +
                    " against row bound " + std::to_string(hadamard));

  ExactResult out;
  out.epsilon_used = epsilon;
  out.det_ratio = detA / detB;
  out.u = 2.0 * out.det_ratio.real();
  return out;
}

ExactResult u_exact_detailed(const RationalInitialData& data,
                             const LaxOleinikPoint& pt, double epsilon,
                             const SolverConfig& config) {
  if (!(pt.t > 0.0)) throw NonPositiveTime(pt.t);
  if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");

  bool nudged = false;
  double eps = epsilon;
  if (exceptional_epsilon(data, eps)) {
    eps *= 1.0 + 1e-9;
    nudged = true;
  }

  BranchSolveOptions bopt;
  bopt.tau_real = config.tau_real;
  bopt.tau_caustic = config.tau_caustic;
  const BranchData branches = solve_branches(data, pt, bopt);
  const auto contours = build_contours(data, pt, branches, eps, config);
  ExactResult out = u_exact_on_contours(data, pt, contours, eps, config);
  out.epsilon_nudged = nudged;
  out.epsilon_used = eps;
  return out;
}

double u_exact(const RationalInitialData& data, const LaxOleinikPoint& pt,
               double epsilon, const SolverConfig& config) {
  return u_exact_detailed(data, pt, epsilon, config).u;
}

NonspecialReport nonspecial_check(const RationalInitialData& data,
                                  const LaxOleinikPoint& pt) {
  NonspecialReport report;
  report.discriminant = discriminant_at(data, pt);
  report.discriminant_ok = std::abs(report.discriminant) > 0.0;

  const int N = data.pair_count();
  double cscale = 0.0;
  for (const auto& c : data.residues) cscale = std::max(cscale, std::abs(c));
  report.re_c_sums_ok = true;
  for (unsigned mask = 1; mask < (1u << N); ++mask) {
    double sum = 0.0;
    for (int n = 0; n < N; ++n)
      if (mask & (1u << n)) sum += data.residues[n].real();
    if (std::abs(sum) < 1e-10 * (1.0 + cscale)) report.re_c_sums_ok = false;
  }
  for (const auto& c : data.residues) {
    if (std::abs(c.real()) < 1e-10 * (1.0 + cscale)) report.re_c_sums_ok = false;
    if (std::abs(c.imag()) < 1e-10 * (1.0 + cscale)) report.re_c_sums_ok = false;
  }

  // Heteroclinic inequalities along straight probe segments between saddle
  // pairs with at least one endpoint in the upper half plane.
  try {
    const BranchData branches = solve_branches(data, pt);
    std::vector<Complex> saddles;
    for (double y : branches.real_roots) saddles.emplace_back(y, 0.0);
    for (const auto& z : branches.complex_roots) saddles.push_back(z);

    auto hp = [&](Complex z) { return eval_h_prime(data, pt, z); };
    bool any_skipped = false, any_violated = false;
    for (size_t i = 0; i < saddles.size(); ++i) {
      for (size_t j = i + 1; j < saddles.size(); ++j) {
        if (saddles[i].imag() <= 0.0 && saddles[j].imag() <= 0.0) continue;
        // Probe segment must stay clear of poles.
        double clearance = std::numeric_limits<double>::infinity();
        for (const auto& p : data.poles)
          for (const Complex pole : {p, std::conj(p)}) {
            const Complex d = saddles[j] - saddles[i];
            const double len2 = std::norm(d);
            double s = len2 > 0.0
                           ? std::clamp(((pole - saddles[i]) / d).real(), 0.0, 1.0)
                           : 0.0;
            clearance =
                std::min(clearance, std::abs(saddles[i] + s * d - pole));
          }
        if (clearance < 0.05 * data.scale()) {
          any_skipped = true;
          continue;
        }
        Complex integral(0.0, 0.0);
        const int panels = 8;
        for (int p = 0; p < panels; ++p) {
          const Complex za =
              saddles[i] + (saddles[j] - saddles[i]) *
                               (static_cast<double>(p) / panels);
          const Complex zb =
              saddles[i] + (saddles[j] - saddles[i]) *
                               (static_cast<double>(p + 1) / panels);
          integral += integrate_segment(hp, za, zb, 16);
        }
        const double v = integral.imag() / (2.0 * M_PI);
        // Compare against all +/- subset combinations of Re(c_n).
        for (unsigned mp = 0; mp < (1u << N) && !any_violated; ++mp) {
          for (unsigned mm = 0; mm < (1u << N); ++mm) {
            if (mp & mm) continue;
            double sum = 0.0;
            for (int n = 0; n < N; ++n) {
              if (mp & (1u << n)) sum += data.residues[n].real();
              if (mm & (1u << n)) sum -= data.residues[n].real();
            }
            if (std::abs(sum - v) < 1e-10 * (1.0 + cscale + std::abs(v))) {
              any_violated = true;
              break;
            }
          }
        }
      }
    }
    if (any_violated)
      report.heteroclinic_ok = TriState::kViolated;
    else if (any_skipped)
      report.heteroclinic_ok = TriState::kNotComputed;
    else
      report.heteroclinic_ok = TriState::kOk;
  } catch (const Error&) {
    report.heteroclinic_ok = TriState::kNotComputed;
  }
  return report;
}

}  // namespace bozd
