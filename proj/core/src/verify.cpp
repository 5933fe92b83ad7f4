#include "bozd/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "bozd/caustics.hpp"
#include "bozd/datasets.hpp"
#include "bozd/matsuno.hpp"
#include "bozd/parallel.hpp"
#include "bozd/quadrature.hpp"

namespace bozd {

namespace {

bool is_lorentzian(const RationalInitialData& data) {
  return data.pair_count() == 1 && data.poles[0] == Complex(0.0, 1.0) &&
         data.residues[0] == Complex(0.0, -1.0);
}

double matsuno_reference(const RationalInitialData& data, double t, double x,
                         double epsilon) {
  if (!is_lorentzian(data))
    throw ConfigError("the soliton reference requires u0 = 2/(1+x^2)");
  const double n_real = 1.0 / epsilon;
  const int N = static_cast<int>(std::lround(n_real));
  if (std::abs(n_real - N) > 1e-9)
    throw ConfigError("soliton reference requires eps = 1/N");
  static thread_local int cached_N = -1;
  static thread_local MatsunoSpec cached_spec;
  if (cached_N != N) {
    cached_spec = MatsunoSpec::make(N);
    cached_N = N;
  }
  return u_matsuno(cached_spec, t, x);
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

double supnorm_error(const RationalInitialData& data, double t, double a,
                     double b, int m, double epsilon, RefSolver ref,
                     const SolverConfig& config) {
  std::vector<double> errs(m + 1, 0.0);
  parallel_for(m + 1, [&](int k) {
    const double x = a + (b - a) * k / m;
    const LaxOleinikPoint pt{t, x};
    const double zd = u_zd(data, pt, epsilon);
    const double ref_u = ref == RefSolver::kContour
                             ? u_exact(data, pt, epsilon, config)
                             : matsuno_reference(data, t, x, epsilon);
    errs[k] = std::abs(ref_u - zd);
  });
  double sup = 0.0;
  for (double e : errs) sup = std::max(sup, e);
  return sup;
}

double loglog_slope(const std::vector<double>& epsilons,
                    const std::vector<double>& errors) {
  if (epsilons.size() != errors.size() || epsilons.size() < 3)
    throw InsufficientData("need at least three (eps, error) pairs");
  std::vector<std::pair<double, double>> pairs;
  for (size_t i = 0; i < epsilons.size(); ++i)
    pairs.emplace_back(epsilons[i], errors[i]);
  std::sort(pairs.begin(), pairs.end());
  pairs.resize(3);  // the three smallest epsilons
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [e, err] : pairs) {
    const double X = std::log(e), Y = std::log(err);
    sx += X;
    sy += Y;
    sxx += X * X;
    sxy += X * Y;
  }
  const double n = 3.0;
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

SweepReport run_sweep(const RationalInitialData& data, double t, double a,
                      double b, const std::vector<double>& epsilons,
                      const std::vector<int>& m, RefSolver ref,
                      const SolverConfig& config) {
  if (epsilons.size() != m.size())
    throw ConfigError("epsilons and m must have equal length");
  SweepReport report;
  report.t = t;
  report.a = a;
  report.b = b;
  report.epsilons = epsilons;
  report.m = m;
  for (size_t i = 0; i < epsilons.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    report.max_errors.push_back(
        supnorm_error(data, t, a, b, m[i], epsilons[i], ref, config));
    const auto end = std::chrono::steady_clock::now();
    report.wall_times_s.push_back(
        std::chrono::duration<double>(end - start).count());
  }
  report.fitted_slope = loglog_slope(report.epsilons, report.max_errors);
  return report;
}

L2Report l2_profile_check(const RationalInitialData& data, double t,
                          double epsilon, double window_lo, double window_hi,
                          double quad_tol, double caustic_delta) {
  // J-scan: the averaging identity only covers J <= 1.
  const int scan_n = 800;
  for (int k = 0; k <= scan_n; ++k) {
    const double x = window_lo + (window_hi - window_lo) * k / scan_n;
    const int nreal = count_real_roots(data, {t, x});
    if (nreal >= 5)
      throw JTooLarge("J = " + std::to_string((nreal - 1) / 2) + " at x = " +
                      std::to_string(x));
  }

  const auto caustic_x =
      discriminant_zeros_in_x(data, t, window_lo, window_hi);
  std::vector<std::pair<double, double>> intervals;
  double lo = window_lo;
  for (double cx : caustic_x) {
    if (cx - caustic_delta > lo)
      intervals.emplace_back(lo, cx - caustic_delta);
    lo = cx + caustic_delta;
  }
  if (window_hi > lo) intervals.emplace_back(lo, window_hi);

  L2Report report;
  for (const auto& [a, b] : intervals) {
    report.norm_uzd_sq += integrate_adaptive_real(
        [&](double x) {
          const double u = u_zd(data, {t, x}, epsilon);
          return u * u;
        },
        a, b, quad_tol, 1e-12, 34);
    report.norm_u0_sq += integrate_adaptive_real(
        [&](double x) {
          const double u = eval_u0(data, x);
          return u * u;
        },
        a, b, quad_tol, 1e-12, 34);
  }
  report.rel_gap =
      std::abs(report.norm_uzd_sq - report.norm_u0_sq) / report.norm_u0_sq;
  return report;
}

std::vector<ConstantJInterval> constant_j_intervals(
    const RationalInitialData& data, double t, double x0, double x1,
    double margin, int scan_points) {
  std::vector<ConstantJInterval> out;
  int run_j = -2;
  double run_start = x0;
  double prev_x = x0;
  for (int k = 0; k <= scan_points; ++k) {
    const double x = x0 + (x1 - x0) * k / scan_points;
    const int nreal = count_real_roots(data, {t, x});
    const int J = (nreal > 0 && nreal % 2 == 1) ? (nreal - 1) / 2 : -1;
    if (J != run_j) {
      if (run_j >= 0 && prev_x - run_start > 2.0 * margin)
        out.push_back({run_start + margin, prev_x - margin, run_j});
      run_j = J;
      run_start = x;
    }
    prev_x = x;
  }
  if (run_j >= 0 && prev_x - run_start > 2.0 * margin)
    out.push_back({run_start + margin, prev_x - margin, run_j});
  return out;
}

std::vector<CriterionResult> run_paper_table_suite(const SolverConfig& config) {
  const auto data = dataset_two_pole();
  const double t = 4.5, a = 4.0, b = 5.0;
  const std::vector<double> eps = {std::pow(2.0, -5), std::pow(2.0, -6),
                                   std::pow(2.0, -7)};
  const std::vector<int> m = {1000, 10000, 10000};
  const std::vector<double> expected = {0.056871, 0.028720, 0.014503};
  const double tol = 1e-3;

  std::vector<CriterionResult> results;
  for (size_t i = 0; i < eps.size(); ++i) {
    const double got = supnorm_error(data, t, a, b, m[i], eps[i],
                                     RefSolver::kContour, config);
    CriterionResult r;
    r.name = "error-table eps=2^-" + std::to_string(5 + static_cast<int>(i));
    r.passed = std::abs(got - expected[i]) <= tol;
    r.detail = "max |u - u_zd| = " + fmt(got) + ", expected " +
               fmt(expected[i]) + " +/- " + fmt(tol);
    results.push_back(std::move(r));
  }
  return results;
}

namespace {

struct SlopeInterval {
  double t, a, b;
  std::string label;
};

std::vector<SlopeInterval> pick_slope_intervals(const RationalInitialData& data,
                                                const std::vector<double>& ts,
                                                double x0, double x1) {
  std::vector<SlopeInterval> intervals;
  for (double t : ts) {
    const auto runs = constant_j_intervals(data, t, x0, x1, 0.15);
    // Widest J=1 run, clipped to unit length about its center.
    const ConstantJInterval* best = nullptr;
    for (const auto& run : runs)
      if (run.J == 1 && (!best || run.hi - run.lo > best->hi - best->lo))
        best = &run;
    if (best) {
      double c = 0.5 * (best->lo + best->hi);
      double half = std::min(0.5, 0.5 * (best->hi - best->lo));
      intervals.push_back({t, c - half, c + half,
                           "t=" + fmt(t) + " J=1 [" + fmt(c - half) + "," +
                               fmt(c + half) + "]"});
    }
    if (intervals.size() >= 4) break;
  }
  // Pad with a J=0 interval adjacent to a caustic for gradient-rich sampling.
  if (intervals.size() < 4 && !ts.empty()) {
    const auto runs = constant_j_intervals(data, ts[0], x0, x1, 0.15);
    for (size_t i = 0; i < runs.size(); ++i) {
      if (runs[i].J == 0 && i + 1 < runs.size()) {
        const double b = runs[i].hi;
        const double a = std::max(runs[i].lo, b - 1.0);
        intervals.push_back({ts[0], a, b, "t=" + fmt(ts[0]) + " J=0"});
        break;
      }
    }
  }
  return intervals;
}

}  // namespace

std::vector<CriterionResult> run_slope_suite(const SolverConfig& config) {
  std::vector<CriterionResult> results;
  const std::vector<double> eps = {std::pow(2.0, -5), std::pow(2.0, -6),
                                   std::pow(2.0, -7)};
  const std::vector<int> m = {600, 600, 600};

  {
    const auto data = dataset_two_pole();
    auto intervals = pick_slope_intervals(data, {3.0, 4.0, 4.5, 5.5}, -6.0, 14.0);
    if (intervals.size() < 4)
      intervals = pick_slope_intervals(data, {2.5, 3.0, 3.5, 4.0, 4.5, 5.0, 5.5},
                                       -8.0, 16.0);
    for (const auto& iv : intervals) {
      const auto report = run_sweep(data, iv.t, iv.a, iv.b, eps, m,
                                    RefSolver::kContour, config);
      CriterionResult r;
      r.name = "slope contour " + iv.label;
      r.passed = report.fitted_slope >= 0.85 && report.fitted_slope <= 1.15;
      r.detail = "slope = " + fmt(report.fitted_slope) + " errors = [" +
                 fmt(report.max_errors[0]) + ", " + fmt(report.max_errors[1]) +
                 ", " + fmt(report.max_errors[2]) + "]";
      results.push_back(std::move(r));
    }
  }
  {
    const auto data = dataset_lorentzian();
    const auto intervals =
        pick_slope_intervals(data, {0.6, 1.0, 1.4, 1.8}, -4.0, 7.0);
    for (const auto& iv : intervals) {
      const auto report = run_sweep(data, iv.t, iv.a, iv.b, eps, m,
                                    RefSolver::kMatsuno, config);
      CriterionResult r;
      r.name = "slope soliton-ref " + iv.label;
      r.passed = report.fitted_slope >= 0.85 && report.fitted_slope <= 1.15;
      r.detail = "slope = " + fmt(report.fitted_slope) + " errors = [" +
                 fmt(report.max_errors[0]) + ", " + fmt(report.max_errors[1]) +
                 ", " + fmt(report.max_errors[2]) + "]";
      results.push_back(std::move(r));
    }
  }
  return results;
}

std::vector<CriterionResult> run_matsuno_cross_suite(const SolverConfig& config) {
  const auto data = dataset_lorentzian();
  std::vector<CriterionResult> results;
  for (double eps : {0.25, 0.125}) {
    double worst = 0.0;
    std::string worst_at;
    int used = 0;
    for (double t : {0.3, 0.7, 1.1, 1.5, 1.9}) {
      for (double x0 : {-2.0, 0.0, 1.5, 3.0}) {
        double x = x0;
        bool solved = false;
        for (int attempt = 0; attempt < 6 && !solved; ++attempt) {
          try {
            solve_branches(data, {t, x});
            solved = true;
          } catch (const NearCaustic&) {
            x += 0.0831;
          }
        }
        if (!solved) continue;
        const double ue = u_exact(data, {t, x}, eps, config);
        const double um = matsuno_reference(data, t, x, eps);
        const double diff = std::abs(ue - um);
        ++used;
        if (diff > worst) {
          worst = diff;
          worst_at = "(t,x)=(" + fmt(t) + "," + fmt(x) + ")";
        }
      }
    }
    CriterionResult r;
    r.name = "cross-solver eps=" + fmt(eps);
    r.passed = used == 20 && worst < 1e-6;
    r.detail = "points = " + std::to_string(used) +
               ", worst |u_exact - u_soliton| = " + fmt(worst) + " at " +
               worst_at;
    results.push_back(std::move(r));
  }
  return results;
}

namespace {

RationalInitialData random_data(std::mt19937_64& rng, int N) {
  std::uniform_real_distribution<double> re_p(-3.0, 3.0), im_p(0.3, 2.5);
  std::uniform_real_distribution<double> mag_c(0.2, 1.5);
  std::uniform_int_distribution<int> sign(0, 1);
  RationalInitialData data;
  for (int n = 0; n < N; ++n) {
    data.poles.emplace_back(re_p(rng), im_p(rng));
    data.residues.emplace_back((sign(rng) ? 1.0 : -1.0) * mag_c(rng),
                               (sign(rng) ? 1.0 : -1.0) * mag_c(rng));
  }
  data.validate();
  return data;
}

double estimate_breaking_time(const RationalInitialData& data) {
  double worst = 0.0;
  const double s = data.scale();
  for (int k = 0; k <= 3000; ++k) {
    const double x = -8.0 * s + 16.0 * s * k / 3000;
    const double up = eval_u0_prime(data, Complex(x, 0.0)).real();
    worst = std::max(worst, -up);
  }
  return worst > 0.0 ? 1.0 / (2.0 * worst) : 1e9;
}

// Midpoint of the widest J=1 run at time t, if one exists.
bool find_j1_point(const RationalInitialData& data, double t, double* x_out) {
  const double s = data.scale();
  const auto runs = constant_j_intervals(data, t, -6.0 * s, 6.0 * s, 0.0, 600);
  const ConstantJInterval* best = nullptr;
  for (const auto& run : runs)
    if (run.J == 1 && (!best || run.hi - run.lo > best->hi - best->lo))
      best = &run;
  if (!best || best->hi - best->lo < 1e-3) return false;
  *x_out = 0.5 * (best->lo + best->hi);
  return true;
}

}  // namespace

std::vector<CriterionResult> run_identity_suite(unsigned seed, int n_configs) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_N(1, 4);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  double worst_global = 0.0, worst_factored = 0.0, worst_phi = 0.0;
  double worst_cnr = 0.0, worst_j1 = 0.0, worst_avg = 0.0;
  int j1_instances = 0;

  for (int cfg = 0; cfg < n_configs; ++cfg) {
    const int N = pick_N(rng);
    const auto data = random_data(rng, N);
    const double s = data.scale();

    // A generic off-caustic evaluation point.
    BranchData branches;
    LaxOleinikPoint pt{0.0, 0.0};
    bool have_point = false;
    for (int attempt = 0; attempt < 20 && !have_point; ++attempt) {
      pt.t = 0.1 + 2.9 * unit(rng);
      pt.x = -5.0 + 10.0 * unit(rng);
      try {
        branches = solve_branches(data, pt);
        have_point = true;
      } catch (const Error&) {
      }
    }
    if (!have_point) continue;

    // Root-sum identity residual.
    {
      double lhs = 0.0;
      for (double y : branches.real_roots) lhs += y;
      for (const auto& z : branches.complex_roots) lhs += 2.0 * z.real();
      double rhs = pt.x;
      for (const auto& p : data.poles) rhs += 2.0 * p.real();
      worst_global = std::max(
          worst_global, std::abs(lhs - rhs) / (1.0 + std::abs(rhs)));
    }

    // Factored form of 2t h'(z) from the computed roots.
    for (int probe = 0; probe < 5; ++probe) {
      const Complex z(-3.0 * s + 6.0 * s * unit(rng),
                      -2.0 * s + 4.0 * s * unit(rng));
      bool clear = true;
      for (const auto& p : data.poles)
        if (std::abs(z - p) < 0.1 || std::abs(z - std::conj(p)) < 0.1)
          clear = false;
      for (double y : branches.real_roots)
        if (std::abs(z - y) < 0.05) clear = false;
      for (const auto& zr : branches.complex_roots)
        if (std::abs(z - zr) < 0.05 || std::abs(z - std::conj(zr)) < 0.05)
          clear = false;
      if (!clear) continue;
      const Complex direct = 2.0 * pt.t * eval_h_prime(data, pt, z);
      Complex factored(1.0, 0.0);
      for (double y : branches.real_roots) factored *= z - y;
      for (const auto& zr : branches.complex_roots)
        factored *= (z - zr) * (z - std::conj(zr));
      for (const auto& p : data.poles)
        factored /= (z - p) * (z - std::conj(p));
      worst_factored = std::max(
          worst_factored, std::abs(direct - factored) / std::abs(direct));
    }

    // Dual forms of the phase-correction function.
    for (int probe = 0; probe < 2; ++probe) {
      const double y = -3.0 * s + 6.0 * s * unit(rng);
      const double closed = phi_closed_form(data, branches, y);
      const double integral = phi_integral_form(data, pt, branches, y);
      worst_phi = std::max(worst_phi, std::abs(closed - integral));
    }

    // Fourier coefficients of U_r^p against periodic trapezoid quadrature.
    {
      const double r = 0.2 + 0.6 * unit(rng);
      const int n = static_cast<int>(std::floor(unit(rng) * 7)) - 3;
      for (int p : {1, 2}) {
        const int grid = 4096;
        Complex acc(0.0, 0.0);
        for (int k = 0; k < grid; ++k) {
          const double th = 2.0 * M_PI * k / grid;
          const double u = periodic_profile_Ur(r, th);
          acc += std::pow(u, p) * std::polar(1.0, -n * th);
        }
        acc /= static_cast<double>(grid);
        worst_cnr = std::max(
            worst_cnr, std::abs(acc.real() - fourier_coeff_Ur(r, n, p)));
        worst_cnr = std::max(worst_cnr, std::abs(acc.imag()));
      }
    }

    // J=1 identities need a genuinely multivalued point.
    const double t_break = estimate_breaking_time(data);
    for (double factor : {1.6, 2.4}) {
      double xj = 0.0;
      const double tj = factor * t_break;
      if (tj > 50.0) break;
      if (!find_j1_point(data, tj, &xj)) continue;
      const LaxOleinikPoint pj{tj, xj};
      BranchData bj;
      try {
        bj = solve_branches(data, pj);
      } catch (const Error&) {
        continue;
      }
      if (bj.J != 1) continue;
      ++j1_instances;
      const double eps = std::pow(2.0, -5);
      const double closed = u_zd_from_branches(data, pj, bj, eps, ZDRoute::kAuto);
      const double det =
          u_zd_from_branches(data, pj, bj, eps, ZDRoute::kDeterminant);
      worst_j1 = std::max(worst_j1, std::abs(closed - det));

      const auto params = compute_zd_params(data, pj, bj);
      const int grid = 512;
      double avg = 0.0;
      for (int k = 0; k < grid; ++k)
        avg += u_zd_frozen(params, eps,
                           {2.0 * M_PI * eps * k / grid});
      avg /= grid;
      worst_avg =
          std::max(worst_avg, std::abs(avg - weak_limit_ubar(bj)));
      break;
    }
  }

  std::vector<CriterionResult> results;
  auto push = [&results](const std::string& name, double worst, double bound,
                         const std::string& extra = "") {
    CriterionResult r;
    r.name = name;
    r.passed = worst < bound;
    r.detail = "worst residual " + fmt(worst) + " (bound " + fmt(bound) + ")" +
               extra;
    results.push_back(std::move(r));
  };
  push("identity root-sum", worst_global, 1e-10);
  push("identity factored-h'", worst_factored, 1e-10);
  push("identity phase-correction dual form", worst_phi, 1e-6);
  push("identity U_r fourier coefficients", worst_cnr, 1e-10);
  push("identity J=1 closed vs determinant", worst_j1, 1e-8,
       ", instances " + std::to_string(j1_instances));
  push("identity period average vs weak limit", worst_avg, 1e-6,
       ", instances " + std::to_string(j1_instances));
  // The J=1 identities must actually have been exercised.
  if (j1_instances < std::max(5, n_configs / 5)) {
    results[4].passed = false;
    results[5].passed = false;
  }
  return results;
}

std::vector<CriterionResult> run_contour_validity_suite(
    const SolverConfig& config) {
  std::vector<CriterionResult> results;
  const double eps = std::pow(2.0, -5);
  struct Fixture {
    RationalInitialData data;
    double t0, t1, x0, x1;
    std::string label;
  };
  const std::vector<Fixture> fixtures = {
      {dataset_lorentzian(), 0.3, 2.1, -4.0, 6.0, "lorentzian"},
      {dataset_two_pole(), 0.5, 5.0, -6.0, 10.0, "two-pole"},
  };
  for (const auto& f : fixtures) {
    int validated = 0, attempted = 0;
    double worst_perturb = 0.0, worst_residual = 0.0;
    std::string fail_detail;
    for (int i = 0; i < 10; ++i) {
      for (int j = 0; j < 10; ++j) {
        const double t = f.t0 + (f.t1 - f.t0) * i / 9.0;
        double x = f.x0 + (f.x1 - f.x0) * j / 9.0;
        ++attempted;
        BranchData branches;
        bool solved = false;
        for (int attempt = 0; attempt < 8 && !solved; ++attempt) {
          try {
            branches = solve_branches(f.data, {t, x});
            solved = true;
          } catch (const NearCaustic&) {
            x += 0.0137 * (f.x1 - f.x0) / 9.0;
          }
        }
        if (!solved) {
          fail_detail = "unresolvable caustic at t=" + fmt(t);
          continue;
        }
        try {
          const auto contours =
              build_contours(f.data, {t, x}, branches, eps, config);
          for (const auto& path : contours)
            worst_residual = std::max(
                worst_residual, continuation_residual(f.data, {t, x}, path));
          const auto base =
              u_exact_on_contours(f.data, {t, x}, contours, eps, config);
          std::vector<ContourPath> shaken;
          shaken.reserve(contours.size());
          for (size_t c = 0; c < contours.size(); ++c)
            shaken.push_back(perturb_path(f.data, {t, x}, contours[c], 1e-3,
                                          static_cast<unsigned>(100 * i + j + c)));
          const auto moved =
              u_exact_on_contours(f.data, {t, x}, shaken, eps, config);
          worst_perturb = std::max(worst_perturb, std::abs(moved.u - base.u));
          ++validated;
        } catch (const Error& e) {
          fail_detail = std::string(e.what()) + " at (t,x)=(" + fmt(t) + "," +
                        fmt(x) + ")";
        }
      }
    }
    CriterionResult r;
    r.name = "contour validity " + f.label;
    r.passed = validated == attempted && worst_residual < 1e-10;
    r.detail = std::to_string(validated) + "/" + std::to_string(attempted) +
               " grid points validated, worst continuation residual " +
               fmt(worst_residual) +
               (fail_detail.empty() ? "" : ", last failure: " + fail_detail);
    results.push_back(r);

    CriterionResult p;
    p.name = "contour perturbation invariance " + f.label;
    p.passed = validated == attempted && worst_perturb < 10.0 * config.quad_tol;
    p.detail = "worst |delta u| = " + fmt(worst_perturb) + " (bound " +
               fmt(10.0 * config.quad_tol) + ")";
    results.push_back(p);
  }
  return results;
}

std::vector<CriterionResult> run_l2_suite() {
  const auto data = dataset_lorentzian();
  std::vector<CriterionResult> results;

  // Pre-breaking time: the change of variables makes the identity exact.
  {
    const auto report = l2_profile_check(data, 0.2, std::pow(2.0, -5), -18.0,
                                         22.0, 1e-8);
    CriterionResult r;
    r.name = "l2 identity at J=0";
    r.passed = report.rel_gap < 5e-4;
    r.detail = "rel gap " + fmt(report.rel_gap);
    results.push_back(std::move(r));
  }

  const double t = 1.0;
  std::vector<double> gaps;
  for (int k = 5; k <= 7; ++k) {
    const double eps = std::pow(2.0, -k);
    const auto report = l2_profile_check(data, t, eps, -18.0, 22.0, 1e-7);
    gaps.push_back(report.rel_gap);
  }
  CriterionResult r;
  r.name = "l2 convergence trend";
  r.passed = gaps[2] < 0.02 && gaps[0] > gaps[1] && gaps[1] > gaps[2];
  r.detail = "rel gaps [" + fmt(gaps[0]) + ", " + fmt(gaps[1]) + ", " +
             fmt(gaps[2]) + "]";
  results.push_back(std::move(r));
  return results;
}

std::vector<CriterionResult> run_boundedness_suite() {
  std::vector<CriterionResult> results;
  struct Case {
    RationalInitialData data;
    double t;
    double x0, x1;
    std::string label;
  };
  const std::vector<Case> cases = {
      {dataset_lorentzian(), 0.6, -8.0, 10.0, "lorentzian t=0.6"},
      {dataset_lorentzian(), 1.2, -8.0, 12.0, "lorentzian t=1.2"},
      {dataset_two_pole(), 4.5, -8.0, 18.0, "two-pole t=4.5"},
  };
  for (const auto& c : cases) {
    const double sup_u0 = c.data.sup_abs_u0();
    double worst_ratio = 0.0;
    for (int k = 0; k <= 1500; ++k) {
      const double x = c.x0 + (c.x1 - c.x0) * k / 1500;
      BranchData branches;
      try {
        branches = solve_branches(c.data, {c.t, x});
      } catch (const Error&) {
        continue;
      }
      if (branches.J > 1) continue;  // bound is only claimed for J <= 1
      for (int e = 4; e <= 7; ++e) {
        const double u =
            u_zd_from_branches(c.data, {c.t, x}, branches, std::pow(2.0, -e));
        worst_ratio = std::max(worst_ratio, std::abs(u) / sup_u0);
      }
    }
    CriterionResult r;
    r.name = "boundedness " + c.label;
    r.passed = worst_ratio <= 9.0;
    r.detail = "max |u_zd| / sup|u0| = " + fmt(worst_ratio);
    results.push_back(std::move(r));
  }
  return results;
}

std::vector<CriterionResult> run_caustic_cardinality_suite(unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_N(1, 3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<CriterionResult> results;
  int passed = 0;
  std::string detail;
  for (int trial = 0; trial < 10; ++trial) {
    const int N = pick_N(rng);
    const auto data = random_data(rng, N);
    const double t = 0.2 + 4.8 * unit(rng);
    const double s = data.scale();
    const auto zeros = discriminant_zeros_in_x(data, t, -20.0 * s, 20.0 * s);
    const bool ok = static_cast<int>(zeros.size()) <= 4 * N;
    if (ok) ++passed;
    detail += (detail.empty() ? "" : ", ") + std::to_string(zeros.size()) +
              "<=" + std::to_string(4 * N);
  }
  CriterionResult r;
  r.name = "caustic cardinality <= 4N";
  r.passed = passed == 10;
  r.detail = detail;
  results.push_back(std::move(r));
  return results;
}

}  // namespace bozd
