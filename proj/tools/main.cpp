// Command-line front end: profiles, exact evaluation, soliton reference,
// caustic maps, trajectory dumps, and the verification suites. All numeric
// logic lives in the core library; this file only parses, dispatches, and
// writes files.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "bozd/caustics.hpp"
#include "bozd/datasets.hpp"
#include "bozd/io.hpp"
#include "bozd/matsuno.hpp"
#include "bozd/multiphase.hpp"
#include "bozd/parallel.hpp"
#include "bozd/verify.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct CommonArgs {
  std::string dataset = "lorentzian";
  std::string outdir = ".";
};

json common_config(const CommonArgs& c, const std::string& subcommand) {
  json cfg;
  cfg["subcommand"] = subcommand;
  cfg["dataset"] = c.dataset;
  cfg["outdir"] = c.outdir;
  cfg["workers"] = bozd::worker_count();
  return cfg;
}

// Canonical form: nlohmann::json already serializes objects with sorted keys.
std::string canonical(const json& cfg) { return cfg.dump(); }

std::string out_path(const CommonArgs& c, const std::string& name) {
  fs::create_directories(c.outdir);
  return (fs::path(c.outdir) / name).string();
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i)
    out[i] = n > 1 ? a + (b - a) * i / (n - 1) : a;
  return out;
}

int run_profile(const CommonArgs& common, double t, double x0, double x1,
                int nx, double epsilon, bool with_exact, bool only_ubar,
                bool heatmap, double heat_im_max) {
  const auto data = bozd::resolve_dataset(common.dataset);
  json cfg = common_config(common, "profile");
  cfg["t"] = t;
  cfg["x_range"] = {x0, x1};
  cfg["nx"] = nx;
  cfg["epsilon"] = epsilon;
  cfg["with_exact"] = with_exact;
  cfg["only_ubar"] = only_ubar;

  std::vector<std::string> cols = {"x", "u_zd", "u_exact", "ubar", "J"};
  if (only_ubar) cols = {"x", "ubar", "J"};
  bozd::CsvWriter csv(out_path(common, "profile.csv"), canonical(cfg), cols);

  const auto xs = linspace(x0, x1, nx);
  struct Row {
    bool valid = false;
    std::vector<double> values;
  };
  std::vector<Row> rows(xs.size());
  bozd::parallel_for(static_cast<int>(xs.size()), [&](int i) {
    const bozd::LaxOleinikPoint pt{t, xs[i]};
    try {
      const auto branches = bozd::solve_branches(data, pt);
      const double ubar = bozd::weak_limit_ubar(branches);
      if (only_ubar) {
        rows[i] = {true, {xs[i], ubar, static_cast<double>(branches.J)}};
        return;
      }
      const double zd =
          bozd::u_zd_from_branches(data, pt, branches, epsilon);
      double exact = std::nan("");
      if (with_exact) exact = bozd::u_exact(data, pt, epsilon);
      rows[i] = {true,
                 {xs[i], zd, exact, ubar, static_cast<double>(branches.J)}};
    } catch (const bozd::Error&) {
      rows[i].valid = false;  // caustic and construction gaps become holes
    }
  });
  for (const auto& row : rows)
    if (row.valid) csv.row(row.values);

  if (heatmap) {
    json hcfg = cfg;
    hcfg["heat_im_max"] = heat_im_max;
    bozd::CsvWriter hm(out_path(common, "heatmap.csv"), canonical(hcfg),
                       {"re", "im", "re_E"});
    const int nr = 241, ni = 121;
    const double xm = 0.5 * (x0 + x1), half = 0.5 * (x1 - x0) + 2.0;
    for (int a = 0; a < nr; ++a) {
      for (int b = 0; b < ni; ++b) {
        const double re = xm - half + 2.0 * half * a / (nr - 1);
        const double im = -heat_im_max + 2.0 * heat_im_max * b / (ni - 1);
        const auto h =
            bozd::eval_h_principal(data, {t, xm}, bozd::Complex(re, im));
        hm.row({re, im, h.imag()});  // Re(-ih) = Im h
      }
    }
  }
  return 0;
}

int run_exact(const CommonArgs& common, double t, double x0, double x1, int nx,
              double epsilon) {
  const auto data = bozd::resolve_dataset(common.dataset);
  json cfg = common_config(common, "exact");
  cfg["t"] = t;
  cfg["x_range"] = {x0, x1};
  cfg["nx"] = nx;
  cfg["epsilon"] = epsilon;
  bozd::CsvWriter csv(out_path(common, "exact.csv"), canonical(cfg),
                      {"x", "u_exact"});
  const auto xs = linspace(x0, x1, nx);
  std::vector<double> us(xs.size(), std::nan(""));
  bozd::parallel_for(static_cast<int>(xs.size()), [&](int i) {
    us[i] = bozd::u_exact(data, {t, xs[i]}, epsilon);
  });
  for (size_t i = 0; i < xs.size(); ++i) csv.row({xs[i], us[i]});
  return 0;
}

int run_zd(const CommonArgs& common, double t, double x0, double x1, int nx,
           double epsilon) {
  const auto data = bozd::resolve_dataset(common.dataset);
  const int N = data.pair_count();
  json cfg = common_config(common, "zd");
  cfg["t"] = t;
  cfg["x_range"] = {x0, x1};
  cfg["nx"] = nx;
  cfg["epsilon"] = epsilon;
  std::vector<std::string> cols = {"x", "u_zd", "J"};
  for (int j = 1; j <= N; ++j) cols.push_back("theta_" + std::to_string(j));
  for (int j = 1; j <= N; ++j) cols.push_back("phi_" + std::to_string(j));
  bozd::CsvWriter csv(out_path(common, "zd.csv"), canonical(cfg), cols);

  const auto xs = linspace(x0, x1, nx);
  std::vector<std::vector<double>> rows(xs.size());
  bozd::parallel_for(static_cast<int>(xs.size()), [&](int i) {
    const bozd::LaxOleinikPoint pt{t, xs[i]};
    try {
      const auto branches = bozd::solve_branches(data, pt);
      const auto params = bozd::compute_zd_params(data, pt, branches);
      std::vector<double> row = {
          xs[i], bozd::u_zd_from_branches(data, pt, branches, epsilon),
          static_cast<double>(branches.J)};
      for (int j = 0; j < N; ++j)
        row.push_back(j < branches.J ? params.theta[j] : std::nan(""));
      for (int j = 0; j < N; ++j)
        row.push_back(j < branches.J ? params.phi[j] : std::nan(""));
      rows[i] = std::move(row);
    } catch (const bozd::Error&) {
    }
  });
  for (const auto& row : rows)
    if (!row.empty()) csv.row(row);
  return 0;
}

int run_matsuno_cmd(const CommonArgs& common, int N, double t, double x0,
                    double x1, int nx) {
  json cfg = common_config(common, "matsuno");
  cfg["N"] = N;
  cfg["t"] = t;
  cfg["x_range"] = {x0, x1};
  cfg["nx"] = nx;
  bozd::CsvWriter csv(out_path(common, "matsuno.csv"), canonical(cfg),
                      {"x", "u"});
  const auto spec = bozd::MatsunoSpec::make(N);
  const auto xs = linspace(x0, x1, nx);
  std::vector<double> us(xs.size());
  bozd::parallel_for(static_cast<int>(xs.size()), [&](int i) {
    us[i] = bozd::u_matsuno(spec, t, xs[i]);
  });
  for (size_t i = 0; i < xs.size(); ++i) csv.row({xs[i], us[i]});
  return 0;
}

int run_caustics(const CommonArgs& common, double t0, double t1, double x0,
                 double x1, int nt, int nx) {
  const auto data = bozd::resolve_dataset(common.dataset);
  json cfg = common_config(common, "caustics");
  cfg["t_range"] = {t0, t1};
  cfg["x_range"] = {x0, x1};
  cfg["nt"] = nt;
  cfg["nx"] = nx;

  bozd::CausticScanOptions opt;
  opt.nt = nt;
  opt.nx = nx;
  const auto curves = bozd::caustic_scan(data, t0, t1, x0, x1, opt);
  bozd::CsvWriter csv(out_path(common, "caustics.csv"), canonical(cfg),
                      {"t", "x", "curve_id"});
  for (const auto& curve : curves)
    for (const auto& p : curve.points)
      csv.row({p.t, p.x, static_cast<double>(curve.id)});

  const auto jm = bozd::j_map(data, t0, t1, x0, x1, std::min(nt, 120),
                              std::min(nx, 240));
  bozd::CsvWriter jcsv(out_path(common, "jmap.csv"), canonical(cfg),
                       {"t", "x", "J"});
  for (int i = 0; i < jm.nt; ++i)
    for (int j = 0; j < jm.nx; ++j)
      jcsv.row({jm.t0 + (jm.t1 - jm.t0) * i / std::max(1, jm.nt - 1),
                jm.x0 + (jm.x1 - jm.x0) * j / std::max(1, jm.nx - 1),
                static_cast<double>(jm.J[static_cast<size_t>(i) * jm.nx + j])});
  return 0;
}

int run_stokes_trace(const CommonArgs& common, double t, double x,
                     double epsilon) {
  const auto data = bozd::resolve_dataset(common.dataset);
  const bozd::LaxOleinikPoint pt{t, x};
  json cfg = common_config(common, "stokes-trace");
  cfg["t"] = t;
  cfg["x"] = x;
  cfg["epsilon"] = epsilon;

  const auto branches = bozd::solve_branches(data, pt);
  const auto contours = bozd::build_contours(data, pt, branches, epsilon);
  bozd::CsvWriter csv(out_path(common, "contours.csv"), canonical(cfg),
                      {"contour", "arc", "re", "im", "re_E", "im_E"});
  for (const auto& path : contours) {
    for (size_t a = 0; a < path.arcs.size(); ++a) {
      const auto& arc = path.arcs[a];
      for (size_t i = 0; i < arc.z.size(); ++i) {
        // E = -i h: Re E = Im h, Im E = -Re h.
        csv.row({static_cast<double>(path.index), static_cast<double>(a),
                 arc.z[i].real(), arc.z[i].imag(), arc.h[i].imag(),
                 -arc.h[i].real()});
      }
    }
  }

  // Level-curve arms from every saddle, for Stokes-graph style plots.
  bozd::CsvWriter traces(out_path(common, "level_traces.csv"), canonical(cfg),
                         {"saddle_index", "arm", "re", "im", "re_E"});
  std::vector<bozd::Complex> saddles;
  for (double y : branches.real_roots) saddles.emplace_back(y, 0.0);
  for (const auto& z : branches.complex_roots) saddles.push_back(z);
  for (size_t s = 0; s < saddles.size(); ++s) {
    for (int arm = 0; arm < 4; ++arm) {
      const double phi =
          bozd::descent_angle(data, pt, saddles[s]) + M_PI / 4.0 +
          arm * (M_PI / 2.0);  // level arms bisect the descent arms
      const bozd::Complex seed =
          saddles[s] + 1e-4 * (1.0 + std::abs(saddles[s])) *
                           std::polar(1.0, phi);
      try {
        const auto trace = bozd::trace_level_curve(data, pt, seed, +1);
        for (size_t i = 0; i < trace.z.size(); ++i)
          traces.row({static_cast<double>(s), static_cast<double>(arm),
                      trace.z[i].real(), trace.z[i].imag(),
                      trace.h[i].imag()});
      } catch (const bozd::Error&) {
      }
    }
  }
  return 0;
}

int run_verify(const CommonArgs& common, const std::string& suite) {
  json cfg = common_config(common, "verify");
  cfg["suite"] = suite;

  std::vector<bozd::CriterionResult> results;
  auto append = [&results](std::vector<bozd::CriterionResult> more) {
    for (auto& r : more) results.push_back(std::move(r));
  };
  const bozd::SolverConfig solver;
  if (suite == "paper-table" || suite == "all")
    append(bozd::run_paper_table_suite(solver));
  if (suite == "identities" || suite == "all")
    append(bozd::run_identity_suite());
  if (suite == "matsuno-cross" || suite == "all")
    append(bozd::run_matsuno_cross_suite(solver));
  if (suite == "slope" || suite == "all") append(bozd::run_slope_suite(solver));
  if (suite == "l2" || suite == "all") append(bozd::run_l2_suite());
  if (suite == "contours" || suite == "all")
    append(bozd::run_contour_validity_suite(solver));
  if (results.empty()) throw bozd::ConfigError("unknown suite: " + suite);

  bool all_ok = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail
              << "\n";
    all_ok = all_ok && r.passed;
  }
  json report;
  report["config"] = cfg;
  report["results"] = bozd::criteria_to_json(results);
  report["all_passed"] = all_ok;
  std::ofstream out(out_path(common, "report.json"));
  out << report.dump(2) << "\n";
  return all_ok ? 0 : 1;
}

int run_selftest(const CommonArgs& common) {
  json cfg = common_config(common, "selftest");
  std::vector<bozd::CriterionResult> results;
  auto append = [&results](std::vector<bozd::CriterionResult> more) {
    for (auto& r : more) results.push_back(std::move(r));
  };
  append(bozd::run_identity_suite(20240801u, 25));
  append(bozd::run_caustic_cardinality_suite());
  append(bozd::run_boundedness_suite());
  bool all_ok = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail
              << "\n";
    all_ok = all_ok && r.passed;
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "bozd: dispersive shock profiles of the Benjamin-Ono equation with "
      "rational initial data (exact determinantal solution, zero-dispersion "
      "profile, and verification tools)"};
  app.require_subcommand(1);

  CommonArgs common;
  app.add_option("--data", common.dataset,
                 "named dataset (lorentzian, two-pole) or JSON file");
  app.add_option("--out", common.outdir, "output directory");

  double t = 1.0, x = 0.0, x0 = -5.0, x1 = 5.0, epsilon = 0.0625;
  double t0 = 0.01, t1 = 4.0, heat_im_max = 3.0;
  int nx = 401, nt = 120, msN = 8;
  bool with_exact = false, only_ubar = false, heatmap = false;
  std::string suite = "all";

  auto* profile = app.add_subcommand("profile", "zero-dispersion profile CSV");
  profile->add_option("--t", t)->required();
  profile->add_option("--x0", x0)->required();
  profile->add_option("--x1", x1)->required();
  profile->add_option("--nx", nx);
  profile->add_option("--epsilon", epsilon);
  profile->add_flag("--with-exact", with_exact,
                    "also evaluate the exact solution");
  profile->add_flag("--only-ubar", only_ubar, "emit the weak limit only");
  profile->add_flag("--heatmap", heatmap, "emit Re(-ih) heatmap grid");
  profile->add_option("--heat-im-max", heat_im_max);

  auto* exact = app.add_subcommand("exact", "exact solution along an x-grid");
  exact->add_option("--t", t)->required();
  exact->add_option("--x0", x0)->required();
  exact->add_option("--x1", x1)->required();
  exact->add_option("--nx", nx);
  exact->add_option("--epsilon", epsilon)->required();

  auto* zd = app.add_subcommand("zd", "profile with phases and corrections");
  zd->add_option("--t", t)->required();
  zd->add_option("--x0", x0)->required();
  zd->add_option("--x1", x1)->required();
  zd->add_option("--nx", nx);
  zd->add_option("--epsilon", epsilon)->required();

  auto* matsuno = app.add_subcommand("matsuno", "N-soliton reference profile");
  matsuno->add_option("--N", msN)->required();
  matsuno->add_option("--t", t)->required();
  matsuno->add_option("--x0", x0)->required();
  matsuno->add_option("--x1", x1)->required();
  matsuno->add_option("--nx", nx);

  auto* caustics = app.add_subcommand("caustics", "caustic curves and J-map");
  caustics->add_option("--t0", t0);
  caustics->add_option("--t1", t1);
  caustics->add_option("--x0", x0)->required();
  caustics->add_option("--x1", x1)->required();
  caustics->add_option("--nt", nt);
  caustics->add_option("--nx", nx);

  auto* stokes = app.add_subcommand("stokes-trace",
                                    "contour and level-curve diagnostics");
  stokes->add_option("--t", t)->required();
  stokes->add_option("--x", x)->required();
  stokes->add_option("--epsilon", epsilon);

  auto* verify = app.add_subcommand("verify", "verification suites");
  verify->add_option("--suite", suite,
                     "paper-table, identities, matsuno-cross, slope, l2, "
                     "contours, or all");

  auto* selftest = app.add_subcommand("selftest", "fast internal checks");
  (void)selftest;

  CLI11_PARSE(app, argc, argv);

  try {
    if (profile->parsed())
      return run_profile(common, t, x0, x1, nx, epsilon, with_exact, only_ubar,
                         heatmap, heat_im_max);
    if (exact->parsed()) return run_exact(common, t, x0, x1, nx, epsilon);
    if (zd->parsed()) return run_zd(common, t, x0, x1, nx, epsilon);
    if (matsuno->parsed()) return run_matsuno_cmd(common, msN, t, x0, x1, nx);
    if (caustics->parsed())
      return run_caustics(common, t0, t1, x0, x1, nt, nx);
    if (stokes->parsed()) return run_stokes_trace(common, t, x, epsilon);
    if (verify->parsed()) return run_verify(common, suite);
    if (selftest->parsed()) return run_selftest(common);
  } catch (const bozd::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const bozd::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
