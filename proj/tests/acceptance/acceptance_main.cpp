// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each tolerance is pinned here or inside the named suite.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "bozd/verify.hpp"

namespace {

struct Outcome {
  int failures = 0;
  int total = 0;
};

void report(Outcome* outcome, const std::vector<bozd::CriterionResult>& results,
            const char* tag) {
  for (const auto& r : results) {
    ++outcome->total;
    if (!r.passed) ++outcome->failures;
    std::printf("%s [%s] %s: %s\n", r.passed ? "PASS" : "FAIL", tag,
                r.name.c_str(), r.detail.c_str());
    std::fflush(stdout);
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main() {
  Outcome outcome;
  const bozd::SolverConfig config;
  const auto t0 = std::chrono::steady_clock::now();

  report(&outcome, bozd::run_identity_suite(20240801u, 200), "4 identities");
  std::printf("-- %.1fs elapsed\n", seconds_since(t0));

  report(&outcome, bozd::run_caustic_cardinality_suite(7u), "8 caustics");
  report(&outcome, bozd::run_boundedness_suite(), "7 boundedness");
  std::printf("-- %.1fs elapsed\n", seconds_since(t0));

  report(&outcome, bozd::run_matsuno_cross_suite(config), "3 cross-solver");
  std::printf("-- %.1fs elapsed\n", seconds_since(t0));

  report(&outcome, bozd::run_l2_suite(), "6 l2");
  std::printf("-- %.1fs elapsed\n", seconds_since(t0));

  report(&outcome, bozd::run_contour_validity_suite(config), "5 contours");
  std::printf("-- %.1fs elapsed\n", seconds_since(t0));

  report(&outcome, bozd::run_slope_suite(config), "2 slopes");
  std::printf("-- %.1fs elapsed\n", seconds_since(t0));

  report(&outcome, bozd::run_paper_table_suite(config), "1 error-table");
  std::printf("-- %.1fs elapsed\n", seconds_since(t0));

  std::printf("%d/%d acceptance criteria passed (%.1fs)\n",
              outcome.total - outcome.failures, outcome.total,
              seconds_since(t0));
  return outcome.failures == 0 ? 0 : 1;
}
