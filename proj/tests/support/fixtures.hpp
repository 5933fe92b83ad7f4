#pragma once

#include <random>

#include "bozd/branches.hpp"
#include "bozd/datasets.hpp"

namespace bozd::testing {

inline RationalInitialData lorentzian() { return dataset_lorentzian(); }
inline RationalInitialData two_pole() { return dataset_two_pole(); }

inline RationalInitialData random_data(std::mt19937_64& rng, int N) {
  std::uniform_real_distribution<double> re_p(-3.0, 3.0), im_p(0.3, 2.5);
  std::uniform_real_distribution<double> mag(0.2, 1.5);
  std::uniform_int_distribution<int> sign(0, 1);
  RationalInitialData data;
  for (int n = 0; n < N; ++n) {
    data.poles.emplace_back(re_p(rng), im_p(rng));
    data.residues.emplace_back((sign(rng) ? 1.0 : -1.0) * mag(rng),
                               (sign(rng) ? 1.0 : -1.0) * mag(rng));
  }
  data.validate();
  return data;
}

// Off-caustic random evaluation point; retries draws until classification
// succeeds.
inline LaxOleinikPoint random_point(std::mt19937_64& rng,
                                    const RationalInitialData& data,
                                    BranchData* branches = nullptr) {
  std::uniform_real_distribution<double> td(0.1, 3.0), xd(-5.0, 5.0);
  for (int attempt = 0; attempt < 50; ++attempt) {
    const LaxOleinikPoint pt{td(rng), xd(rng)};
    try {
      BranchData b = solve_branches(data, pt);
      if (branches) *branches = std::move(b);
      return pt;
    } catch (const Error&) {
    }
  }
  throw RootFindingFailure("no generic point found (fixture)");
}

// Midpoint of the first maximal run (scanning right) with 3 real roots.
inline double find_j1_x(const RationalInitialData& data, double t, double x0,
                        double x1) {
  double first = std::nan(""), last = std::nan("");
  for (double x = x0; x <= x1; x += 0.01) {
    if (count_real_roots(data, {t, x}) == 3) {
      if (std::isnan(first)) first = x;
      last = x;
    }
  }
  if (std::isnan(first))
    throw RootFindingFailure("no J=1 region found (fixture)");
  return 0.5 * (first + last);
}

// Central finite difference of a scalar function.
template <typename F>
double central_diff(F&& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace bozd::testing
