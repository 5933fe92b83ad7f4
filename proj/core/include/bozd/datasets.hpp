#pragma once

#include "bozd/rational.hpp"

namespace bozd {

// Bundled reference datasets used by the verification suites and the CLI.

// u0(x) = 2/(1+x^2): single pole at i with residue -i. Admits the independent
// N-soliton evaluation at eps = 1/N.
inline RationalInitialData dataset_lorentzian() {
  RationalInitialData d;
  d.poles = {Complex(0.0, 1.0)};
  d.residues = {Complex(0.0, -1.0)};
  return d;
}

// Two-pole sample with well-separated caustic systems; the standard fixture
// for multi-branch sweeps.
inline RationalInitialData dataset_two_pole() {
  RationalInitialData d;
  d.poles = {Complex(0.0, 1.0), Complex(16.0, 1.0)};
  d.residues = {Complex(1.0, -1.0), Complex(1.0, 1.0 / std::sqrt(2.0))};
  return d;
}

}  // namespace bozd
