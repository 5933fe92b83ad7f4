#include "bozd/rational.hpp"

#include <algorithm>
#include <cmath>

namespace bozd {

void RationalInitialData::validate() const {
  if (poles.empty()) throw ConfigError("at least one pole pair is required");
  if (poles.size() != residues.size())
    throw ConfigError("poles and residues must have equal length, got " +
                      std::to_string(poles.size()) + " vs " +
                      std::to_string(residues.size()));
  for (size_t n = 0; n < poles.size(); ++n) {
    if (!(poles[n].imag() > 0.0))
      throw ConfigError("pole " + std::to_string(n) +
                        " must lie in the open upper half-plane (Im > 0)");
    if (residues[n] == Complex(0.0, 0.0))
      throw ConfigError("residue " + std::to_string(n) + " must be nonzero");
  }
  for (size_t n = 0; n < poles.size(); ++n)
    for (size_t m = n + 1; m < poles.size(); ++m)
      if (poles[n] == poles[m])
        throw ConfigError("poles " + std::to_string(n) + " and " +
                          std::to_string(m) + " coincide");
}

double RationalInitialData::scale() const {
  double s = 1.0;
  for (const auto& p : poles) s = std::max(s, std::abs(p));
  for (const auto& c : residues) s = std::max(s, std::abs(c));
  return s;
}

double RationalInitialData::sup_abs_u0() const {
  // Coarse scan over a generous window followed by golden-section refinement
  // around the best samples. u0 -> 0 at infinity, so a finite window suffices.
  double lo = -10.0 * scale(), hi = 10.0 * scale();
  const int m = 4000;
  double best = 0.0, best_x = 0.0;
  for (int k = 0; k <= m; ++k) {
    double x = lo + (hi - lo) * k / m;
    double v = std::abs(eval_u0(*this, x));
    if (v > best) {
      best = v;
      best_x = x;
    }
  }
  double a = best_x - (hi - lo) / m, b = best_x + (hi - lo) / m;
  for (int it = 0; it < 60; ++it) {
    double m1 = a + (b - a) / 3, m2 = b - (b - a) / 3;
    if (std::abs(eval_u0(*this, m1)) < std::abs(eval_u0(*this, m2)))
      a = m1;
    else
      b = m2;
  }
  return std::max(best, std::abs(eval_u0(*this, 0.5 * (a + b))));
}

double eval_u0(const RationalInitialData& data, double x) {
  Complex sum(0.0, 0.0);
  for (size_t n = 0; n < data.poles.size(); ++n) {
    const Complex w = data.residues[n] / (Complex(x, 0.0) - data.poles[n]);
    sum += w + std::conj(w);  // conj pair evaluated exactly
  }
  return sum.real();
}

Complex eval_u0_complex(const RationalInitialData& data, Complex z) {
  Complex sum(0.0, 0.0);
  for (size_t n = 0; n < data.poles.size(); ++n) {
    sum += data.residues[n] / (z - data.poles[n]);
    sum += std::conj(data.residues[n]) / (z - std::conj(data.poles[n]));
  }
  return sum;
}

Complex eval_u0_prime(const RationalInitialData& data, Complex z) {
  const double s = data.scale();
  Complex sum(0.0, 0.0);
  for (size_t n = 0; n < data.poles.size(); ++n) {
    const Complex d1 = z - data.poles[n];
    const Complex d2 = z - std::conj(data.poles[n]);
    if (std::abs(d1) < 1e-13 * s || std::abs(d2) < 1e-13 * s)
      throw PoleHit("u0' evaluated at pole index " + std::to_string(n));
    sum -= data.residues[n] / (d1 * d1);
    sum -= std::conj(data.residues[n]) / (d2 * d2);
  }
  return sum;
}

double eval_h_real(const RationalInitialData& data, const LaxOleinikPoint& pt,
                   double y) {
  if (!(pt.t > 0.0)) throw NonPositiveTime(pt.t);
  double h = (y - pt.x) * (y - pt.x) / (4.0 * pt.t);
  for (size_t n = 0; n < data.poles.size(); ++n) {
    // c Log(y-p) + conj(c) Log(y-conj(p)) = 2 Re[c Log(y-p)] for real y
    h += 2.0 * (data.residues[n] * std::log(Complex(y, 0.0) - data.poles[n])).real();
  }
  return h;
}

Complex eval_h_prime(const RationalInitialData& data, const LaxOleinikPoint& pt,
                     Complex z) {
  if (!(pt.t > 0.0)) throw NonPositiveTime(pt.t);
  const double s = data.scale();
  for (size_t n = 0; n < data.poles.size(); ++n) {
    if (std::abs(z - data.poles[n]) < 1e-13 * s ||
        std::abs(z - std::conj(data.poles[n])) < 1e-13 * s)
      throw PoleHit("h' evaluated at pole index " + std::to_string(n));
  }
  return (z - pt.x) / (2.0 * pt.t) + eval_u0_complex(data, z);
}

Complex eval_h_second(const RationalInitialData& data, const LaxOleinikPoint& pt,
                      Complex z) {
  if (!(pt.t > 0.0)) throw NonPositiveTime(pt.t);
  return 1.0 / (2.0 * pt.t) + eval_u0_prime(data, z);
}

Complex eval_h_principal(const RationalInitialData& data,
                         const LaxOleinikPoint& pt, Complex z) {
  if (!(pt.t > 0.0)) throw NonPositiveTime(pt.t);
  Complex h = (z - pt.x) * (z - pt.x) / (4.0 * pt.t);
  for (size_t n = 0; n < data.poles.size(); ++n) {
    h += data.residues[n] * std::log(z - data.poles[n]);
    h += std::conj(data.residues[n]) * std::log(z - std::conj(data.poles[n]));
  }
  return h;
}

}  // namespace bozd
