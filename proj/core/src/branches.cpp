#include "bozd/branches.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "bozd/polyroots.hpp"

namespace bozd {

namespace {

std::vector<Complex> poly_mul(const std::vector<Complex>& a,
                              const std::vector<Complex>& b) {
  std::vector<Complex> out(a.size() + b.size() - 1, Complex(0.0, 0.0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

void poly_axpy(std::vector<Complex>& acc, const std::vector<Complex>& p,
               Complex w) {
  // acc += w*p, aligning constant terms (both stored leading-first).
  const size_t off = acc.size() - p.size();
  for (size_t i = 0; i < p.size(); ++i) acc[off + i] += w * p[i];
}

}  // namespace

std::vector<double> characteristic_poly(const RationalInitialData& data,
                                        const LaxOleinikPoint& pt) {
  if (!(pt.t > 0.0)) throw NonPositiveTime(pt.t);
  const int N = data.pair_count();

  // Denominator factors (y - p_n)(y - p_n*), kept complex so the conjugate
  // structure of the residue terms is exercised and then checked.
  std::vector<std::vector<Complex>> fac;
  fac.reserve(2 * N);
  for (int n = 0; n < N; ++n) {
    fac.push_back({Complex(1.0, 0.0), -data.poles[n]});
    fac.push_back({Complex(1.0, 0.0), -std::conj(data.poles[n])});
  }

  // (y - x) * prod_n (y-p_n)(y-p_n*)
  std::vector<Complex> P{Complex(1.0, 0.0), Complex(-pt.x, 0.0)};
  for (const auto& f : fac) P = poly_mul(P, f);

  // + 2t * sum_n [ c_n (y-p_n*) + c_n* (y-p_n) ] * prod_{m != n} (y-p_m)(y-p_m*)
  for (int n = 0; n < N; ++n) {
    std::vector<Complex> rest{Complex(1.0, 0.0)};
    for (int m = 0; m < N; ++m) {
      if (m == n) continue;
      rest = poly_mul(rest, fac[2 * m]);
      rest = poly_mul(rest, fac[2 * m + 1]);
    }
    const Complex c = data.residues[n];
    std::vector<Complex> lin{c + std::conj(c),
                             -c * std::conj(data.poles[n]) -
                                 std::conj(c) * data.poles[n]};
    poly_axpy(P, poly_mul(lin, rest), Complex(2.0 * pt.t, 0.0));
  }

  double scale = 0.0;
  for (const auto& coef : P) scale = std::max(scale, std::abs(coef));
  std::vector<double> out(P.size());
  for (size_t i = 0; i < P.size(); ++i) {
    if (std::abs(P[i].imag()) > 1e-12 * (1.0 + scale))
      throw RootFindingFailure("characteristic coefficients not real");
    out[i] = P[i].real();
  }
  return out;  // leading coefficient is exactly 1
}

namespace {

// Newton polish on the characteristic function itself, f(z) = z - x + 2t u0(z).
Complex polish_on_characteristic(const RationalInitialData& data,
                                 const LaxOleinikPoint& pt, Complex z) {
  for (int it = 0; it < 8; ++it) {
    Complex f, df;
    try {
      f = z - pt.x + 2.0 * pt.t * eval_u0_complex(data, z);
      df = 1.0 + 2.0 * pt.t * eval_u0_prime(data, z);
    } catch (const PoleHit&) {
      return z;
    }
    if (std::abs(df) < 1e-14) break;
    const Complex step = f / df;
    z -= step;
    if (std::abs(step) < 1e-16 * (1.0 + std::abs(z))) break;
  }
  return z;
}

}  // namespace

BranchData solve_branches(const RationalInitialData& data,
                          const LaxOleinikPoint& pt,
                          const BranchSolveOptions& opt) {
  const auto coeffs = characteristic_poly(data, pt);
  auto roots = solve_monic_real(coeffs, opt.warm_start);
  for (auto& r : roots) r = polish_on_characteristic(data, pt, r);

  double max_abs = 1.0;
  for (const auto& r : roots) max_abs = std::max(max_abs, std::abs(r));
  double min_sep = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j)
      min_sep = std::min(min_sep, std::abs(roots[i] - roots[j]));
  if (min_sep < opt.tau_caustic * (1.0 + max_abs))
    throw NearCaustic("min root separation " + std::to_string(min_sep) +
                      " at (t,x)=(" + std::to_string(pt.t) + "," +
                      std::to_string(pt.x) + ")");

  BranchData out;
  out.t = pt.t;
  out.x = pt.x;
  out.min_root_separation = min_sep;
  std::vector<Complex> upper;
  for (const auto& r : roots) {
    if (std::abs(r.imag()) < opt.tau_real * (1.0 + std::abs(r)))
      out.real_roots.push_back(r.real());
    else if (r.imag() > 0.0)
      upper.push_back(r);
  }
  if (out.real_roots.size() % 2 == 0 ||
      out.real_roots.size() + 2 * upper.size() != roots.size())
    throw NearCaustic("ambiguous real/complex classification at (t,x)=(" +
                      std::to_string(pt.t) + "," + std::to_string(pt.x) + ")");

  std::sort(out.real_roots.begin(), out.real_roots.end(),
            std::greater<double>());
  std::sort(upper.begin(), upper.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  out.complex_roots = std::move(upper);
  out.J = (static_cast<int>(out.real_roots.size()) - 1) / 2;

  out.branch_values.reserve(out.real_roots.size());
  for (double y : out.real_roots) out.branch_values.push_back(eval_u0(data, y));
  for (size_t k = 0; k + 1 < out.branch_values.size(); ++k)
    if (!(out.branch_values[k] < out.branch_values[k + 1]))
      throw NearCaustic("branch values not strictly ordered");

  // Root-sum identity: sum of all roots equals x + sum of all poles.
  double lhs = 0.0;
  for (double y : out.real_roots) lhs += y;
  for (const auto& z : out.complex_roots) lhs += 2.0 * z.real();
  double rhs = pt.x;
  for (const auto& p : data.poles) rhs += 2.0 * p.real();
  if (std::abs(lhs - rhs) > 1e-10 * (1.0 + std::abs(rhs) + max_abs))
    throw RootFindingFailure("root-sum identity residual " +
                             std::to_string(std::abs(lhs - rhs)));
  return out;
}

int count_real_roots(const RationalInitialData& data, const LaxOleinikPoint& pt,
                     double tau_real) {
  std::vector<Complex> roots;
  try {
    roots = solve_monic_real(characteristic_poly(data, pt));
  } catch (const RootFindingFailure&) {
    return -1;
  }
  int count = 0;
  for (const auto& r : roots)
    if (std::abs(r.imag()) < tau_real * (1.0 + std::abs(r))) ++count;
  return count;
}

double weak_limit_ubar(const BranchData& branches) {
  double u = 0.0;
  double sign = 1.0;
  for (double v : branches.branch_values) {
    u += sign * v;
    sign = -sign;
  }
  return u;
}

double discriminant_at(const RationalInitialData& data,
                       const LaxOleinikPoint& pt) {
  const auto P = characteristic_poly(data, pt);
  const int d = static_cast<int>(P.size()) - 1;
  std::vector<double> dP(d);
  for (int k = 0; k < d; ++k) dP[k] = P[k] * (d - k);

  // Sylvester matrix of P (degree d) and P' (degree d-1).
  const int m = 2 * d - 1;
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(m, m);
  for (int r = 0; r < d - 1; ++r)
    for (int k = 0; k <= d; ++k) S(r, r + k) = P[k];
  for (int r = 0; r < d; ++r)
    for (int k = 0; k <= d - 1; ++k) S(d - 1 + r, r + k) = dP[k];

  const double res = S.partialPivLu().determinant();
  const double sign = ((d * (d - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
  return sign * res;  // leading coefficient is 1
}

BranchDerivatives branch_derivatives(const RationalInitialData& data,
                                     const LaxOleinikPoint& pt,
                                     const BranchData& branches) {
  BranchDerivatives out;
  out.dx_y.reserve(branches.real_roots.size());
  out.dx_u.reserve(branches.real_roots.size());
  for (double y : branches.real_roots) {
    const double up = eval_u0_prime(data, Complex(y, 0.0)).real();
    const double denom = 1.0 + 2.0 * pt.t * up;
    if (std::abs(denom) < 1e-8)
      throw NearCaustic("1 + 2t u0'(y) vanished at y=" + std::to_string(y));
    out.dx_y.push_back(1.0 / denom);
    out.dx_u.push_back(up / denom);
  }
  return out;
}

BranchData BranchSweeper::solve(const LaxOleinikPoint& pt) {
  BranchSolveOptions opt = opt_;
  opt.warm_start = prev_roots_;
  BranchData result;
  try {
    result = solve_branches(data_, pt, opt);
  } catch (const RootFindingFailure&) {
    opt.warm_start.clear();  // stale warm start; restart cold
    result = solve_branches(data_, pt, opt);
  }
  prev_roots_.clear();
  for (double y : result.real_roots) prev_roots_.push_back(Complex(y, 0.0));
  for (const auto& z : result.complex_roots) {
    prev_roots_.push_back(z);
    prev_roots_.push_back(std::conj(z));
  }
  return result;
}

}  // namespace bozd
