#include "bozd/quadrature.hpp"

#include <cmath>
#include <vector>

#include "bozd/errors.hpp"

namespace bozd {

using Complex = std::complex<double>;

namespace {

// QUADPACK 15-point Kronrod extension of 7-point Gauss, nodes in [0,1).
const double kGK15X[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
const double kGK15WK[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
const double kGK15WG[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

const double kGL8X[4] = {0.183434642495649804939476142360184,
                         0.525532409916328985817739049189246,
                         0.796666477413626739591553936475830,
                         0.960289856497536231683560868569473};
const double kGL8W[4] = {0.362683783378361982965150449277196,
                         0.313706645877887287337962201986601,
                         0.222381034453374470544355994426241,
                         0.101228536290376259152531354309962};

const double kGL16X[8] = {0.095012509837637440185319335424958,
                          0.281603550779258913230460501460496,
                          0.458016777657227386342419442983578,
                          0.617876244402643748446671764048791,
                          0.755404408355003033895101194847442,
                          0.865631202387831743880467897712393,
                          0.944575023073232576077988415534608,
                          0.989400934991649932596154173450333};
const double kGL16W[8] = {0.189450610455068496285396723208283,
                          0.182603415044923588866763667969220,
                          0.169156519395002538189312079030360,
                          0.149595988816576732081501730547478,
                          0.124628971255533872052476282192016,
                          0.095158511682492784809925107602246,
                          0.062253523938647892862843836994378,
                          0.027152459411754094851780572456018};

struct Panel {
  double a, b;
  Complex val;
  double err;
  int depth;
};

}  // namespace

Complex gauss_kronrod_15(const std::function<Complex(double)>& f, double a,
                         double b, double* err) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  Complex k15(0.0, 0.0), g7(0.0, 0.0);
  for (int i = 0; i < 7; ++i) {
    const Complex fsum = f(c - h * kGK15X[i]) + f(c + h * kGK15X[i]);
    k15 += kGK15WK[i] * fsum;
    if (i == 1) g7 += kGK15WG[0] * fsum;
    if (i == 3) g7 += kGK15WG[1] * fsum;
    if (i == 5) g7 += kGK15WG[2] * fsum;
  }
  const Complex fc = f(c);
  k15 = (k15 + kGK15WK[7] * fc) * h;
  g7 = (g7 + kGK15WG[3] * fc) * h;
  if (err) *err = std::abs(k15 - g7);
  return k15;
}

Complex integrate_adaptive(const std::function<Complex(double)>& f, double a,
                           double b, double rel_tol, double floor_abs,
                           int max_depth) {
  double err0 = 0.0;
  Complex whole = gauss_kronrod_15(f, a, b, &err0);
  std::vector<Panel> stack{{a, b, whole, err0, 0}};
  Complex total(0.0, 0.0);
  double total_err = 0.0;
  double total_mag = floor_abs;
  if (std::isfinite(std::abs(whole))) total_mag += std::abs(whole);
  int evals = 1;
  while (!stack.empty()) {
    Panel p = stack.back();
    stack.pop_back();
    const double tol_here =
        rel_tol * std::max(total_mag, 1e-300) * (p.b - p.a) / (b - a);
    const bool finite = std::isfinite(p.err) && std::isfinite(std::abs(p.val));
    if ((finite && p.err <= tol_here) || p.depth >= max_depth) {
      if (p.depth >= max_depth && !(finite && p.err <= 1e3 * tol_here))
        throw QuadratureFailure("panel error " + std::to_string(p.err) +
                                " at depth limit");
      total += p.val;
      total_err += p.err;
      continue;
    }
    const double m = 0.5 * (p.a + p.b);
    double e1, e2;
    const Complex v1 = gauss_kronrod_15(f, p.a, m, &e1);
    const Complex v2 = gauss_kronrod_15(f, m, p.b, &e2);
    evals += 2;
    if (evals > 400000)
      throw QuadratureFailure("refinement budget exhausted");
    const double child_mag = std::abs(v1) + std::abs(v2) + floor_abs;
    if (std::isfinite(child_mag)) total_mag = std::max(total_mag, child_mag);
    stack.push_back({p.a, m, v1, e1, p.depth + 1});
    stack.push_back({m, p.b, v2, e2, p.depth + 1});
  }
  return total;
}

double integrate_adaptive_real(const std::function<double(double)>& f, double a,
                               double b, double rel_tol, double floor_abs,
                               int max_depth) {
  auto g = [&f](double x) { return Complex(f(x), 0.0); };
  return integrate_adaptive(g, a, b, rel_tol, floor_abs, max_depth).real();
}

Complex gauss_legendre(const std::function<Complex(double)>& f, double a,
                       double b, int n) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  Complex sum(0.0, 0.0);
  if (n <= 8) {
    for (int i = 0; i < 4; ++i)
      sum += kGL8W[i] * (f(c - h * kGL8X[i]) + f(c + h * kGL8X[i]));
  } else {
    for (int i = 0; i < 8; ++i)
      sum += kGL16W[i] * (f(c - h * kGL16X[i]) + f(c + h * kGL16X[i]));
  }
  return sum * h;
}

Complex integrate_segment(const std::function<Complex(Complex)>& f, Complex za,
                          Complex zb, int n) {
  const Complex dir = zb - za;
  return dir *
         gauss_legendre([&](double s) { return f(za + s * dir); }, 0.0, 1.0, n);
}

}  // namespace bozd
