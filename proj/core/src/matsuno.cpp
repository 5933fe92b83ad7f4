#include "bozd/matsuno.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace bozd {

void laguerre_eval(int N, double x, double* value, double* deriv) {
  double lm1 = 1.0, l = 1.0 - x;  // L_0, L_1
  if (N == 0) {
    *value = 1.0;
    *deriv = 0.0;
    return;
  }
  for (int k = 1; k < N; ++k) {
    const double lp1 = ((2.0 * k + 1.0 - x) * l - k * lm1) / (k + 1.0);
    lm1 = l;
    l = lp1;
  }
  *value = l;
  // x L_N'(x) = N (L_N(x) - L_{N-1}(x))
  *deriv = (x != 0.0) ? N * (l - lm1) / x : -static_cast<double>(N);
}

std::vector<double> laguerre_zeros(int N) {
  if (N < 1) throw ConfigError("laguerre_zeros needs N >= 1");
  // Jacobi matrix of the Laguerre recurrence: diag 2k+1, off-diag k.
  Eigen::VectorXd diag(N), sub(std::max(0, N - 1));
  for (int k = 0; k < N; ++k) diag[k] = 2.0 * k + 1.0;
  for (int k = 1; k < N; ++k) sub[k - 1] = k;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  std::vector<double> xi(solver.eigenvalues().data(),
                         solver.eigenvalues().data() + N);
  for (double& x : xi) {
    for (int it = 0; it < 50; ++it) {
      double v, d;
      laguerre_eval(N, x, &v, &d);
      if (d == 0.0) break;
      const double step = v / d;
      x -= step;
      if (std::abs(step) < 1e-15 * (1.0 + std::abs(x))) break;
    }
  }
  return xi;
}

MatsunoSpec MatsunoSpec::make(int N) {
  MatsunoSpec spec;
  spec.N = N;
  spec.epsilon = 1.0 / N;
  const auto xi = laguerre_zeros(N);
  spec.lambdas.resize(N);
  for (int j = 0; j < N; ++j) spec.lambdas[j] = -0.5 * spec.epsilon * xi[j];
  return spec;
}

double u_matsuno(const MatsunoSpec& spec, double t, double x) {
  const int N = spec.N;
  const double eps = spec.epsilon;
  const auto& lam = spec.lambdas;

  Eigen::MatrixXcd K(N, N);  // I + (i/eps) A
  for (int j = 0; j < N; ++j) {
    for (int k = 0; k < N; ++k) {
      if (j == k) {
        const double ajj = -2.0 * lam[j] * (x + 2.0 * lam[j] * t);
        K(j, j) = Complex(1.0, ajj / eps);
      } else {
        // A_jk = 2 i eps sqrt(lam_j lam_k)/(lam_j - lam_k); the lambdas are
        // negative so the square root of the product is real positive, and
        // (i/eps) A_jk is real.
        K(j, k) = -2.0 * std::sqrt(lam[j] * lam[k]) / (lam[j] - lam[k]);
      }
    }
  }

  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(K);
  double hadamard = 1.0;
  for (int r = 0; r < N; ++r) hadamard *= K.row(r).norm();
  if (!(std::abs(lu.determinant()) > 1e-300 * hadamard))
    throw SingularResolvent("I + (i/eps) A lost invertibility numerically");

  // dA/dx = diag(-2 lam_j); only the diagonal of the inverse enters the trace.
  const Eigen::MatrixXcd inv = lu.solve(Eigen::MatrixXcd::Identity(N, N));
  Complex trace(0.0, 0.0);
  for (int j = 0; j < N; ++j)
    trace += inv(j, j) * Complex(0.0, -2.0 * lam[j] / eps);
  return 2.0 * eps * trace.imag();
}

}  // namespace bozd
