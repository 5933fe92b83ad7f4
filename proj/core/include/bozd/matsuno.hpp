#pragma once

#include <vector>

#include "bozd/rational.hpp"

namespace bozd {

// N-soliton evaluation of the solution with u0(x) = 2/(1+x^2) at eps = 1/N.
struct MatsunoSpec {
  int N = 1;
  double epsilon = 1.0;          // 1/N
  std::vector<double> lambdas;   // negative soliton eigenvalues, lambda_j = -(eps/2) xi_j

  static MatsunoSpec make(int N);
};

// Positive zeros of the degree-N Laguerre polynomial L_N, by Golub-Welsch on
// the symmetric Jacobi matrix followed by Newton polishing on the recurrence.
std::vector<double> laguerre_zeros(int N);

// Laguerre L_N(x) and derivative via the three-term recurrence.
void laguerre_eval(int N, double x, double* value, double* deriv);

// u(t,x;1/N) = 2 eps Im tr[(I + (i/eps) A)^{-1} (i/eps) dA/dx] with A the
// Hermitian soliton matrix. Throws SingularResolvent only on numerical
// breakdown (the Hermitian structure rules it out mathematically).
double u_matsuno(const MatsunoSpec& spec, double t, double x);

}  // namespace bozd
