#include "bozd/multiphase.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "bozd/zd_profile.hpp"

namespace bozd {

std::vector<double> jphase_gamma_modulus(const std::vector<double>& R) {
  if (R.empty() || R.size() % 2 == 0)
    throw ConfigError("R must have odd length 2J+1");
  const int J = (static_cast<int>(R.size()) - 1) / 2;
  for (size_t k = 0; k + 1 < R.size(); ++k)
    if (!(R[k] < R[k + 1])) throw ConfigError("R must be strictly increasing");
  std::vector<double> out(J);
  for (int j = 1; j <= J; ++j) {
    double num = R[2 * j] - R[0];
    for (int k = 1; k <= J; ++k)
      if (k != j) num *= R[2 * j - 1] - R[2 * k - 1];
    for (int i = 1; i <= J; ++i)
      if (i != j) num *= R[2 * j] - R[2 * i];
    double den = R[2 * j - 1] - R[0];
    for (int k = 1; k <= J; ++k) den *= R[2 * j] - R[2 * k - 1];
    for (int i = 1; i <= J; ++i) den *= R[2 * j - 1] - R[2 * i];
    const double g2 = -num / den;
    if (!(g2 > 0.0))
      throw NonPositiveModulus("constraint gave |gamma|^2 = " +
                               std::to_string(g2));
    out[j - 1] = std::sqrt(g2);
  }
  return out;
}

void JPhaseSpec::validate(double tol) const {
  if (R.size() != 2 * gamma.size() + 1)
    throw ConfigError("R size must be 2J+1 for J = gamma size");
  if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");
  const auto mods = jphase_gamma_modulus(R);
  for (int j = 0; j < J(); ++j) {
    const double m = std::abs(gamma[j]);
    if (!(m > 0.0)) throw ConfigError("gamma must be nonzero");
    if (std::abs(m - mods[j]) > tol * (1.0 + mods[j]))
      throw ConfigError("|gamma_" + std::to_string(j + 1) +
                        "| violates the modulus constraint: got " +
                        std::to_string(m) + ", need " + std::to_string(mods[j]));
  }
}

JPhaseSpec make_jphase_spec(const std::vector<double>& R,
                            const std::vector<double>& phases, double epsilon) {
  const auto mods = jphase_gamma_modulus(R);
  if (phases.size() != mods.size())
    throw ConfigError("need exactly J phases");
  JPhaseSpec spec;
  spec.R = R;
  spec.epsilon = epsilon;
  spec.gamma.resize(mods.size());
  for (size_t j = 0; j < mods.size(); ++j)
    spec.gamma[j] = mods[j] * std::polar(1.0, phases[j]);
  spec.validate();
  return spec;
}

double jphase_u(const JPhaseSpec& spec, double t, double x) {
  const int J = spec.J();
  const auto& R = spec.R;
  Eigen::MatrixXcd M(J, J), dM = Eigen::MatrixXcd::Zero(J, J);
  for (int j = 1; j <= J; ++j) {
    for (int k = 1; k <= J; ++k)
      M(j - 1, k - 1) = 1.0 / (R[2 * j - 1] - R[2 * k]);
    const double kap = R[2 * j - 1] - R[2 * j];
    const double theta =
        kap * x - (R[2 * j - 1] * R[2 * j - 1] - R[2 * j] * R[2 * j]) * t;
    const Complex fast = std::polar(1.0, theta / spec.epsilon);
    M(j - 1, j - 1) += spec.gamma[j - 1] * fast;
    dM(j - 1, j - 1) =
        spec.gamma[j - 1] * Complex(0.0, kap / spec.epsilon) * fast;
  }
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(M);
  double hadamard = 1.0;
  for (int r = 0; r < J; ++r) hadamard *= M.row(r).norm();
  if (!(std::abs(lu.determinant()) > 1e-12 * hadamard))
    throw SingularM("J-phase matrix determinant vanished");
  double u = R[0];
  for (int j = 1; j <= J; ++j) u += R[2 * j - 1] - R[2 * j];
  return u - 2.0 * spec.epsilon * lu.solve(dM).trace().imag();
}

double periodic_wave(double M, double r, double a, double alpha, double epsilon,
                     double t, double x) {
  if (!(M > 0.0) || !(r > 0.0 && r < 1.0))
    throw ConfigError("periodic wave requires M>0 and 0<r<1");
  const double cr = M * (1.0 + r * r) / (1.0 - r * r);
  return M * periodic_profile_Ur(r, M * (x - cr * t) / epsilon + alpha) + a;
}

}  // namespace bozd
