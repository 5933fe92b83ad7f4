#pragma once

#include <stdexcept>
#include <string>

namespace bozd {

// Base class for all failures raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PoleHit : Error {
  explicit PoleHit(const std::string& msg) : Error("pole hit: " + msg) {}
};

struct NonPositiveTime : Error {
  explicit NonPositiveTime(double t)
      : Error("t must be positive, got t=" + std::to_string(t)) {}
};

// (t,x) too close to the discriminant locus for reliable branch labeling.
struct NearCaustic : Error {
  explicit NearCaustic(const std::string& msg) : Error("near caustic: " + msg) {}
};

struct RootFindingFailure : Error {
  explicit RootFindingFailure(const std::string& msg)
      : Error("root finding failed: " + msg) {}
};

struct NonPositiveModulus : Error {
  explicit NonPositiveModulus(const std::string& msg)
      : Error("gamma modulus not positive: " + msg) {}
};

struct SingularM : Error {
  explicit SingularM(const std::string& msg)
      : Error("modulation matrix singular: " + msg) {}
};

struct SingularB : Error {
  explicit SingularB(const std::string& msg)
      : Error("denominator determinant vanished: " + msg) {}
};

struct SingularResolvent : Error {
  explicit SingularResolvent(const std::string& msg)
      : Error("resolvent singular: " + msg) {}
};

struct QuadratureFailure : Error {
  explicit QuadratureFailure(const std::string& msg)
      : Error("quadrature failed: " + msg) {}
};

struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& msg)
      : Error("trace budget exceeded: " + msg) {}
};

struct DegenerateSaddle : Error {
  explicit DegenerateSaddle(const std::string& msg)
      : Error("degenerate saddle: " + msg) {}
};

struct ContourConstructionFailure : Error {
  explicit ContourConstructionFailure(const std::string& msg)
      : Error("contour construction failed: " + msg) {}
};

struct InsufficientData : Error {
  explicit InsufficientData(const std::string& msg)
      : Error("insufficient data: " + msg) {}
};

struct JTooLarge : Error {
  explicit JTooLarge(const std::string& msg) : Error("J too large: " + msg) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error("config: " + msg) {}
};

}  // namespace bozd
