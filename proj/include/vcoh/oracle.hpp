// Direct numerical integration of the memory-kernel amplitude equations
//
//   dD_m/dt = - sum_n int_0^t f_mn(t - t') D_n(t') dt',   m, n in {A, B}
//
// used as an independent check of the closed-form propagators.
#pragma once

#include <string>
#include <vector>

#include "vcoh/types.hpp"

namespace vcoh {

enum class OracleMethod {
  /// The exponential kernel turns the history integral into an auxiliary
  /// variable F_m with dF_m/dt = D_m - (kappa + i delta) F_m; classical RK4.
  Rk4Auxiliary,
  /// Trapezoidal quadrature of the full history at every step, O(N^2).
  TrapezoidVolterra,
};

const char* toString(OracleMethod method);

struct OracleConfig {
  double stepSize = 0.0;  // <= 0 selects defaultStepSize()
  OracleMethod method = OracleMethod::Rk4Auxiliary;
  double maxTime = 10.0;
  int outputStride = 1;  // record every n-th step (the final step is always recorded)
};

/// 1e-3 / max(gamma0, kappa, |delta|, 1) for RK4, 1e-2 / (same) for the
/// quadrature method.
double defaultStepSize(const SystemParams& params, OracleMethod method);

struct AmplitudeSeries {
  std::vector<double> times;
  std::vector<AmplitudeVector> values;
};

/// Integrates from t = 0 to cfg.maxTime. The step is shrunk, if needed, so an
/// integer number of steps ends exactly on maxTime. Throws Error(NonFinite) if
/// the integration blows up.
AmplitudeSeries oracleIntegrate(const AmplitudeVector& initial, const SystemParams& params,
                                const OracleConfig& cfg);

struct CompareReport {
  OracleMethod method = OracleMethod::Rk4Auxiliary;
  double stepSize = 0.0;
  double maxAbsError = 0.0;
  double worstTime = 0.0;
  double tolerance = 1e-6;
  bool flagged() const { return !(maxAbsError <= tolerance); }
};

/// Largest |closed form - oracle| over the recorded grid and the A, B components.
CompareReport compareClosedForm(const AmplitudeVector& initial, const SystemParams& params,
                                const OracleConfig& cfg, double tolerance = 1e-6);

}  // namespace vcoh
