#include "vcoh/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "vcoh/dynamics.hpp"

namespace vcoh {
namespace {

bool isFinite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

struct Grid {
  long steps;
  double h;
};

Grid makeGrid(const SystemParams& params, const OracleConfig& cfg) {
  if (!(cfg.maxTime > 0.0) || !std::isfinite(cfg.maxTime))
    throw Error(ErrorCode::InvalidArgument, "oracle maxTime must be positive");
  if (cfg.outputStride < 1) throw Error(ErrorCode::InvalidArgument, "outputStride must be >= 1");
  const double requested = cfg.stepSize > 0.0 ? cfg.stepSize : defaultStepSize(params, cfg.method);
  const double n = std::ceil(cfg.maxTime / requested - 1e-9);
  if (n > 1e9) throw Error(ErrorCode::InvalidArgument, "oracle step too small for maxTime");
  const long steps = std::max(1L, static_cast<long>(n));
  return {steps, cfg.maxTime / static_cast<double>(steps)};
}

void record(AmplitudeSeries& out, double t, cplx a, cplx b, cplx c) {
  out.times.push_back(t);
  out.values.push_back({a, b, c});
}

void failNonFinite(double t) {
  throw Error(ErrorCode::NonFinite,
              "oracle produced non-finite amplitudes at t = " + std::to_string(t) +
                  " (step too large?)");
}

AmplitudeSeries integrateRk4(const AmplitudeVector& initial, const SystemParams& params,
                             const Grid& grid, int stride) {
  // y = (D_A, D_B, F_A, F_B)
  using State = std::array<cplx, 4>;
  const double c = 0.5 * params.gamma0 * params.kappa;
  const double theta = params.theta;
  const cplx lambda{-params.kappa, -params.delta};

  auto rhs = [&](const State& y) -> State {
    return {-c * (y[2] + theta * y[3]), -c * (theta * y[2] + y[3]), y[0] + lambda * y[2],
            y[1] + lambda * y[3]};
  };
  auto axpy = [](const State& y, double a, const State& k) {
    State r;
    for (int i = 0; i < 4; ++i) r[i] = y[i] + a * k[i];
    return r;
  };

  AmplitudeSeries out;
  out.times.reserve(static_cast<size_t>(grid.steps / stride + 2));
  out.values.reserve(out.times.capacity());
  State y{initial.dA, initial.dB, 0.0, 0.0};
  record(out, 0.0, y[0], y[1], initial.dC);

  const double h = grid.h;
  for (long n = 1; n <= grid.steps; ++n) {
    const State k1 = rhs(y);
    const State k2 = rhs(axpy(y, 0.5 * h, k1));
    const State k3 = rhs(axpy(y, 0.5 * h, k2));
    const State k4 = rhs(axpy(y, h, k3));
    for (int i = 0; i < 4; ++i) y[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    if (!isFinite(y[0]) || !isFinite(y[1])) failNonFinite(n * h);
    if (n % stride == 0 || n == grid.steps) record(out, n * h, y[0], y[1], initial.dC);
  }
  return out;
}

AmplitudeSeries integrateTrapezoid(const AmplitudeVector& initial, const SystemParams& params,
                                   const Grid& grid, int stride) {
  const long steps = grid.steps;
  const double h = grid.h;
  const double theta = params.theta;

  std::vector<cplx> kernel(static_cast<size_t>(steps + 1));
  for (long j = 0; j <= steps; ++j) kernel[j] = memoryKernel(params, j * h).f;

  std::vector<cplx> histA(static_cast<size_t>(steps + 1));
  std::vector<cplx> histB(static_cast<size_t>(steps + 1));
  histA[0] = initial.dA;
  histB[0] = initial.dB;

  // Implicit part of the trapezoid rule: (1 + c M) D_{n+1} = rhs, M = [[1, theta], [theta, 1]].
  const cplx c = 0.25 * h * h * kernel[0];
  const cplx diag = 1.0 + c;
  const cplx off = c * theta;
  const cplx det = diag * diag - off * off;

  AmplitudeSeries out;
  record(out, 0.0, histA[0], histB[0], initial.dC);

  // History integral I_n = int_0^{t_n} f(t_n - s) D(s) ds, before mixing by M.
  cplx intA = 0.0;
  cplx intB = 0.0;
  for (long n = 0; n < steps; ++n) {
    const long next = n + 1;
    cplx partA = 0.5 * kernel[next] * histA[0];
    cplx partB = 0.5 * kernel[next] * histB[0];
    for (long j = 1; j <= n; ++j) {
      partA += kernel[next - j] * histA[j];
      partB += kernel[next - j] * histB[j];
    }
    partA *= h;
    partB *= h;

    const cplx mixedA = intA + theta * intB + partA + theta * partB;
    const cplx mixedB = theta * intA + intB + theta * partA + partB;
    const cplx rhsA = histA[n] - 0.5 * h * mixedA;
    const cplx rhsB = histB[n] - 0.5 * h * mixedB;
    const cplx a = (diag * rhsA - off * rhsB) / det;
    const cplx b = (diag * rhsB - off * rhsA) / det;
    if (!isFinite(a) || !isFinite(b)) failNonFinite(next * h);
    histA[next] = a;
    histB[next] = b;

    intA = partA + 0.5 * h * kernel[0] * a;
    intB = partB + 0.5 * h * kernel[0] * b;
    if (next % stride == 0 || next == steps) record(out, next * h, a, b, initial.dC);
  }
  return out;
}

}  // namespace

const char* toString(OracleMethod method) {
  return method == OracleMethod::Rk4Auxiliary ? "rk4-auxiliary" : "trapezoid-volterra";
}

double defaultStepSize(const SystemParams& params, OracleMethod method) {
  const double scale =
      std::max({params.gamma0, params.kappa, std::abs(params.delta), 1.0});
  return (method == OracleMethod::Rk4Auxiliary ? 1e-3 : 1e-2) / scale;
}

AmplitudeSeries oracleIntegrate(const AmplitudeVector& initial, const SystemParams& params,
                                const OracleConfig& cfg) {
  params.validate();
  if (!initial.finite()) throw Error(ErrorCode::NonFinite, "non-finite initial amplitudes");
  const Grid grid = makeGrid(params, cfg);
  return cfg.method == OracleMethod::Rk4Auxiliary
             ? integrateRk4(initial, params, grid, cfg.outputStride)
             : integrateTrapezoid(initial, params, grid, cfg.outputStride);
}

CompareReport compareClosedForm(const AmplitudeVector& initial, const SystemParams& params,
                                const OracleConfig& cfg, double tolerance) {
  const Grid grid = makeGrid(params, cfg);
  const AmplitudeSeries series = oracleIntegrate(initial, params, cfg);
  CompareReport report;
  report.method = cfg.method;
  report.stepSize = grid.h;
  report.tolerance = tolerance;
  for (size_t i = 0; i < series.times.size(); ++i) {
    const AmplitudeVector exact = evolveAmplitudes(initial, params, series.times[i]);
    const double err = std::max(std::abs(exact.dA - series.values[i].dA),
                                std::abs(exact.dB - series.values[i].dB));
    if (err > report.maxAbsError) {
      report.maxAbsError = err;
      report.worstTime = series.times[i];
    }
  }
  return report;
}

}  // namespace vcoh
