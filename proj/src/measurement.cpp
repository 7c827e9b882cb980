#include "vcoh/measurement.hpp"

#include <cmath>
#include <sstream>

#include "vcoh/dynamics.hpp"

namespace vcoh {
namespace {

constexpr double kNormTol = 1e-10;

void requireNormalized(const AmplitudeVector& amp) {
  if (!amp.finite()) throw Error(ErrorCode::NonFinite, "non-finite amplitude");
  if (std::abs(amp.norm2() - 1.0) > kNormTol) {
    std::ostringstream os;
    os << "initial amplitudes must be normalized (squared norm " << amp.norm2() << ")";
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
}

}  // namespace

AmplitudeVector applyWeakMeasurement(const AmplitudeVector& amp,
                                     const MeasurementStrengths& strengths) {
  strengths.validate();
  requireNormalized(amp);
  return {amp.dA * std::sqrt(1.0 - strengths.q), amp.dB * std::sqrt(1.0 - strengths.p), amp.dC};
}

double normalizationFactor(const AmplitudeVector& amp, const MeasurementStrengths& strengths) {
  strengths.validate();
  if (!amp.finite()) throw Error(ErrorCode::NonFinite, "non-finite amplitude");
  const double keepA = 1.0 - strengths.pr;
  const double keepB = 1.0 - strengths.qr;
  const double c1 = (amp.reservoirWeight() + std::norm(amp.dC)) * keepA * keepB +
                    std::norm(amp.dB) * keepB + std::norm(amp.dA) * keepA;
  if (!(c1 > 0.0)) {
    std::ostringstream os;
    os << "reversal normalization factor " << c1 << " is not positive";
    throw Error(ErrorCode::UnphysicalState, os.str());
  }
  return c1;
}

DensityMatrix3 applyReversal(const AmplitudeVector& amp, const MeasurementStrengths& strengths) {
  const double c1 = normalizationFactor(amp, strengths);
  // Diagonal of the reversal operator in the {C, B, A} order.
  const double mA = std::sqrt(1.0 - strengths.pr);
  const double mB = std::sqrt(1.0 - strengths.qr);
  const double mC = mA * mB;

  DensityMatrix3 rho = densityFromAmplitudes(amp);
  const double diag[3] = {mC, mB, mA};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) rho(i, j) *= diag[i] * diag[j] / c1;
  return rho;
}

DensityMatrix3 protocolState(const AmplitudeVector& initial, const SystemParams& params,
                             const MeasurementStrengths& strengths, double t) {
  params.validate();
  const AmplitudeVector measured = applyWeakMeasurement(initial, strengths);
  return applyReversal(evolveAmplitudes(measured, params, t), strengths);
}

DensityMatrix3 asymptoticProtocolState(const AmplitudeVector& initial, const SystemParams& params,
                                       const MeasurementStrengths& strengths) {
  params.validate();
  const AmplitudeVector measured = applyWeakMeasurement(initial, strengths);
  return applyReversal(asymptoticAmplitudes(measured, params), strengths);
}

}  // namespace vcoh
