// Weak measurement before evolution, reversal after it.
//
// The weak measurement scales the excited amplitudes without renormalizing:
// the missing weight is carried as reservoir weight through the evolution and
// is only restored by the normalization that follows the reversal. The
// reversal acts on the 3x3 atomic sector with rho(C,C) holding both the
// ground-state and reservoir populations.
#pragma once

#include "vcoh/state.hpp"
#include "vcoh/types.hpp"

namespace vcoh {

/// dB <- dB sqrt(1-p), dA <- dA sqrt(1-q), dC unchanged. Requires a normalized
/// input (the measurement happens at t = 0, before any decay).
AmplitudeVector applyWeakMeasurement(const AmplitudeVector& amp,
                                     const MeasurementStrengths& strengths);

/// Trace of the reversed (unnormalized) atomic matrix:
/// (w + |dC|^2)(1-pr)(1-qr) + |dB|^2 (1-qr) + |dA|^2 (1-pr), w the reservoir weight.
double normalizationFactor(const AmplitudeVector& amp, const MeasurementStrengths& strengths);

/// Normalized post-reversal density matrix.
DensityMatrix3 applyReversal(const AmplitudeVector& amp, const MeasurementStrengths& strengths);

/// Weak measurement at 0, closed-form evolution to t, reversal at t.
DensityMatrix3 protocolState(const AmplitudeVector& initial, const SystemParams& params,
                             const MeasurementStrengths& strengths, double t);

/// t -> infinity limit of protocolState().
DensityMatrix3 asymptoticProtocolState(const AmplitudeVector& initial, const SystemParams& params,
                                       const MeasurementStrengths& strengths);

}  // namespace vcoh
