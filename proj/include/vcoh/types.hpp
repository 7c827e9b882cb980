// Core value types for the V-type atom coherence simulator.
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace vcoh {

using cplx = std::complex<double>;

enum class ErrorCode {
  InvalidArgument = 1,
  UnphysicalState = 2,
  NonFinite = 3,
  Io = 4,
  Parse = 5,
  UnknownFigure = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Rates and couplings of the atom + dissipative cavity.
///
/// gamma0 is the excited-state decay rate, kappa the spectral width of the
/// cavity-environment coupling, delta the atom-cavity detuning and theta the
/// interference parameter between the two decay channels. The cross-channel
/// rate is gamma0 * theta.
struct SystemParams {
  double gamma0 = 1.0;
  double kappa = 1.0;
  double delta = 0.0;
  double theta = 0.0;

  /// Throws Error(InvalidArgument) unless gamma0 > 0, kappa > 0, |theta| <= 1
  /// and delta is finite.
  void validate() const;
};

/// Atomic amplitudes on |A>, |B>, |C>. Whatever probability is missing from
/// the three sits in the reservoir (one excitation in the field continuum).
struct AmplitudeVector {
  cplx dA{};
  cplx dB{};
  cplx dC{};

  double norm2() const { return std::norm(dA) + std::norm(dB) + std::norm(dC); }
  double reservoirWeight() const { return 1.0 - norm2(); }
  bool finite() const;
};

/// G+ and G- propagators of the symmetric / antisymmetric amplitude
/// combinations, and the mixing factors q1 = (G+ + G-)/2, q2 = (G+ - G-)/2.
struct PropagatorPair {
  cplx gPlus{1.0, 0.0};
  cplx gMinus{1.0, 0.0};
  cplx q1{1.0, 0.0};
  cplx q2{0.0, 0.0};

  static PropagatorPair fromPropagators(cplx plus, cplx minus) {
    return {plus, minus, 0.5 * (plus + minus), 0.5 * (plus - minus)};
  }
};

/// Weak measurement strengths (p on |B>, q on |A>) and reversal strengths
/// (pr, qr). All must lie in [0, 1).
struct MeasurementStrengths {
  double p = 0.0;
  double q = 0.0;
  double pr = 0.0;
  double qr = 0.0;

  static MeasurementStrengths symmetric(double weak, double reversal) {
    return {weak, weak, reversal, reversal};
  }
  bool isZero() const { return p == 0.0 && q == 0.0 && pr == 0.0 && qr == 0.0; }
  void validate() const;
};

}  // namespace vcoh
