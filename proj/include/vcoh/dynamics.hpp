// Closed-form evolution of the excited-state amplitudes.
#pragma once

#include "vcoh/types.hpp"

namespace vcoh {

enum class Branch { Plus, Minus };

struct KernelValue {
  cplx f;       // same-channel kernel f_AA = f_BB
  cplx fCross;  // cross-channel kernel f_AB = f_BA = theta * f
};

/// Principal square root of (kappa + i delta)^2 - 2 gamma0 (1 +- theta) kappa.
cplx complexRate(const SystemParams& params, Branch branch);

/// Memory kernel of the Lorentzian reservoir at lag tau >= 0:
/// f(tau) = (gamma0 kappa / 2) exp(-(kappa + i delta) tau).
KernelValue memoryKernel(const SystemParams& params, double tau);

/// G+(t), G-(t) and the mixing factors q1, q2.
PropagatorPair propagator(const SystemParams& params, double t);

/// Same as propagator() but with caller-supplied rates for the two branches.
/// Used to check that the result does not depend on the square-root branch.
PropagatorPair propagatorWithRates(const SystemParams& params, cplx ratePlus, cplx rateMinus,
                                   double t);

/// Single-branch propagator for the decay constant s = kappa + i delta and rate R:
/// exp(-s t/2) (cosh(R t/2) + (s/R) sinh(R t/2)).
cplx branchPropagator(cplx s, cplx rate, double t);

/// dA(t) = q1 dA(0) + q2 dB(0), dB(t) = q2 dA(0) + q1 dB(0), dC(t) = dC(0).
/// Sub-normalized inputs are propagated unchanged.
AmplitudeVector evolveAmplitudes(const AmplitudeVector& initial, const SystemParams& params,
                                 double t);

/// t -> infinity limit of propagator(): a branch survives (G = 1) only when its
/// coupling 2 gamma0 (1 +- theta) kappa vanishes, otherwise it decays to 0.
PropagatorPair asymptoticPropagator(const SystemParams& params);

AmplitudeVector asymptoticAmplitudes(const AmplitudeVector& initial, const SystemParams& params);

}  // namespace vcoh
