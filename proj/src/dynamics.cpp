#include "vcoh/dynamics.hpp"

#include <cmath>

namespace vcoh {
namespace {

constexpr double kSeriesThreshold = 1e-6;
// Beyond this |Re(R t/2)| cosh/sinh are replaced by decaying exponentials.
constexpr double kExpFormThreshold = 20.0;

cplx decayConstant(const SystemParams& params) { return {params.kappa, params.delta}; }

double branchCoupling(const SystemParams& params, Branch branch) {
  const double sign = branch == Branch::Plus ? 1.0 : -1.0;
  return 2.0 * params.gamma0 * (1.0 + sign * params.theta) * params.kappa;
}

}  // namespace

cplx complexRate(const SystemParams& params, Branch branch) {
  const cplx s = decayConstant(params);
  return std::sqrt(s * s - branchCoupling(params, branch));
}

KernelValue memoryKernel(const SystemParams& params, double tau) {
  const cplx f = 0.5 * params.gamma0 * params.kappa * std::exp(-decayConstant(params) * tau);
  return {f, params.theta * f};
}

cplx branchPropagator(cplx s, cplx rate, double t) {
  const cplx x = 0.5 * rate * t;
  const cplx half = 0.5 * s * t;
  if (std::abs(x) < kSeriesThreshold) {
    // cosh x + half * sinh(x)/x to second order in x; the O(x^4) remainder is
    // below double resolution at this threshold.
    const cplx x2 = x * x;
    return std::exp(-half) * (1.0 + half + x2 * (0.5 + half / 6.0));
  }
  const cplx ratio = s / rate;
  if (std::abs(x.real()) > kExpFormThreshold) {
    return 0.5 * (1.0 + ratio) * std::exp(x - half) + 0.5 * (1.0 - ratio) * std::exp(-x - half);
  }
  return std::exp(-half) * (std::cosh(x) + ratio * std::sinh(x));
}

PropagatorPair propagatorWithRates(const SystemParams& params, cplx ratePlus, cplx rateMinus,
                                   double t) {
  const cplx s = decayConstant(params);
  return PropagatorPair::fromPropagators(branchPropagator(s, ratePlus, t),
                                         branchPropagator(s, rateMinus, t));
}

PropagatorPair propagator(const SystemParams& params, double t) {
  if (!(t >= 0.0)) throw Error(ErrorCode::InvalidArgument, "propagator requires t >= 0");
  return propagatorWithRates(params, complexRate(params, Branch::Plus),
                             complexRate(params, Branch::Minus), t);
}

AmplitudeVector evolveAmplitudes(const AmplitudeVector& initial, const SystemParams& params,
                                 double t) {
  const PropagatorPair g = propagator(params, t);
  return {g.q1 * initial.dA + g.q2 * initial.dB, g.q2 * initial.dA + g.q1 * initial.dB,
          initial.dC};
}

PropagatorPair asymptoticPropagator(const SystemParams& params) {
  auto limit = [&](Branch b) { return branchCoupling(params, b) == 0.0 ? cplx{1.0} : cplx{0.0}; };
  return PropagatorPair::fromPropagators(limit(Branch::Plus), limit(Branch::Minus));
}

AmplitudeVector asymptoticAmplitudes(const AmplitudeVector& initial, const SystemParams& params) {
  const PropagatorPair g = asymptoticPropagator(params);
  return {g.q1 * initial.dA + g.q2 * initial.dB, g.q2 * initial.dA + g.q1 * initial.dB,
          initial.dC};
}

}  // namespace vcoh
