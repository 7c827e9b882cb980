#include "vcoh/verify.hpp"

#include <algorithm>
#include <cmath>

namespace vcoh {

std::vector<VerifyCase> oracleEquivalenceGrid() {
  std::vector<VerifyCase> grid;
  const NamedState states[] = {NamedState::MaximalCoherent, NamedState::PartialCoherent,
                               NamedState::ExcitedB};
  for (const bool strong : {false, true}) {
    const Regime r = strong ? strongRegime() : weakRegime();
    for (double delta : {0.0, 5.0, 10.0, 20.0})
      for (double theta : {0.0, 0.5, 1.0})
        for (NamedState st : states)
          grid.push_back({r.name, st, {r.gamma0, r.kappa, delta, theta}, strong ? 10.0 : 100.0});
  }
  return grid;
}

std::vector<VerifyResult> runOracleEquivalence(OracleMethod method, double tolerance,
                                               double tMaxCap, long maxSamples) {
  std::vector<VerifyResult> out;
  for (VerifyCase c : oracleEquivalenceGrid()) {
    if (tMaxCap > 0.0) c.tMax = std::min(c.tMax, tMaxCap);
    OracleConfig cfg;
    cfg.method = method;
    cfg.maxTime = c.tMax;
    cfg.stepSize = defaultStepSize(c.params, method);
    const double steps = std::ceil(c.tMax / cfg.stepSize);
    cfg.outputStride = static_cast<int>(std::max(1.0, std::ceil(steps / maxSamples)));
    out.push_back({c, compareClosedForm(namedState(c.state), c.params, cfg, tolerance)});
  }
  return out;
}

}  // namespace vcoh
