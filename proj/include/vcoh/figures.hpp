// Parameter table for the reference coherence figures and their reproduction.
#pragma once

#include <string>
#include <vector>

#include "vcoh/scenario.hpp"

namespace vcoh {

enum class NamedState { MaximalCoherent, PartialCoherent, ExcitedB };

/// (sqrt2/2, sqrt2/2, 0), (1/2, sqrt3/2, 0) and (0, 1, 0) as (dA, dB, dC).
AmplitudeVector namedState(NamedState s);
const char* toString(NamedState s);

struct Regime {
  const char* name;
  double gamma0;
  double kappa;
  double tMax;
  int numPoints;
};

/// gamma0/kappa = 0.1 with kappa = 1.
Regime weakRegime();
/// gamma0/kappa = 10 with gamma0 = 1.
Regime strongRegime();

struct FigureCurve {
  std::string label;     // e.g. "theta=0.3"
  std::string fileStem;  // e.g. "fig3b_theta_0.3"
  double sweptValue = 0.0;
  Scenario scenario;
};

struct FigureSpec {
  std::string id;
  std::string sweptName;
  std::vector<FigureCurve> curves;
};

/// All ids: 2a, 2b, 3a-3f, 4a-4f, 5a-5f, 6a-6f.
std::vector<std::string> figureIds();

/// Throws Error(UnknownFigure) for ids outside figureIds().
FigureSpec figureSpec(const std::string& id);

/// Writes one CSV per curve plus a gnuplot script fig<id>.gp into outDir
/// (created if missing). Returns the written paths, script last.
std::vector<std::string> reproduceFigure(const std::string& id, const std::string& outDir);

}  // namespace vcoh
