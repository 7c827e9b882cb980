// Parameter sweeps over a base scenario.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vcoh/events.hpp"
#include "vcoh/scenario.hpp"

namespace vcoh {

/// Declared in row-major order: the first axis varies slowest.
enum class SweepAxis { GammaRatio, Delta, Theta, P, Pr, Alpha, Beta };

const char* toString(SweepAxis axis);
SweepAxis sweepAxisFromString(const std::string& name);

struct SweepSpec {
  Scenario base;
  std::vector<std::pair<SweepAxis, std::vector<double>>> axes;
};

struct SweepRow {
  std::vector<double> values;  // one per axis, in SweepSpec order
  double steadyValue = 0.0;    // NaN when no steady value was detected
  double firstPeak = 0.0;      // NaN without births
  double firstPeakTime = 0.0;  // NaN without births
  int deathCount = 0;
  int birthCount = 0;
  double tHalf = 0.0;  // first time xi <= 0.5, NaN if never
};

struct SweepTable {
  std::vector<SweepAxis> axes;
  std::vector<SweepRow> rows;
};

/// Applies one axis value to a scenario. GammaRatio sets gamma0 = ratio * kappa,
/// P sets p = q, Pr sets pr = qr; Alpha and Beta need a phase-form initial state.
void applyAxis(Scenario& s, SweepAxis axis, double value);

/// Axes are sorted into the canonical SweepAxis order; rows enumerate the grid
/// lexicographically, each value list in the given order. Throws
/// Error(InvalidArgument) for an empty grid or a repeated axis.
SweepTable runSweep(const SweepSpec& spec);

/// Summary row for a single scenario.
SweepRow summarize(const CoherenceSeries& series, const EventReport& events);

/// Base scenario keys plus `sweep.<axis> = v1, v2, ...` lines.
SweepSpec parseSweepSpec(std::string_view text);
SweepSpec loadSweepFile(const std::string& path);

/// Header: axis names, steady_value, first_peak, first_peak_time, death_count,
/// birth_count, t_half.
void writeSweepCsv(std::ostream& os, const SweepTable& table);

}  // namespace vcoh
