// Coherence sudden death / sudden birth detection on sampled series.
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "vcoh/scenario.hpp"

namespace vcoh {

struct DeathEvent {
  double tEnter = 0.0;
  double tExit = 0.0;
};

struct BirthEvent {
  double tBirth = 0.0;
  double peakValue = 0.0;
  double tPeak = 0.0;
};

struct EventReport {
  std::vector<DeathEvent> deaths;
  std::vector<BirthEvent> births;
  std::optional<double> steadyValue;
};

struct EventThresholds {
  double deathLevel = 1e-3;       // xi below this counts as dead
  double hysteresis = 10.0;       // alive again above hysteresis * deathLevel
  double steadyWindow = 0.05;     // trailing fraction of samples
  double steadyRelSpread = 1e-3;  // (max - min) / |mean| inside the window
};

/// A death is entered when xi drops below deathLevel after having exceeded
/// hysteresis * deathLevel, and is only reported once xi climbs back above
/// that upper level (the birth). A series that starts below deathLevel is
/// dead from t = 0, so its first rise is a birth without a matching death.
/// Crossing times are linearly interpolated; peaks get a parabolic refinement.
EventReport detectEvents(std::span<const double> times, std::span<const double> xi,
                         const EventThresholds& thr = {});
EventReport detectEvents(const CoherenceSeries& series, const EventThresholds& thr = {});

/// Samples the scenario on its grid, then relocates every sampled local
/// extremum of xi on the closed form (Brent search between the neighbouring
/// samples) before detection. Cusp-like dips narrower than the grid spacing
/// are found this way, and peak values are exact rather than parabolic.
EventReport detectEvents(const Scenario& scenario, const EventThresholds& thr = {});

/// First time xi falls to `level` or below (interpolated), if ever.
std::optional<double> firstCrossingBelow(std::span<const double> times,
                                         std::span<const double> xi, double level);

}  // namespace vcoh
