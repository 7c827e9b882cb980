#include "vcoh/events.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <cmath>

#include "vcoh/measurement.hpp"

namespace vcoh {
namespace {

double crossingTime(std::span<const double> t, std::span<const double> y, size_t i, double level) {
  if (i == 0) return t[0];
  const double dy = y[i] - y[i - 1];
  if (dy == 0.0) return t[i];
  const double frac = std::clamp((level - y[i - 1]) / dy, 0.0, 1.0);
  return t[i - 1] + frac * (t[i] - t[i - 1]);
}

BirthEvent refinePeak(std::span<const double> t, std::span<const double> y, size_t i,
                      double tBirth) {
  BirthEvent b{tBirth, y[i], t[i]};
  if (i == 0 || i + 1 >= y.size()) return b;
  const double ym = y[i - 1];
  const double y0 = y[i];
  const double yp = y[i + 1];
  const double curv = ym - 2.0 * y0 + yp;
  if (!(curv < 0.0)) return b;
  const double offset = std::clamp(0.5 * (ym - yp) / curv, -1.0, 1.0);
  const double h = offset >= 0.0 ? t[i + 1] - t[i] : t[i] - t[i - 1];
  b.tPeak = t[i] + offset * h;
  b.peakValue = std::max(y0, y0 - 0.25 * (ym - yp) * offset);
  return b;
}

EventReport detectCore(std::span<const double> times, std::span<const double> xi,
                       const EventThresholds& thr, bool parabolicPeaks) {
  if (times.size() != xi.size())
    throw Error(ErrorCode::InvalidArgument, "times and xi differ in length");
  EventReport report;
  const size_t n = xi.size();
  if (n == 0) return report;

  const double lo = thr.deathLevel;
  const double hi = thr.deathLevel * thr.hysteresis;

  bool dead = xi[0] < lo;
  bool armed = xi[0] > hi;
  bool deathCounted = false;  // false for the initial dead stretch
  double tEnter = 0.0;
  double tExit = 0.0;
  bool exited = false;
  std::optional<size_t> birthStart;  // index where the current alive stretch began
  size_t peakIdx = 0;
  double tBirth = 0.0;

  auto closeBirth = [&]() {
    if (birthStart)
      report.births.push_back(parabolicPeaks ? refinePeak(times, xi, peakIdx, tBirth)
                                             : BirthEvent{tBirth, xi[peakIdx], times[peakIdx]});
    birthStart.reset();
  };

  for (size_t i = 1; i < n; ++i) {
    const double v = xi[i];
    if (!dead) {
      if (v > hi) armed = true;
      if (birthStart && v > xi[peakIdx]) peakIdx = i;
      if (armed && v < lo) {
        closeBirth();
        dead = true;
        deathCounted = true;
        tEnter = crossingTime(times, xi, i, lo);
        exited = false;
      }
      continue;
    }
    if (v < lo) {
      exited = false;
    } else if (!exited) {
      tExit = crossingTime(times, xi, i, lo);
      exited = true;
    }
    if (v > hi) {
      if (deathCounted) report.deaths.push_back({tEnter, exited ? tExit : times[i]});
      dead = false;
      armed = true;
      tBirth = crossingTime(times, xi, i, hi);
      birthStart = i;
      peakIdx = i;
    }
  }
  closeBirth();

  const size_t window = std::max<size_t>(2, static_cast<size_t>(std::ceil(thr.steadyWindow * n)));
  if (n >= window) {
    const auto tail = xi.subspan(n - window);
    const auto [mn, mx] = std::minmax_element(tail.begin(), tail.end());
    double mean = 0.0;
    for (double v : tail) mean += v;
    mean /= static_cast<double>(tail.size());
    const double spread = *mx - *mn;
    if (spread < 1e-12 || spread < thr.steadyRelSpread * std::abs(mean)) report.steadyValue = mean;
  }
  return report;
}

}  // namespace

EventReport detectEvents(std::span<const double> times, std::span<const double> xi,
                         const EventThresholds& thr) {
  return detectCore(times, xi, thr, true);
}

EventReport detectEvents(const CoherenceSeries& series, const EventThresholds& thr) {
  std::vector<double> t(series.size());
  std::vector<double> xi(series.size());
  for (size_t i = 0; i < series.size(); ++i) {
    t[i] = series[i].t;
    xi[i] = series[i].xi;
  }
  return detectEvents(t, xi, thr);
}

EventReport detectEvents(const Scenario& scenario, const EventThresholds& thr) {
  const CoherenceSeries series = runScenario(scenario);
  const AmplitudeVector initial = scenario.initial.toAmplitudes();
  auto xiAt = [&](double t) {
    return l1Coherence(protocolState(initial, scenario.params, scenario.strengths, t));
  };

  std::vector<double> t;
  std::vector<double> xi;
  t.reserve(series.size() * 2);
  xi.reserve(series.size() * 2);
  t.push_back(series[0].t);
  xi.push_back(series[0].xi);
  for (size_t i = 1; i + 1 < series.size(); ++i) {
    const double prev = series[i - 1].xi;
    const double here = series[i].xi;
    const double next = series[i + 1].xi;
    const bool isMin = here < prev && here <= next;
    const bool isMax = here > prev && here >= next;
    if (isMin || isMax) {
      const double sign = isMin ? 1.0 : -1.0;
      const auto [tx, fx] = boost::math::tools::brent_find_minima(
          [&](double u) { return sign * xiAt(u); }, series[i - 1].t, series[i + 1].t, 40);
      if (fx < sign * here && tx < series[i].t) {
        t.push_back(tx);
        xi.push_back(sign * fx);
      }
      t.push_back(series[i].t);
      xi.push_back(here);
      if (fx < sign * here && tx > series[i].t) {
        t.push_back(tx);
        xi.push_back(sign * fx);
      }
      continue;
    }
    t.push_back(series[i].t);
    xi.push_back(here);
  }
  if (series.size() > 1) {
    t.push_back(series.back().t);
    xi.push_back(series.back().xi);
  }

  // The steady value is taken over the uniform grid only.
  EventReport report = detectCore(t, xi, thr, false);
  report.steadyValue = detectEvents(series, thr).steadyValue;
  return report;
}

std::optional<double> firstCrossingBelow(std::span<const double> times,
                                         std::span<const double> xi, double level) {
  for (size_t i = 0; i < xi.size() && i < times.size(); ++i)
    if (xi[i] <= level) return crossingTime(times, xi, i, level);
  return std::nullopt;
}

}  // namespace vcoh
