#include "vcoh/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

namespace vcoh {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

constexpr std::pair<SweepAxis, const char*> kAxisNames[] = {
    {SweepAxis::GammaRatio, "gamma0_over_kappa"},
    {SweepAxis::Delta, "delta"},
    {SweepAxis::Theta, "theta"},
    {SweepAxis::P, "p"},
    {SweepAxis::Pr, "pr"},
    {SweepAxis::Alpha, "alpha"},
    {SweepAxis::Beta, "beta"},
};

}  // namespace

const char* toString(SweepAxis axis) {
  for (const auto& [a, name] : kAxisNames)
    if (a == axis) return name;
  return "?";
}

SweepAxis sweepAxisFromString(const std::string& name) {
  for (const auto& [a, n] : kAxisNames)
    if (name == n) return a;
  throw Error(ErrorCode::Parse, "unknown sweep axis '" + name + "'");
}

void applyAxis(Scenario& s, SweepAxis axis, double value) {
  switch (axis) {
    case SweepAxis::GammaRatio:
      s.params.gamma0 = value * s.params.kappa;
      break;
    case SweepAxis::Delta:
      s.params.delta = value;
      break;
    case SweepAxis::Theta:
      s.params.theta = value;
      break;
    case SweepAxis::P:
      s.strengths.p = s.strengths.q = value;
      break;
    case SweepAxis::Pr:
      s.strengths.pr = s.strengths.qr = value;
      break;
    case SweepAxis::Alpha:
    case SweepAxis::Beta:
      if (!s.initial.usePhases)
        throw Error(ErrorCode::InvalidArgument,
                    "alpha/beta sweeps need an alpha/beta initial state");
      (axis == SweepAxis::Alpha ? s.initial.alpha : s.initial.beta) = value;
      break;
  }
}

SweepRow summarize(const CoherenceSeries& series, const EventReport& events) {
  SweepRow row;
  row.steadyValue = events.steadyValue.value_or(kNaN);
  row.firstPeak = events.births.empty() ? kNaN : events.births.front().peakValue;
  row.firstPeakTime = events.births.empty() ? kNaN : events.births.front().tPeak;
  row.deathCount = static_cast<int>(events.deaths.size());
  row.birthCount = static_cast<int>(events.births.size());
  std::vector<double> t(series.size());
  std::vector<double> xi(series.size());
  for (size_t i = 0; i < series.size(); ++i) {
    t[i] = series[i].t;
    xi[i] = series[i].xi;
  }
  row.tHalf = firstCrossingBelow(t, xi, 0.5).value_or(kNaN);
  return row;
}

SweepTable runSweep(const SweepSpec& spec) {
  auto axes = spec.axes;
  if (axes.empty()) throw Error(ErrorCode::InvalidArgument, "sweep grid is empty");
  std::stable_sort(axes.begin(), axes.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (size_t i = 0; i < axes.size(); ++i) {
    if (axes[i].second.empty())
      throw Error(ErrorCode::InvalidArgument,
                  std::string("sweep axis '") + toString(axes[i].first) + "' has no values");
    if (i > 0 && axes[i].first == axes[i - 1].first)
      throw Error(ErrorCode::InvalidArgument,
                  std::string("sweep axis '") + toString(axes[i].first) + "' given twice");
  }

  SweepTable table;
  for (const auto& ax : axes) table.axes.push_back(ax.first);

  std::vector<size_t> idx(axes.size(), 0);
  while (true) {
    Scenario s = spec.base;
    SweepRow row;
    for (size_t a = 0; a < axes.size(); ++a) {
      const double v = axes[a].second[idx[a]];
      applyAxis(s, axes[a].first, v);
      row.values.push_back(v);
    }
    SweepRow summary = summarize(runScenario(s), detectEvents(s));
    summary.values = std::move(row.values);
    table.rows.push_back(std::move(summary));

    // odometer, last axis fastest
    size_t a = axes.size();
    while (a > 0) {
      --a;
      if (++idx[a] < axes[a].second.size()) break;
      idx[a] = 0;
      if (a == 0) return table;
    }
  }
}

SweepSpec parseSweepSpec(std::string_view text) {
  std::vector<KeyValue> extra;
  SweepSpec spec;
  spec.base = parseScenario(text, &extra);
  for (const KeyValue& kv : extra) {
    const SweepAxis axis = sweepAxisFromString(kv.key.substr(6));
    std::vector<double> values;
    std::string_view rest = kv.value;
    while (!rest.empty()) {
      const size_t comma = rest.find(',');
      const std::string_view tok = rest.substr(0, comma);
      try {
        values.push_back(parseDouble(tok));
      } catch (const Error& e) {
        throw Error(ErrorCode::Parse, "line " + std::to_string(kv.line) + ": " + e.what());
      }
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    spec.axes.emplace_back(axis, std::move(values));
  }
  return spec;
}

SweepSpec loadSweepFile(const std::string& path) { return parseSweepSpec(readTextFile(path)); }

void writeSweepCsv(std::ostream& os, const SweepTable& table) {
  for (SweepAxis a : table.axes) os << toString(a) << ',';
  os << "steady_value,first_peak,first_peak_time,death_count,birth_count,t_half\n";
  for (const SweepRow& r : table.rows) {
    for (double v : r.values) os << formatDouble(v) << ',';
    os << formatDouble(r.steadyValue) << ',' << formatDouble(r.firstPeak) << ','
       << formatDouble(r.firstPeakTime) << ',' << r.deathCount << ',' << r.birthCount << ','
       << formatDouble(r.tHalf) << '\n';
  }
}

}  // namespace vcoh
