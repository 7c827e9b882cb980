// Scenario description, time-series runner and scenario file format.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vcoh/state.hpp"
#include "vcoh/types.hpp"

namespace vcoh {

/// Initial atomic state, either cos(alpha)|A> + e^{i beta} sin(alpha)|B> or an
/// explicit amplitude triple.
struct InitialState {
  bool usePhases = true;
  double alpha = 0.0;
  double beta = 0.0;
  AmplitudeVector explicitAmplitudes{};

  static InitialState phases(double alpha, double beta) { return {true, alpha, beta, {}}; }
  static InitialState amplitudes(AmplitudeVector amp) { return {false, 0.0, 0.0, amp}; }

  AmplitudeVector toAmplitudes() const;
};

struct TimeGrid {
  double tMax = 10.0;
  int numPoints = 2000;

  double at(int k) const { return tMax * static_cast<double>(k) / (numPoints - 1); }
};

struct Scenario {
  std::string name;
  InitialState initial;
  SystemParams params;
  MeasurementStrengths strengths;
  TimeGrid grid;

  /// Checks every field; explicit amplitudes must be normalized within 1e-10.
  void validate() const;
};

struct SeriesPoint {
  double t = 0.0;
  double xi = 0.0;
  DensityMatrix3 rho;
};

using CoherenceSeries = std::vector<SeriesPoint>;

/// protocolState() and its l1 coherence at every grid time.
CoherenceSeries runScenario(const Scenario& s);

/// Key = value text, one scenario per document. '#' starts a comment.
///
///   name = fig3b            (optional)
///   alpha = 0.7853981633974483
///   beta = 0                (or dA/dB/dC = <re> [<im>]; not both forms)
///   gamma0 = 1
///   kappa = 0.1
///   delta = 0               (default 0)
///   theta = 1               (default 0)
///   p = 0   q = p   pr = 0   qr = pr
///   t_max = 10              (default 10)
///   num_points = 2000       (default 2000)
///
/// Keys starting with "sweep." are handed to `extra` when non-null and are a
/// parse error otherwise.
struct KeyValue {
  std::string key;
  std::string value;
  int line = 0;
};
Scenario parseScenario(std::string_view text, std::vector<KeyValue>* extra = nullptr);
Scenario loadScenarioFile(const std::string& path, std::vector<KeyValue>* extra = nullptr);
std::string readTextFile(const std::string& path);

/// Writes a scenario back in the key = value format (17 significant digits).
void writeScenario(std::ostream& os, const Scenario& s);

inline constexpr std::string_view kCsvHeader =
    "t,xi,rho11,rho22,rho33,re_rho12,im_rho12,re_rho13,im_rho13,re_rho23,im_rho23";

/// One row per sample, LF line endings, 17 significant digits.
void writeSeriesCsv(std::ostream& os, const CoherenceSeries& series);

/// Shortest round-trip ("%.17g"-equivalent) decimal rendering.
std::string formatDouble(double v);
double parseDouble(std::string_view text);

}  // namespace vcoh
