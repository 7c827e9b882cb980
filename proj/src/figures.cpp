#include "vcoh/figures.hpp"

#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

namespace vcoh {
namespace {

struct PanelFamily {
  int figure;
  const char* sweptName;
  std::array<double, 4> values;
};

// Swept quantity and its four curve values for figures 3-6.
constexpr PanelFamily kFamilies[] = {
    {3, "theta", {0.0, 0.3, 0.7, 1.0}},
    {4, "p", {0.0, 0.2, 0.5, 0.9}},
    {5, "pr", {0.0, 0.2, 0.5, 0.9}},
    {6, "delta", {0.0, 5.0, 10.0, 20.0}},
};

// Panels (a)(b) maximal coherent, (c)(d) partially coherent, (e)(f) |B>;
// (a)(c)(e) weak coupling, (b)(d)(f) strong coupling.
NamedState panelState(char panel) {
  if (panel <= 'b') return NamedState::MaximalCoherent;
  if (panel <= 'd') return NamedState::PartialCoherent;
  return NamedState::ExcitedB;
}

bool panelIsStrong(char panel) { return (panel - 'a') % 2 == 1; }

Scenario baseScenario(const Regime& r, AmplitudeVector initial) {
  Scenario s;
  s.initial = InitialState::amplitudes(initial);
  s.params = {r.gamma0, r.kappa, 0.0, 0.0};
  s.grid = {r.tMax, r.numPoints};
  return s;
}

std::string valueText(double v) { return formatDouble(v); }

}  // namespace

AmplitudeVector namedState(NamedState s) {
  switch (s) {
    case NamedState::MaximalCoherent:
      return {std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0, 0.0};
    case NamedState::PartialCoherent:
      return {0.5, std::numbers::sqrt3 / 2.0, 0.0};
    case NamedState::ExcitedB:
      return {0.0, 1.0, 0.0};
  }
  return {};
}

const char* toString(NamedState s) {
  switch (s) {
    case NamedState::MaximalCoherent:
      return "maximal-coherent";
    case NamedState::PartialCoherent:
      return "partial-coherent";
    case NamedState::ExcitedB:
      return "excited-B";
  }
  return "?";
}

Regime weakRegime() { return {"weak", 0.1, 1.0, 100.0, 4000}; }
Regime strongRegime() { return {"strong", 1.0, 0.1, 400.0, 20000}; }

std::vector<std::string> figureIds() {
  std::vector<std::string> ids{"2a", "2b"};
  for (const auto& fam : kFamilies)
    for (char panel = 'a'; panel <= 'f'; ++panel)
      ids.push_back(std::to_string(fam.figure) + panel);
  return ids;
}

FigureSpec figureSpec(const std::string& id) {
  FigureSpec spec;
  spec.id = id;
  const std::string prefix = "fig" + id + "_";

  if (id == "2a" || id == "2b") {
    // Phase dependence, strong coupling, theta = 0, no measurements.
    const bool overBeta = id == "2a";
    spec.sweptName = overBeta ? "beta" : "alpha";
    for (int k = 0; k <= 8; ++k) {
      const double frac = overBeta ? k / 4.0 : k / 8.0;
      const double angle = frac * std::numbers::pi;
      FigureCurve c;
      c.sweptValue = angle;
      c.label = spec.sweptName + "=" + valueText(frac) + "pi";
      c.fileStem = prefix + spec.sweptName + "_" + valueText(frac) + "pi";
      c.scenario = baseScenario(strongRegime(), {});
      c.scenario.initial = overBeta ? InitialState::phases(std::numbers::pi / 4.0, angle)
                                    : InitialState::phases(angle, 0.0);
      c.scenario.name = c.fileStem;
      spec.curves.push_back(std::move(c));
    }
    return spec;
  }

  if (id.size() == 2 && id[1] >= 'a' && id[1] <= 'f') {
    for (const auto& fam : kFamilies) {
      if (id[0] - '0' != fam.figure) continue;
      const char panel = id[1];
      const Regime regime = panelIsStrong(panel) ? strongRegime() : weakRegime();
      spec.sweptName = fam.sweptName;
      for (double v : fam.values) {
        Scenario s = baseScenario(regime, namedState(panelState(panel)));
        // Figures 4-6: theta = 0 for (a)(b), theta = 1 otherwise.
        if (fam.figure != 3) s.params.theta = panel <= 'b' ? 0.0 : 1.0;
        if (fam.figure == 6) s.strengths = MeasurementStrengths::symmetric(0.0, 0.9);
        switch (fam.figure) {
          case 3:
            s.params.theta = v;
            break;
          case 4:
            s.strengths = MeasurementStrengths::symmetric(v, 0.0);
            break;
          case 5:
            s.strengths = MeasurementStrengths::symmetric(0.0, v);
            break;
          case 6:
            s.params.delta = v;
            break;
        }
        FigureCurve c;
        c.sweptValue = v;
        c.label = spec.sweptName + "=" + valueText(v);
        c.fileStem = prefix + spec.sweptName + "_" + valueText(v);
        s.name = c.fileStem;
        c.scenario = s;
        spec.curves.push_back(std::move(c));
      }
      return spec;
    }
  }
  throw Error(ErrorCode::UnknownFigure, "unknown figure id '" + id + "'");
}

std::vector<std::string> reproduceFigure(const std::string& id, const std::string& outDir) {
  const FigureSpec spec = figureSpec(id);
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(outDir, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create '" + outDir + "': " + ec.message());

  std::vector<std::string> written;
  for (const FigureCurve& c : spec.curves) {
    const fs::path path = fs::path(outDir) / (c.fileStem + ".csv");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::Io, "cannot write '" + path.string() + "'");
    writeSeriesCsv(out, runScenario(c.scenario));
    if (!out) throw Error(ErrorCode::Io, "write failed for '" + path.string() + "'");
    written.push_back(path.string());
  }

  const fs::path script = fs::path(outDir) / ("fig" + id + ".gp");
  std::ofstream gp(script, std::ios::binary);
  if (!gp) throw Error(ErrorCode::Io, "cannot write '" + script.string() + "'");
  gp << "# gnuplot script: gnuplot fig" << id << ".gp\n"
     << "set datafile separator ','\n"
     << "set terminal pngcairo size 900,600\n"
     << "set output 'fig" << id << ".png'\n"
     << "set xlabel 't'\n"
     << "set ylabel 'l1 coherence'\n"
     << "set key outside right\n"
     << "plot \\\n";
  for (size_t i = 0; i < spec.curves.size(); ++i) {
    const FigureCurve& c = spec.curves[i];
    gp << "  '" << c.fileStem << ".csv' every ::1 using 1:2 with lines title '" << c.label << "'"
       << (i + 1 < spec.curves.size() ? ", \\\n" : "\n");
  }
  if (!gp) throw Error(ErrorCode::Io, "write failed for '" + script.string() + "'");
  written.push_back(script.string());
  return written;
}

}  // namespace vcoh
