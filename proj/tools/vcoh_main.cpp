// Command-line front end. Uses only the C interface of libvcoh.
#include <cmath>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "vcoh/vcoh.h"

namespace {

int report(vcoh_status status) {
  if (status == VCOH_OK) return 0;
  std::fprintf(stderr, "error: %s: %s\n", vcoh_status_string(status), vcoh_last_error_message());
  return 1;
}

int simulate(const std::string& path, const std::string& out) {
  vcoh_scenario* scenario = nullptr;
  if (int rc = report(vcoh_scenario_load(path.c_str(), &scenario))) return rc;
  vcoh_series* series = nullptr;
  vcoh_status st = vcoh_run_scenario(scenario, &series);
  if (st == VCOH_OK) st = vcoh_series_write_csv(series, out.c_str());
  vcoh_series_free(series);
  vcoh_scenario_free(scenario);
  return report(st);
}

int events(const std::string& path) {
  vcoh_scenario* scenario = nullptr;
  if (int rc = report(vcoh_scenario_load(path.c_str(), &scenario))) return rc;
  vcoh_events* ev = nullptr;
  const vcoh_status st = vcoh_detect_scenario_events(scenario, &ev);
  if (st == VCOH_OK) {
    const size_t nd = vcoh_events_death_count(ev);
    const size_t nb = vcoh_events_birth_count(ev);
    std::printf("deaths: %zu\n", nd);
    for (size_t i = 0; i < nd; ++i) {
      double enter = 0, exit = 0;
      vcoh_events_death(ev, i, &enter, &exit);
      std::printf("  death  t_enter=%.6f t_exit=%.6f\n", enter, exit);
    }
    std::printf("births: %zu\n", nb);
    for (size_t i = 0; i < nb; ++i) {
      double tb = 0, peak = 0, tp = 0;
      vcoh_events_birth(ev, i, &tb, &peak, &tp);
      std::printf("  birth  t_birth=%.6f peak=%.6f t_peak=%.6f\n", tb, peak, tp);
    }
    double steady = 0;
    if (vcoh_events_steady_value(ev, &steady))
      std::printf("steady: %.10f\n", steady);
    else
      std::printf("steady: none\n");
  }
  vcoh_events_free(ev);
  vcoh_scenario_free(scenario);
  return report(st);
}

int figure(const std::string& id, const std::string& outDir) {
  if (id == "all") {
    for (size_t i = 0; i < vcoh_figure_count(); ++i)
      if (int rc = figure(vcoh_figure_id(i), outDir)) return rc;
    return 0;
  }
  size_t files = 0;
  if (int rc = report(vcoh_figure_reproduce(id.c_str(), outDir.c_str(), &files))) return rc;
  std::printf("fig%s: wrote %zu files to %s\n", id.c_str(), files, outDir.c_str());
  return 0;
}

int sweep(const std::string& path, const std::string& out) {
  vcoh_sweep_table* table = nullptr;
  if (int rc = report(vcoh_sweep_load_and_run(path.c_str(), &table))) return rc;
  const vcoh_status st = vcoh_sweep_table_write_csv(table, out.c_str());
  vcoh_sweep_table_free(table);
  return report(st);
}

int verify(const std::string& method, double tolerance, double tMaxCap) {
  const vcoh_oracle_method m =
      method == "trapezoid" ? VCOH_ORACLE_TRAPEZOID_VOLTERRA : VCOH_ORACLE_RK4_AUXILIARY;
  vcoh_verify_report* rep = nullptr;
  if (int rc = report(vcoh_verify_run(m, tolerance, tMaxCap, &rep))) return rc;
  double worst = 0.0;
  size_t flagged = 0;
  std::printf("%-7s %-17s %8s %6s %5s %8s %12s %10s %s\n", "regime", "initial", "gamma0",
              "kappa", "delta", "theta", "max_error", "at_t", "");
  for (size_t i = 0; i < vcoh_verify_report_size(rep); ++i) {
    vcoh_verify_row row;
    vcoh_verify_report_get(rep, i, &row);
    worst = std::fmax(worst, row.report.max_abs_error);
    flagged += row.report.flagged ? 1 : 0;
    std::printf("%-7s %-17s %8g %6g %5g %8g %12.3e %10.4f %s\n", row.regime, row.initial_state,
                row.params.gamma0, row.params.kappa, row.params.delta, row.params.theta,
                row.report.max_abs_error, row.report.worst_time, row.report.flagged ? "FLAG" : "");
  }
  std::printf("cases: %zu  flagged: %zu  worst max error: %.3e (tolerance %.1e)\n",
              vcoh_verify_report_size(rep), flagged, worst, tolerance);
  vcoh_verify_report_free(rep);
  return flagged == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"V-type atom coherence simulator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(vcoh_version()));

  std::string scenarioPath;
  std::string out = "-";
  auto* sim = app.add_subcommand("simulate", "Run a scenario file and print its CSV time series");
  sim->add_option("scenario", scenarioPath, "Scenario file")->required();
  sim->add_option("-o,--out", out, "Output CSV path ('-' for stdout)");

  std::string figId;
  std::string outDir;
  auto* fig = app.add_subcommand("figure", "Write the CSVs and gnuplot script of a figure");
  fig->add_option("id", figId, "Figure id (2a, 2b, 3a..6f, or all)")->required();
  fig->add_option("--out", outDir, "Output directory")->required();

  std::string sweepPath;
  std::string sweepOut = "-";
  auto* sw = app.add_subcommand("sweep", "Run a parameter sweep file");
  sw->add_option("spec", sweepPath, "Sweep file")->required();
  sw->add_option("-o,--out", sweepOut, "Output CSV path ('-' for stdout)");

  std::string method = "rk4";
  double tolerance = 1e-6;
  double tMaxCap = 0.0;
  auto* ver = app.add_subcommand("verify", "Compare the closed form with the memory-kernel oracle");
  ver->add_option("--method", method, "rk4 or trapezoid")
      ->check(CLI::IsMember({"rk4", "trapezoid"}));
  ver->add_option("--tolerance", tolerance, "Flag cases whose max error exceeds this");
  ver->add_option("--t-max", tMaxCap, "Cap every case's time range (0 keeps full ranges)");

  std::string eventsPath;
  auto* ev = app.add_subcommand("events", "Report coherence sudden death/birth events");
  ev->add_option("scenario", eventsPath, "Scenario file")->required();

  CLI11_PARSE(app, argc, argv);

  if (*sim) return simulate(scenarioPath, out);
  if (*fig) return figure(figId, outDir);
  if (*sw) return sweep(sweepPath, sweepOut);
  if (*ver) return verify(method, tolerance, tMaxCap);
  if (*ev) return events(eventsPath);
  return 1;
}
