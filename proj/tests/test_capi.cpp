// Exercises the shared library through its C interface only.
#include "vcoh/vcoh.h"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

double cabs(vcoh_complex z, double re, double im) { return std::hypot(z.re - re, z.im - im); }

const char* kScenario =
    "dA = 0\n"
    "dB = 1\n"
    "gamma0 = 0.1\n"
    "kappa = 1\n"
    "theta = 1\n"
    "t_max = 100\n"
    "num_points = 1001\n";

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("status strings and errors") {
  CHECK(std::strlen(vcoh_version()) > 0);
  CHECK(std::string(vcoh_status_string(VCOH_OK)) == "ok");
  CHECK(std::strlen(vcoh_status_string(VCOH_ERR_UNKNOWN_FIGURE)) > 0);

  const vcoh_params bad{-1.0, 1.0, 0.0, 0.0};
  vcoh_propagator g;
  CHECK(vcoh_propagator_at(&bad, 1.0, &g) == VCOH_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(vcoh_last_error_message()) > 0);
  CHECK(vcoh_propagator_at(nullptr, 1.0, &g) == VCOH_ERR_INVALID_ARGUMENT);
  const vcoh_params ok{1.0, 1.0, 0.0, 0.0};
  CHECK(vcoh_propagator_at(&ok, 1.0, nullptr) == VCOH_ERR_INVALID_ARGUMENT);
}

TEST_CASE("dynamics through the C interface") {
  const vcoh_params p{1.0, 0.1, 0.0, 0.0};
  vcoh_complex r;
  REQUIRE(vcoh_complex_rate(&p, +1, &r) == VCOH_OK);
  CHECK(cabs(r, 0.0, std::sqrt(0.19)) < 1e-12);
  CHECK(vcoh_complex_rate(&p, 0, &r) == VCOH_ERR_INVALID_ARGUMENT);

  vcoh_complex f, fc;
  const vcoh_params k{1.0, 1.0, 5.0, 0.5};
  REQUIRE(vcoh_memory_kernel(&k, 0.0, &f, &fc) == VCOH_OK);
  CHECK(cabs(f, 0.5, 0.0) < 1e-15);
  CHECK(cabs(fc, 0.25, 0.0) < 1e-15);

  const vcoh_params dfs{1.0, 0.1, 20.0, 1.0};
  vcoh_propagator g;
  REQUIRE(vcoh_propagator_at(&dfs, 7.0, &g) == VCOH_OK);
  CHECK(cabs(g.g_minus, 1.0, 0.0) < 1e-12);

  const vcoh_amplitudes a0{{0.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}};
  vcoh_amplitudes a;
  REQUIRE(vcoh_evolve(&a0, &dfs, 0.0, &a) == VCOH_OK);
  CHECK(cabs(a.b, 1.0, 0.0) == 0.0);
  CHECK(vcoh_evolve(&a0, &dfs, -1.0, &a) == VCOH_ERR_INVALID_ARGUMENT);
}

TEST_CASE("density and measurement through the C interface") {
  const vcoh_amplitudes steady{{-0.5, 0.0}, {0.5, 0.0}, {0.0, 0.0}};
  const vcoh_strengths s{0.0, 0.0, 0.9, 0.9};
  double c1 = 0.0;
  REQUIRE(vcoh_normalization_factor(&steady, &s, &c1) == VCOH_OK);
  CHECK(c1 == doctest::Approx(0.055).epsilon(1e-12));

  vcoh_density rho;
  REQUIRE(vcoh_reversal(&steady, &s, &rho) == VCOH_OK);
  CHECK(cabs(rho.m[0][0], 1.0 / 11.0, 0.0) < 1e-14);
  CHECK(cabs(rho.m[1][2], -5.0 / 11.0, 0.0) < 1e-14);
  double xi = 0.0;
  REQUIRE(vcoh_l1_coherence(&rho, &xi) == VCOH_OK);
  CHECK(xi == doctest::Approx(10.0 / 11.0));
  double te, he, me;
  REQUIRE(vcoh_density_check(&rho, &te, &he, &me) == VCOH_OK);
  CHECK(te < 1e-12);
  CHECK(he < 1e-12);
  CHECK(me > -1e-12);

  const vcoh_amplitudes b{{0.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}};
  vcoh_amplitudes m;
  const vcoh_strengths weak{0.9, 0.9, 0.0, 0.0};
  REQUIRE(vcoh_weak_measurement(&b, &weak, &m) == VCOH_OK);
  CHECK(cabs(m.b, std::sqrt(0.1), 0.0) < 1e-15);
  const vcoh_strengths invalid{1.0, 0.0, 0.0, 0.0};
  CHECK(vcoh_weak_measurement(&b, &invalid, &m) == VCOH_ERR_INVALID_ARGUMENT);

  const vcoh_amplitudes big{{1.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}};
  CHECK(vcoh_density_from_amplitudes(&big, &rho) == VCOH_ERR_UNPHYSICAL_STATE);

  const vcoh_params p{0.1, 1.0, 0.0, 1.0};
  REQUIRE(vcoh_protocol_state(&b, &p, &s, 2000.0, &rho) == VCOH_OK);
  CHECK(cabs(rho.m[1][1], 5.0 / 11.0, 0.0) < 1e-10);
}

TEST_CASE("oracle through the C interface") {
  const vcoh_amplitudes a0{{std::sqrt(0.5), 0.0}, {std::sqrt(0.5), 0.0}, {0.0, 0.0}};
  const vcoh_params p{1.0, 0.1, 20.0, 1.0};
  vcoh_oracle_config cfg{0.0, VCOH_ORACLE_RK4_AUXILIARY, 10.0, 1000};
  vcoh_amplitude_series* series = nullptr;
  REQUIRE(vcoh_oracle_integrate(&a0, &p, &cfg, &series) == VCOH_OK);
  REQUIRE(series != nullptr);
  const size_t n = vcoh_amplitude_series_size(series);
  CHECK(n == 201);  // 200000 steps recorded every 1000th, plus t = 0
  double t = -1.0;
  vcoh_amplitudes last;
  REQUIRE(vcoh_amplitude_series_get(series, n - 1, &t, &last) == VCOH_OK);
  CHECK(t == 10.0);
  CHECK(vcoh_amplitude_series_get(series, n, &t, &last) == VCOH_ERR_INVALID_ARGUMENT);
  vcoh_amplitude_series_free(series);
  vcoh_amplitude_series_free(nullptr);

  vcoh_compare_report rep;
  cfg.output_stride = 1;
  REQUIRE(vcoh_compare_closed_form(&a0, &p, &cfg, 1e-6, &rep) == VCOH_OK);
  CHECK(rep.max_abs_error <= 1e-6);
  CHECK(rep.flagged == 0);
  cfg.step_size = 0.5;
  const vcoh_params strong{10.0, 1.0, 0.0, 0.0};
  REQUIRE(vcoh_compare_closed_form(&a0, &strong, &cfg, 1e-6, &rep) == VCOH_OK);
  CHECK(rep.flagged == 1);
}

TEST_CASE("scenario lifecycle") {
  vcoh_scenario* sc = nullptr;
  REQUIRE(vcoh_scenario_parse(kScenario, &sc) == VCOH_OK);
  vcoh_series* series = nullptr;
  REQUIRE(vcoh_run_scenario(sc, &series) == VCOH_OK);
  REQUIRE(vcoh_series_size(series) == 1001);
  double t, xi;
  vcoh_density rho;
  REQUIRE(vcoh_series_get(series, 1000, &t, &xi, &rho) == VCOH_OK);
  CHECK(t == 100.0);
  CHECK(std::abs(xi - 0.5) < 1e-3);

  vcoh_events* ev = nullptr;
  REQUIRE(vcoh_detect_events(series, &ev) == VCOH_OK);
  CHECK(vcoh_events_death_count(ev) == 0);
  CHECK(vcoh_events_birth_count(ev) == 1);
  double sv = 0.0;
  CHECK(vcoh_events_steady_value(ev, &sv) == 1);
  CHECK(std::abs(sv - 0.5) < 1e-3);
  double tb, pk, tp;
  REQUIRE(vcoh_events_birth(ev, 0, &tb, &pk, &tp) == VCOH_OK);
  CHECK(vcoh_events_death(ev, 0, &tb, &tp) == VCOH_ERR_INVALID_ARGUMENT);
  vcoh_events_free(ev);
  REQUIRE(vcoh_detect_scenario_events(sc, &ev) == VCOH_OK);
  CHECK(vcoh_events_birth_count(ev) == 1);
  vcoh_events_free(ev);
  CHECK(vcoh_detect_scenario_events(nullptr, &ev) == VCOH_ERR_INVALID_ARGUMENT);

  const std::string path =
      (std::filesystem::temp_directory_path() / "vcoh_capi_series.csv").string();
  REQUIRE(vcoh_series_write_csv(series, path.c_str()) == VCOH_OK);
  const std::string first = slurp(path);
  CHECK(first.rfind("t,xi,rho11,", 0) == 0);

  vcoh_series* again = nullptr;
  REQUIRE(vcoh_run_scenario(sc, &again) == VCOH_OK);
  REQUIRE(vcoh_series_write_csv(again, path.c_str()) == VCOH_OK);
  CHECK(slurp(path) == first);
  std::remove(path.c_str());
  vcoh_series_free(again);
  vcoh_series_free(series);
  vcoh_scenario_free(sc);

  const vcoh_amplitudes b{{0.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}};
  const vcoh_params p{0.1, 1.0, 0.0, 1.0};
  const vcoh_strengths zero{0, 0, 0, 0};
  REQUIRE(vcoh_scenario_create(&b, &p, &zero, 100.0, 1001, &sc) == VCOH_OK);
  vcoh_scenario_free(sc);
  CHECK(vcoh_scenario_create(&b, &p, &zero, 100.0, 1, &sc) == VCOH_ERR_INVALID_ARGUMENT);
  CHECK(vcoh_scenario_parse("gamma0 = 1\n", &sc) == VCOH_ERR_PARSE);
  CHECK(vcoh_scenario_load("/nonexistent/x.scn", &sc) == VCOH_ERR_IO);
}

TEST_CASE("figures, sweeps and verification through the C interface") {
  CHECK(vcoh_figure_count() == 26);
  CHECK(std::string(vcoh_figure_id(0)) == "2a");
  CHECK(vcoh_figure_id(26) == nullptr);
  size_t written = 0;
  const std::string dir = (std::filesystem::temp_directory_path() / "vcoh_capi_fig").string();
  CHECK(vcoh_figure_reproduce("9z", dir.c_str(), &written) == VCOH_ERR_UNKNOWN_FIGURE);
  REQUIRE(vcoh_figure_reproduce("3e", dir.c_str(), &written) == VCOH_OK);
  CHECK(written == 5);
  std::filesystem::remove_all(dir);

  const std::string text = std::string(kScenario) + "sweep.pr = 0, 0.9\n";
  vcoh_sweep_table* table = nullptr;
  REQUIRE(vcoh_sweep_parse_and_run(text.c_str(), &table) == VCOH_OK);
  REQUIRE(vcoh_sweep_table_axis_count(table) == 1);
  CHECK(std::string(vcoh_sweep_table_axis_name(table, 0)) == "pr");
  REQUIRE(vcoh_sweep_table_row_count(table) == 2);
  double v;
  vcoh_sweep_summary sum;
  REQUIRE(vcoh_sweep_table_row(table, 1, &v, &sum) == VCOH_OK);
  CHECK(v == 0.9);
  CHECK(std::abs(sum.steady_value - 10.0 / 11.0) < 1e-3);
  CHECK(vcoh_sweep_table_row(table, 2, &v, &sum) == VCOH_ERR_INVALID_ARGUMENT);
  vcoh_sweep_table_free(table);
  CHECK(vcoh_sweep_parse_and_run(kScenario, &table) == VCOH_ERR_INVALID_ARGUMENT);

  vcoh_verify_report* rep = nullptr;
  REQUIRE(vcoh_verify_run(VCOH_ORACLE_RK4_AUXILIARY, 1e-6, 2.0, &rep) == VCOH_OK);
  REQUIRE(vcoh_verify_report_size(rep) == 72);
  vcoh_verify_row row;
  for (size_t i = 0; i < 72; ++i) {
    REQUIRE(vcoh_verify_report_get(rep, i, &row) == VCOH_OK);
    CHECK(row.report.flagged == 0);
    CHECK(row.t_max == 2.0);
  }
  CHECK(std::string(row.regime).size() > 0);
  vcoh_verify_report_free(rep);
}
