// extern "C" layer: converts between the C structs and the C++ core and maps
// exceptions to status codes.
#include "vcoh/vcoh.h"

#include <fstream>
#include <iostream>
#include <memory>
#include <new>
#include <string>

#include "vcoh/dynamics.hpp"
#include "vcoh/events.hpp"
#include "vcoh/figures.hpp"
#include "vcoh/measurement.hpp"
#include "vcoh/oracle.hpp"
#include "vcoh/scenario.hpp"
#include "vcoh/state.hpp"
#include "vcoh/sweep.hpp"
#include "vcoh/verify.hpp"

struct vcoh_amplitude_series {
  vcoh::AmplitudeSeries value;
};
struct vcoh_scenario {
  vcoh::Scenario value;
};
struct vcoh_series {
  vcoh::CoherenceSeries value;
};
struct vcoh_events {
  vcoh::EventReport value;
};
struct vcoh_sweep_table {
  vcoh::SweepTable value;
};
struct vcoh_verify_report {
  std::vector<vcoh::VerifyResult> value;
};

namespace {

thread_local std::string g_lastError;

vcoh_status fail(vcoh_status status, const char* what) {
  g_lastError = what;
  return status;
}

vcoh_status toStatus(vcoh::ErrorCode code) {
  switch (code) {
    case vcoh::ErrorCode::InvalidArgument:
      return VCOH_ERR_INVALID_ARGUMENT;
    case vcoh::ErrorCode::UnphysicalState:
      return VCOH_ERR_UNPHYSICAL_STATE;
    case vcoh::ErrorCode::NonFinite:
      return VCOH_ERR_NON_FINITE;
    case vcoh::ErrorCode::Io:
      return VCOH_ERR_IO;
    case vcoh::ErrorCode::Parse:
      return VCOH_ERR_PARSE;
    case vcoh::ErrorCode::UnknownFigure:
      return VCOH_ERR_UNKNOWN_FIGURE;
  }
  return VCOH_ERR_INTERNAL;
}

template <class F>
vcoh_status guarded(F&& body) {
  try {
    g_lastError.clear();
    body();
    return VCOH_OK;
  } catch (const vcoh::Error& e) {
    return fail(toStatus(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(VCOH_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(VCOH_ERR_INTERNAL, e.what());
  }
}

void requireNonNull(const void* p, const char* name) {
  if (!p) throw vcoh::Error(vcoh::ErrorCode::InvalidArgument, std::string(name) + " is null");
}

vcoh::cplx fromC(vcoh_complex z) { return {z.re, z.im}; }
vcoh_complex toC(vcoh::cplx z) { return {z.real(), z.imag()}; }

vcoh::SystemParams fromC(const vcoh_params& p) { return {p.gamma0, p.kappa, p.delta, p.theta}; }
vcoh_params toC(const vcoh::SystemParams& p) { return {p.gamma0, p.kappa, p.delta, p.theta}; }

vcoh::AmplitudeVector fromC(const vcoh_amplitudes& a) { return {fromC(a.a), fromC(a.b), fromC(a.c)}; }
vcoh_amplitudes toC(const vcoh::AmplitudeVector& a) { return {toC(a.dA), toC(a.dB), toC(a.dC)}; }

vcoh::MeasurementStrengths fromC(const vcoh_strengths& s) { return {s.p, s.q, s.pr, s.qr}; }

vcoh_density toC(const vcoh::DensityMatrix3& rho) {
  vcoh_density out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.m[i][j] = toC(rho(i, j));
  return out;
}

vcoh::DensityMatrix3 fromC(const vcoh_density& d) {
  vcoh::DensityMatrix3 rho;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) rho(i, j) = fromC(d.m[i][j]);
  return rho;
}

vcoh::OracleConfig fromC(const vcoh_oracle_config& c) {
  vcoh::OracleConfig cfg;
  cfg.stepSize = c.step_size;
  cfg.maxTime = c.max_time;
  cfg.outputStride = c.output_stride < 1 ? 1 : c.output_stride;
  switch (c.method) {
    case VCOH_ORACLE_RK4_AUXILIARY:
      cfg.method = vcoh::OracleMethod::Rk4Auxiliary;
      break;
    case VCOH_ORACLE_TRAPEZOID_VOLTERRA:
      cfg.method = vcoh::OracleMethod::TrapezoidVolterra;
      break;
    default:
      throw vcoh::Error(vcoh::ErrorCode::InvalidArgument, "unknown oracle method");
  }
  return cfg;
}

vcoh_compare_report toC(const vcoh::CompareReport& r) {
  return {r.stepSize, r.maxAbsError, r.worstTime, r.tolerance, r.flagged() ? 1 : 0};
}

template <class Fn>
void withOutput(const char* path, Fn&& write) {
  if (!path || std::string(path) == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw vcoh::Error(vcoh::ErrorCode::Io, std::string("cannot write '") + path + "'");
  write(out);
  if (!out) throw vcoh::Error(vcoh::ErrorCode::Io, std::string("write failed for '") + path + "'");
}

void checkIndex(size_t i, size_t n) {
  if (i >= n) throw vcoh::Error(vcoh::ErrorCode::InvalidArgument, "index out of range");
}

}  // namespace

extern "C" {

const char* vcoh_version(void) { return "1.0.0"; }

const char* vcoh_status_string(vcoh_status status) {
  switch (status) {
    case VCOH_OK:
      return "ok";
    case VCOH_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case VCOH_ERR_UNPHYSICAL_STATE:
      return "unphysical state";
    case VCOH_ERR_NON_FINITE:
      return "non-finite value";
    case VCOH_ERR_IO:
      return "i/o error";
    case VCOH_ERR_PARSE:
      return "parse error";
    case VCOH_ERR_UNKNOWN_FIGURE:
      return "unknown figure";
    case VCOH_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* vcoh_last_error_message(void) { return g_lastError.c_str(); }

vcoh_status vcoh_complex_rate(const vcoh_params* params, int branch, vcoh_complex* out) {
  return guarded([&] {
    requireNonNull(params, "params");
    requireNonNull(out, "out");
    if (branch != 1 && branch != -1)
      throw vcoh::Error(vcoh::ErrorCode::InvalidArgument, "branch must be +1 or -1");
    const auto p = fromC(*params);
    p.validate();
    *out = toC(vcoh::complexRate(p, branch > 0 ? vcoh::Branch::Plus : vcoh::Branch::Minus));
  });
}

vcoh_status vcoh_memory_kernel(const vcoh_params* params, double tau, vcoh_complex* f,
                               vcoh_complex* f_cross) {
  return guarded([&] {
    requireNonNull(params, "params");
    if (!(tau >= 0.0)) throw vcoh::Error(vcoh::ErrorCode::InvalidArgument, "tau must be >= 0");
    const auto p = fromC(*params);
    p.validate();
    const auto k = vcoh::memoryKernel(p, tau);
    if (f) *f = toC(k.f);
    if (f_cross) *f_cross = toC(k.fCross);
  });
}

vcoh_status vcoh_propagator_at(const vcoh_params* params, double t, vcoh_propagator* out) {
  return guarded([&] {
    requireNonNull(params, "params");
    requireNonNull(out, "out");
    const auto p = fromC(*params);
    p.validate();
    const auto g = vcoh::propagator(p, t);
    *out = {toC(g.gPlus), toC(g.gMinus), toC(g.q1), toC(g.q2)};
  });
}

vcoh_status vcoh_evolve(const vcoh_amplitudes* initial, const vcoh_params* params, double t,
                        vcoh_amplitudes* out) {
  return guarded([&] {
    requireNonNull(initial, "initial");
    requireNonNull(params, "params");
    requireNonNull(out, "out");
    const auto p = fromC(*params);
    p.validate();
    *out = toC(vcoh::evolveAmplitudes(fromC(*initial), p, t));
  });
}

vcoh_status vcoh_density_from_amplitudes(const vcoh_amplitudes* amp, vcoh_density* out) {
  return guarded([&] {
    requireNonNull(amp, "amp");
    requireNonNull(out, "out");
    *out = toC(vcoh::densityFromAmplitudes(fromC(*amp)));
  });
}

vcoh_status vcoh_l1_coherence(const vcoh_density* rho, double* out) {
  return guarded([&] {
    requireNonNull(rho, "rho");
    requireNonNull(out, "out");
    *out = vcoh::l1Coherence(fromC(*rho));
  });
}

vcoh_status vcoh_density_check(const vcoh_density* rho, double* trace_error,
                               double* hermiticity_error, double* min_eigenvalue) {
  return guarded([&] {
    requireNonNull(rho, "rho");
    const auto r = vcoh::checkValidity(fromC(*rho));
    if (trace_error) *trace_error = r.traceError;
    if (hermiticity_error) *hermiticity_error = r.hermiticityError;
    if (min_eigenvalue) *min_eigenvalue = r.minEigenvalue;
  });
}

vcoh_status vcoh_weak_measurement(const vcoh_amplitudes* amp, const vcoh_strengths* strengths,
                                  vcoh_amplitudes* out) {
  return guarded([&] {
    requireNonNull(amp, "amp");
    requireNonNull(strengths, "strengths");
    requireNonNull(out, "out");
    *out = toC(vcoh::applyWeakMeasurement(fromC(*amp), fromC(*strengths)));
  });
}

vcoh_status vcoh_normalization_factor(const vcoh_amplitudes* amp,
                                      const vcoh_strengths* strengths, double* out) {
  return guarded([&] {
    requireNonNull(amp, "amp");
    requireNonNull(strengths, "strengths");
    requireNonNull(out, "out");
    *out = vcoh::normalizationFactor(fromC(*amp), fromC(*strengths));
  });
}

vcoh_status vcoh_reversal(const vcoh_amplitudes* amp, const vcoh_strengths* strengths,
                          vcoh_density* out) {
  return guarded([&] {
    requireNonNull(amp, "amp");
    requireNonNull(strengths, "strengths");
    requireNonNull(out, "out");
    *out = toC(vcoh::applyReversal(fromC(*amp), fromC(*strengths)));
  });
}

vcoh_status vcoh_protocol_state(const vcoh_amplitudes* initial, const vcoh_params* params,
                                const vcoh_strengths* strengths, double t, vcoh_density* out) {
  return guarded([&] {
    requireNonNull(initial, "initial");
    requireNonNull(params, "params");
    requireNonNull(strengths, "strengths");
    requireNonNull(out, "out");
    *out = toC(vcoh::protocolState(fromC(*initial), fromC(*params), fromC(*strengths), t));
  });
}

vcoh_status vcoh_oracle_integrate(const vcoh_amplitudes* initial, const vcoh_params* params,
                                  const vcoh_oracle_config* cfg, vcoh_amplitude_series** out) {
  return guarded([&] {
    requireNonNull(initial, "initial");
    requireNonNull(params, "params");
    requireNonNull(cfg, "cfg");
    requireNonNull(out, "out");
    *out = nullptr;
    auto series = std::make_unique<vcoh_amplitude_series>();
    series->value = vcoh::oracleIntegrate(fromC(*initial), fromC(*params), fromC(*cfg));
    *out = series.release();
  });
}

size_t vcoh_amplitude_series_size(const vcoh_amplitude_series* series) {
  return series ? series->value.times.size() : 0;
}

vcoh_status vcoh_amplitude_series_get(const vcoh_amplitude_series* series, size_t i, double* t,
                                      vcoh_amplitudes* out) {
  return guarded([&] {
    requireNonNull(series, "series");
    checkIndex(i, series->value.times.size());
    if (t) *t = series->value.times[i];
    if (out) *out = toC(series->value.values[i]);
  });
}

void vcoh_amplitude_series_free(vcoh_amplitude_series* series) { delete series; }

vcoh_status vcoh_compare_closed_form(const vcoh_amplitudes* initial, const vcoh_params* params,
                                     const vcoh_oracle_config* cfg, double tolerance,
                                     vcoh_compare_report* out) {
  return guarded([&] {
    requireNonNull(initial, "initial");
    requireNonNull(params, "params");
    requireNonNull(cfg, "cfg");
    requireNonNull(out, "out");
    *out = toC(vcoh::compareClosedForm(fromC(*initial), fromC(*params), fromC(*cfg), tolerance));
  });
}

vcoh_status vcoh_scenario_load(const char* path, vcoh_scenario** out) {
  return guarded([&] {
    requireNonNull(path, "path");
    requireNonNull(out, "out");
    *out = nullptr;
    auto s = std::make_unique<vcoh_scenario>();
    s->value = vcoh::loadScenarioFile(path);
    *out = s.release();
  });
}

vcoh_status vcoh_scenario_parse(const char* text, vcoh_scenario** out) {
  return guarded([&] {
    requireNonNull(text, "text");
    requireNonNull(out, "out");
    *out = nullptr;
    auto s = std::make_unique<vcoh_scenario>();
    s->value = vcoh::parseScenario(text);
    *out = s.release();
  });
}

vcoh_status vcoh_scenario_create(const vcoh_amplitudes* initial, const vcoh_params* params,
                                 const vcoh_strengths* strengths, double t_max, int num_points,
                                 vcoh_scenario** out) {
  return guarded([&] {
    requireNonNull(initial, "initial");
    requireNonNull(params, "params");
    requireNonNull(strengths, "strengths");
    requireNonNull(out, "out");
    *out = nullptr;
    auto s = std::make_unique<vcoh_scenario>();
    s->value.initial = vcoh::InitialState::amplitudes(fromC(*initial));
    s->value.params = fromC(*params);
    s->value.strengths = fromC(*strengths);
    s->value.grid = {t_max, num_points};
    s->value.validate();
    *out = s.release();
  });
}

void vcoh_scenario_free(vcoh_scenario* scenario) { delete scenario; }

vcoh_status vcoh_run_scenario(const vcoh_scenario* scenario, vcoh_series** out) {
  return guarded([&] {
    requireNonNull(scenario, "scenario");
    requireNonNull(out, "out");
    *out = nullptr;
    auto s = std::make_unique<vcoh_series>();
    s->value = vcoh::runScenario(scenario->value);
    *out = s.release();
  });
}

size_t vcoh_series_size(const vcoh_series* series) { return series ? series->value.size() : 0; }

vcoh_status vcoh_series_get(const vcoh_series* series, size_t i, double* t, double* xi,
                            vcoh_density* rho) {
  return guarded([&] {
    requireNonNull(series, "series");
    checkIndex(i, series->value.size());
    const auto& pt = series->value[i];
    if (t) *t = pt.t;
    if (xi) *xi = pt.xi;
    if (rho) *rho = toC(pt.rho);
  });
}

vcoh_status vcoh_series_write_csv(const vcoh_series* series, const char* path) {
  return guarded([&] {
    requireNonNull(series, "series");
    withOutput(path, [&](std::ostream& os) { vcoh::writeSeriesCsv(os, series->value); });
  });
}

void vcoh_series_free(vcoh_series* series) { delete series; }

vcoh_status vcoh_detect_events(const vcoh_series* series, vcoh_events** out) {
  return guarded([&] {
    requireNonNull(series, "series");
    requireNonNull(out, "out");
    *out = nullptr;
    auto e = std::make_unique<vcoh_events>();
    e->value = vcoh::detectEvents(series->value);
    *out = e.release();
  });
}

vcoh_status vcoh_detect_scenario_events(const vcoh_scenario* scenario, vcoh_events** out) {
  return guarded([&] {
    requireNonNull(scenario, "scenario");
    requireNonNull(out, "out");
    *out = nullptr;
    auto e = std::make_unique<vcoh_events>();
    e->value = vcoh::detectEvents(scenario->value);
    *out = e.release();
  });
}

size_t vcoh_events_death_count(const vcoh_events* events) {
  return events ? events->value.deaths.size() : 0;
}

size_t vcoh_events_birth_count(const vcoh_events* events) {
  return events ? events->value.births.size() : 0;
}

vcoh_status vcoh_events_death(const vcoh_events* events, size_t i, double* t_enter,
                              double* t_exit) {
  return guarded([&] {
    requireNonNull(events, "events");
    checkIndex(i, events->value.deaths.size());
    if (t_enter) *t_enter = events->value.deaths[i].tEnter;
    if (t_exit) *t_exit = events->value.deaths[i].tExit;
  });
}

vcoh_status vcoh_events_birth(const vcoh_events* events, size_t i, double* t_birth,
                              double* peak_value, double* t_peak) {
  return guarded([&] {
    requireNonNull(events, "events");
    checkIndex(i, events->value.births.size());
    const auto& b = events->value.births[i];
    if (t_birth) *t_birth = b.tBirth;
    if (peak_value) *peak_value = b.peakValue;
    if (t_peak) *t_peak = b.tPeak;
  });
}

int vcoh_events_steady_value(const vcoh_events* events, double* value) {
  if (!events || !events->value.steadyValue) return 0;
  if (value) *value = *events->value.steadyValue;
  return 1;
}

void vcoh_events_free(vcoh_events* events) { delete events; }

size_t vcoh_figure_count(void) { return vcoh::figureIds().size(); }

const char* vcoh_figure_id(size_t i) {
  static const std::vector<std::string> ids = vcoh::figureIds();
  return i < ids.size() ? ids[i].c_str() : nullptr;
}

vcoh_status vcoh_figure_reproduce(const char* id, const char* out_dir, size_t* files_written) {
  return guarded([&] {
    requireNonNull(id, "id");
    requireNonNull(out_dir, "out_dir");
    const auto files = vcoh::reproduceFigure(id, out_dir);
    if (files_written) *files_written = files.size();
  });
}

vcoh_status vcoh_sweep_load_and_run(const char* path, vcoh_sweep_table** out) {
  return guarded([&] {
    requireNonNull(path, "path");
    requireNonNull(out, "out");
    *out = nullptr;
    auto t = std::make_unique<vcoh_sweep_table>();
    t->value = vcoh::runSweep(vcoh::loadSweepFile(path));
    *out = t.release();
  });
}

vcoh_status vcoh_sweep_parse_and_run(const char* text, vcoh_sweep_table** out) {
  return guarded([&] {
    requireNonNull(text, "text");
    requireNonNull(out, "out");
    *out = nullptr;
    auto t = std::make_unique<vcoh_sweep_table>();
    t->value = vcoh::runSweep(vcoh::parseSweepSpec(text));
    *out = t.release();
  });
}

size_t vcoh_sweep_table_axis_count(const vcoh_sweep_table* table) {
  return table ? table->value.axes.size() : 0;
}

const char* vcoh_sweep_table_axis_name(const vcoh_sweep_table* table, size_t axis) {
  if (!table || axis >= table->value.axes.size()) return nullptr;
  return vcoh::toString(table->value.axes[axis]);
}

size_t vcoh_sweep_table_row_count(const vcoh_sweep_table* table) {
  return table ? table->value.rows.size() : 0;
}

vcoh_status vcoh_sweep_table_row(const vcoh_sweep_table* table, size_t row, double* values,
                                 vcoh_sweep_summary* summary) {
  return guarded([&] {
    requireNonNull(table, "table");
    checkIndex(row, table->value.rows.size());
    const auto& r = table->value.rows[row];
    if (values)
      for (size_t i = 0; i < r.values.size(); ++i) values[i] = r.values[i];
    if (summary)
      *summary = {r.steadyValue, r.firstPeak, r.firstPeakTime, r.tHalf, r.deathCount,
                  r.birthCount};
  });
}

vcoh_status vcoh_sweep_table_write_csv(const vcoh_sweep_table* table, const char* path) {
  return guarded([&] {
    requireNonNull(table, "table");
    withOutput(path, [&](std::ostream& os) { vcoh::writeSweepCsv(os, table->value); });
  });
}

void vcoh_sweep_table_free(vcoh_sweep_table* table) { delete table; }

vcoh_status vcoh_verify_run(vcoh_oracle_method method, double tolerance, double t_max_cap,
                            vcoh_verify_report** out) {
  return guarded([&] {
    requireNonNull(out, "out");
    *out = nullptr;
    vcoh_oracle_config probe{0.0, method, 1.0, 1};
    const auto cfg = fromC(probe);
    auto r = std::make_unique<vcoh_verify_report>();
    r->value = vcoh::runOracleEquivalence(cfg.method, tolerance, t_max_cap);
    *out = r.release();
  });
}

size_t vcoh_verify_report_size(const vcoh_verify_report* report) {
  return report ? report->value.size() : 0;
}

vcoh_status vcoh_verify_report_get(const vcoh_verify_report* report, size_t i,
                                   vcoh_verify_row* out) {
  return guarded([&] {
    requireNonNull(report, "report");
    requireNonNull(out, "out");
    checkIndex(i, report->value.size());
    const auto& r = report->value[i];
    out->regime = r.testCase.regime.c_str();
    out->initial_state = vcoh::toString(r.testCase.state);
    out->params = toC(r.testCase.params);
    out->t_max = r.testCase.tMax;
    out->report = toC(r.report);
  });
}

void vcoh_verify_report_free(vcoh_verify_report* report) { delete report; }

}  // extern "C"
