/*
 * C interface to the V-type atom coherence simulator.
 *
 * All functions return a vcoh_status; on failure a description is available
 * from vcoh_last_error_message() until the next call on the same thread.
 * Objects behind opaque handles are created by the library and must be
 * released with the matching *_free function. Density matrices use the basis
 * order {|C>, |B>, |A>}.
 */
#ifndef VCOH_VCOH_H
#define VCOH_VCOH_H

#include <stddef.h>

#if defined(_WIN32)
#define VCOH_API __declspec(dllexport)
#else
#define VCOH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vcoh_status {
  VCOH_OK = 0,
  VCOH_ERR_INVALID_ARGUMENT = 1,
  VCOH_ERR_UNPHYSICAL_STATE = 2,
  VCOH_ERR_NON_FINITE = 3,
  VCOH_ERR_IO = 4,
  VCOH_ERR_PARSE = 5,
  VCOH_ERR_UNKNOWN_FIGURE = 6,
  VCOH_ERR_INTERNAL = 99
} vcoh_status;

typedef struct vcoh_complex {
  double re;
  double im;
} vcoh_complex;

typedef struct vcoh_params {
  double gamma0;
  double kappa;
  double delta;
  double theta;
} vcoh_params;

typedef struct vcoh_amplitudes {
  vcoh_complex a;
  vcoh_complex b;
  vcoh_complex c;
} vcoh_amplitudes;

typedef struct vcoh_strengths {
  double p;
  double q;
  double pr;
  double qr;
} vcoh_strengths;

typedef struct vcoh_propagator {
  vcoh_complex g_plus;
  vcoh_complex g_minus;
  vcoh_complex q1;
  vcoh_complex q2;
} vcoh_propagator;

typedef struct vcoh_density {
  vcoh_complex m[3][3];
} vcoh_density;

VCOH_API const char* vcoh_version(void);
VCOH_API const char* vcoh_status_string(vcoh_status status);
VCOH_API const char* vcoh_last_error_message(void);

/* Closed-form dynamics. branch is +1 or -1. */
VCOH_API vcoh_status vcoh_complex_rate(const vcoh_params* params, int branch, vcoh_complex* out);
VCOH_API vcoh_status vcoh_memory_kernel(const vcoh_params* params, double tau, vcoh_complex* f,
                                        vcoh_complex* f_cross);
VCOH_API vcoh_status vcoh_propagator_at(const vcoh_params* params, double t,
                                        vcoh_propagator* out);
VCOH_API vcoh_status vcoh_evolve(const vcoh_amplitudes* initial, const vcoh_params* params,
                                 double t, vcoh_amplitudes* out);

/* Density matrix and coherence. */
VCOH_API vcoh_status vcoh_density_from_amplitudes(const vcoh_amplitudes* amp, vcoh_density* out);
VCOH_API vcoh_status vcoh_l1_coherence(const vcoh_density* rho, double* out);
VCOH_API vcoh_status vcoh_density_check(const vcoh_density* rho, double* trace_error,
                                        double* hermiticity_error, double* min_eigenvalue);

/* Measurement protocol. */
VCOH_API vcoh_status vcoh_weak_measurement(const vcoh_amplitudes* amp,
                                           const vcoh_strengths* strengths,
                                           vcoh_amplitudes* out);
VCOH_API vcoh_status vcoh_normalization_factor(const vcoh_amplitudes* amp,
                                               const vcoh_strengths* strengths, double* out);
VCOH_API vcoh_status vcoh_reversal(const vcoh_amplitudes* amp, const vcoh_strengths* strengths,
                                   vcoh_density* out);
VCOH_API vcoh_status vcoh_protocol_state(const vcoh_amplitudes* initial,
                                         const vcoh_params* params,
                                         const vcoh_strengths* strengths, double t,
                                         vcoh_density* out);

/* Memory-kernel oracle. step_size <= 0 selects the default step. */
typedef enum vcoh_oracle_method {
  VCOH_ORACLE_RK4_AUXILIARY = 0,
  VCOH_ORACLE_TRAPEZOID_VOLTERRA = 1
} vcoh_oracle_method;

typedef struct vcoh_oracle_config {
  double step_size;
  vcoh_oracle_method method;
  double max_time;
  int output_stride;
} vcoh_oracle_config;

typedef struct vcoh_compare_report {
  double step_size;
  double max_abs_error;
  double worst_time;
  double tolerance;
  int flagged;
} vcoh_compare_report;

typedef struct vcoh_amplitude_series vcoh_amplitude_series;

VCOH_API vcoh_status vcoh_oracle_integrate(const vcoh_amplitudes* initial,
                                           const vcoh_params* params,
                                           const vcoh_oracle_config* cfg,
                                           vcoh_amplitude_series** out);
VCOH_API size_t vcoh_amplitude_series_size(const vcoh_amplitude_series* series);
VCOH_API vcoh_status vcoh_amplitude_series_get(const vcoh_amplitude_series* series, size_t i,
                                               double* t, vcoh_amplitudes* out);
VCOH_API void vcoh_amplitude_series_free(vcoh_amplitude_series* series);
VCOH_API vcoh_status vcoh_compare_closed_form(const vcoh_amplitudes* initial,
                                              const vcoh_params* params,
                                              const vcoh_oracle_config* cfg, double tolerance,
                                              vcoh_compare_report* out);

/* Scenarios and coherence time series. */
typedef struct vcoh_scenario vcoh_scenario;
typedef struct vcoh_series vcoh_series;

VCOH_API vcoh_status vcoh_scenario_load(const char* path, vcoh_scenario** out);
VCOH_API vcoh_status vcoh_scenario_parse(const char* text, vcoh_scenario** out);
VCOH_API vcoh_status vcoh_scenario_create(const vcoh_amplitudes* initial,
                                          const vcoh_params* params,
                                          const vcoh_strengths* strengths, double t_max,
                                          int num_points, vcoh_scenario** out);
VCOH_API void vcoh_scenario_free(vcoh_scenario* scenario);

VCOH_API vcoh_status vcoh_run_scenario(const vcoh_scenario* scenario, vcoh_series** out);
VCOH_API size_t vcoh_series_size(const vcoh_series* series);
VCOH_API vcoh_status vcoh_series_get(const vcoh_series* series, size_t i, double* t, double* xi,
                                     vcoh_density* rho);
/* path NULL or "-" writes to stdout. */
VCOH_API vcoh_status vcoh_series_write_csv(const vcoh_series* series, const char* path);
VCOH_API void vcoh_series_free(vcoh_series* series);

/* Coherence sudden death / birth events. */
typedef struct vcoh_events vcoh_events;

VCOH_API vcoh_status vcoh_detect_events(const vcoh_series* series, vcoh_events** out);
/* Runs the scenario and relocates sampled extrema on the closed form, so dips
 * narrower than the grid spacing are not missed. */
VCOH_API vcoh_status vcoh_detect_scenario_events(const vcoh_scenario* scenario,
                                                 vcoh_events** out);
VCOH_API size_t vcoh_events_death_count(const vcoh_events* events);
VCOH_API size_t vcoh_events_birth_count(const vcoh_events* events);
VCOH_API vcoh_status vcoh_events_death(const vcoh_events* events, size_t i, double* t_enter,
                                       double* t_exit);
VCOH_API vcoh_status vcoh_events_birth(const vcoh_events* events, size_t i, double* t_birth,
                                       double* peak_value, double* t_peak);
/* Returns 1 and writes *value when a steady value was detected, else 0. */
VCOH_API int vcoh_events_steady_value(const vcoh_events* events, double* value);
VCOH_API void vcoh_events_free(vcoh_events* events);

/* Figures. */
VCOH_API size_t vcoh_figure_count(void);
VCOH_API const char* vcoh_figure_id(size_t i);
VCOH_API vcoh_status vcoh_figure_reproduce(const char* id, const char* out_dir,
                                           size_t* files_written);

/* Sweeps. */
typedef struct vcoh_sweep_table vcoh_sweep_table;

typedef struct vcoh_sweep_summary {
  double steady_value;
  double first_peak;
  double first_peak_time;
  double t_half;
  int death_count;
  int birth_count;
} vcoh_sweep_summary;

VCOH_API vcoh_status vcoh_sweep_load_and_run(const char* path, vcoh_sweep_table** out);
VCOH_API vcoh_status vcoh_sweep_parse_and_run(const char* text, vcoh_sweep_table** out);
VCOH_API size_t vcoh_sweep_table_axis_count(const vcoh_sweep_table* table);
VCOH_API const char* vcoh_sweep_table_axis_name(const vcoh_sweep_table* table, size_t axis);
VCOH_API size_t vcoh_sweep_table_row_count(const vcoh_sweep_table* table);
/* values must hold vcoh_sweep_table_axis_count() doubles. */
VCOH_API vcoh_status vcoh_sweep_table_row(const vcoh_sweep_table* table, size_t row,
                                          double* values, vcoh_sweep_summary* summary);
VCOH_API vcoh_status vcoh_sweep_table_write_csv(const vcoh_sweep_table* table, const char* path);
VCOH_API void vcoh_sweep_table_free(vcoh_sweep_table* table);

/* Oracle-equivalence grid. t_max_cap <= 0 keeps the full time ranges. */
typedef struct vcoh_verify_report vcoh_verify_report;

typedef struct vcoh_verify_row {
  const char* regime;
  const char* initial_state;
  vcoh_params params;
  double t_max;
  vcoh_compare_report report;
} vcoh_verify_row;

VCOH_API vcoh_status vcoh_verify_run(vcoh_oracle_method method, double tolerance,
                                     double t_max_cap, vcoh_verify_report** out);
VCOH_API size_t vcoh_verify_report_size(const vcoh_verify_report* report);
VCOH_API vcoh_status vcoh_verify_report_get(const vcoh_verify_report* report, size_t i,
                                            vcoh_verify_row* out);
VCOH_API void vcoh_verify_report_free(vcoh_verify_report* report);

#ifdef __cplusplus
}
#endif

#endif /* VCOH_VCOH_H */
