/*
 * C interface to the phaseshift library.
 *
 * Every function returns a ps_status. On failure the thread-local message
 * from ps_last_error_message() describes the cause; outputs are left
 * untouched. Handles (ps_table, ps_figure) are opaque and owned by the
 * caller until passed to the matching *_free function. Strings returned by
 * accessor functions stay valid until their handle is freed.
 */
#ifndef PHASESHIFT_H
#define PHASESHIFT_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(PHASESHIFT_BUILDING)
#    define PS_API __declspec(dllexport)
#  else
#    define PS_API __declspec(dllimport)
#  endif
#else
#  define PS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ps_status {
  PS_OK = 0,
  PS_ERR_DOMAIN = 1,
  PS_ERR_PRECONDITION = 2,
  PS_ERR_DEGENERATE = 3,
  PS_ERR_POLE = 4,
  PS_ERR_QUADRATURE = 5,
  PS_ERR_USAGE = 6,
  PS_ERR_PARSE = 7,
  PS_ERR_NULL_ARGUMENT = 8,
  PS_ERR_INTERNAL = 9
} ps_status;

typedef enum ps_branch {
  PS_BRANCH_PI = 0,
  PS_BRANCH_ZERO = 1,
  PS_BRANCH_BOUNDARY = 2,
  PS_BRANCH_GENERIC = 3
} ps_branch;

typedef enum ps_model { PS_MODEL_SYMMETRIC = 0, PS_MODEL_ASYMMETRIC = 1, PS_MODEL_KERR = 2 } ps_model;

typedef enum ps_format { PS_FORMAT_CSV = 0, PS_FORMAT_JSON = 1 } ps_format;

typedef enum ps_dipole_orientation { PS_DIPOLE_AXIAL = 0, PS_DIPOLE_TRANSVERSE = 1 } ps_dipole_orientation;

typedef enum ps_profile_kind {
  PS_PROFILE_FLATTOP = 0,
  PS_PROFILE_DOUGHNUT = 1,         /* uses ps_profile.waist */
  PS_PROFILE_MATCHED = 2,
  PS_PROFILE_DOUGHNUT_OPTIMAL = 3  /* waist chosen by ps_optimize_waist */
} ps_profile_kind;

/* Focusing (omega_n, eta) and collection (omega_n_prime, eta_prime, p) parameters. */
typedef struct ps_coupling {
  double omega_n;
  double eta;
  double omega_n_prime;
  double eta_prime;
  double p;
} ps_coupling;

typedef struct ps_phase_result {
  double phi;
  double real_part;
  double imag_part;
  ps_branch branch;
} ps_phase_result;

typedef struct ps_mirror {
  double focal_length;
  double aperture_radius;
  double hole_radius;
} ps_mirror;

typedef struct ps_profile {
  ps_profile_kind kind;
  double waist;
} ps_profile;

typedef struct ps_mirror_report {
  double omega_n;
  double eta;
  double waist;              /* doughnut profiles only, else 0 */
  int has_recollimation;     /* 0 when no ray is re-collimated */
  double omega_n_prime;
  double eta_prime;
  double p;
} ps_mirror_report;

typedef struct ps_row {
  double swept;
  double delta;
  double s0;
  double s;
  int has_phi;
  double phi_rad;
  double phi_deg;
  ps_branch branch;
  double p_sc_over_p;
  double coherent_fraction;
  ps_model model;
  int has_kerr;
  double phi_kerr_rad;
  double phi_kerr_deg;
} ps_row;

typedef struct ps_table ps_table;
typedef struct ps_figure ps_figure;

PS_API const char* ps_status_name(ps_status status);
PS_API const char* ps_last_error_message(void);
PS_API const char* ps_version(void);

/* atom response */
PS_API ps_status ps_physical_to_normalized(double power, double omega0, double mu, double solid_angle, double eta,
                                           double* e0, double* rabi, double* s0);
PS_API ps_status ps_saturation_at_detuning(double s0, double delta, double* s);
PS_API ps_status ps_excited_state_population(double s, double* rho_aa);
PS_API ps_status ps_steady_state_coherence(double rabi, double detuning, double gamma, double* re, double* im);
PS_API ps_status ps_scattered_phase(double delta, int include_gouy, double* phase);
PS_API ps_status ps_scattered_power_ratio(double omega_n, double eta, double delta, double s0, double* ratio);
PS_API ps_status ps_coherent_fraction(double s, double* fraction);

/* phase model */
PS_API ps_status ps_phase_symmetric(double omega_n, double eta, double delta, double s0, ps_phase_result* out);
PS_API ps_status ps_phase_asymmetric(const ps_coupling* coupling, double delta, double s0, ps_phase_result* out);
PS_API ps_status ps_resonance_branch(double omega_n, double eta, double s0, ps_branch* out);
/* *exists is set to 0 when no s0 >= 0 reaches the pi branch. */
PS_API ps_status ps_critical_saturation(double omega_n, double eta, double* s0_star, int* exists);
PS_API ps_status ps_dispersive_phase_arctan(double omega_n, double eta, double delta, double s0, double* phi);
PS_API ps_status ps_kerr_linear_phase(double omega_n, double eta, double delta, double* phi0);
PS_API ps_status ps_kerr_phase(double phi0, double s, double* phi);
PS_API ps_status ps_kerr_relative_error(double omega_n, double eta, double delta, double s, double* error);
PS_API ps_status ps_repeater_margin(double phi, double coherent_amplitude, double* margin);

/* coupling geometry */
PS_API ps_status ps_cone_weighted_solid_angle(double half_angle, ps_dipole_orientation orientation, double* omega_n);
PS_API ps_status ps_cone_overlap(double half_angle, ps_dipole_orientation orientation, const ps_profile* profile,
                                 double* eta);
PS_API ps_status ps_parabola_ray_map(double d, const ps_mirror* mirror, double* theta, double* d_prime);
PS_API ps_status ps_mirror_weighted_solid_angle(const ps_mirror* mirror, double* omega_n);
PS_API ps_status ps_pupil_dipole_profile(double d, const ps_mirror* mirror, double* amplitude);
PS_API ps_status ps_optimize_waist(const ps_mirror* mirror, double* waist, double* eta);
PS_API ps_status ps_mirror_geometry(const ps_mirror* mirror, const ps_profile* profile, ps_mirror_report* out);

/* result tables */
PS_API ps_status ps_eval(ps_model model, const ps_coupling* coupling, double delta, double s0, ps_table** out);
PS_API ps_status ps_sweep_from_json(const char* config_json, ps_table** out);
PS_API size_t ps_table_row_count(const ps_table* table);
PS_API ps_status ps_table_row(const ps_table* table, size_t index, ps_row* out);
PS_API ps_status ps_table_render(ps_table* table, ps_format format, const char** text);
PS_API void ps_table_free(ps_table* table);

/* figure presets: fig2, fig3, fig4, fig5 */
PS_API ps_status ps_figure_create(const char* name, ps_figure** out);
PS_API size_t ps_figure_series_count(const ps_figure* figure);
/* "<preset>-<series>", e.g. "fig2-solid" */
PS_API const char* ps_figure_series_name(const ps_figure* figure, size_t index);
PS_API const char* ps_figure_series_csv(const ps_figure* figure, size_t index);
PS_API void ps_figure_free(ps_figure* figure);

#ifdef __cplusplus
}
#endif

#endif /* PHASESHIFT_H */
