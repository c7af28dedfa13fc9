// extern "C" shim over the C++ core. Exceptions never cross this boundary.

#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "phaseshift/atom_response.hpp"
#include "phaseshift/coupling_geometry.hpp"
#include "phaseshift/error.hpp"
#include "phaseshift/figures.hpp"
#include "phaseshift/phase_model.hpp"
#include "phaseshift/phaseshift.h"
#include "phaseshift/sweep.hpp"

struct ps_table {
  std::vector<phaseshift::ResultRow> rows;
  std::string rendered;
};

struct ps_figure {
  std::vector<phaseshift::FigureOutput> series;
};

namespace {

using namespace phaseshift;

thread_local std::string g_last_error;

ps_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::Domain: return PS_ERR_DOMAIN;
    case ErrorCode::Precondition: return PS_ERR_PRECONDITION;
    case ErrorCode::Degenerate: return PS_ERR_DEGENERATE;
    case ErrorCode::Pole: return PS_ERR_POLE;
    case ErrorCode::Quadrature: return PS_ERR_QUADRATURE;
    case ErrorCode::Usage: return PS_ERR_USAGE;
    case ErrorCode::Parse: return PS_ERR_PARSE;
  }
  return PS_ERR_INTERNAL;
}

template <class Fn>
ps_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return PS_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return PS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PS_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown exception";
    return PS_ERR_INTERNAL;
  }
}

template <class... Ptrs>
bool any_null(const Ptrs*... ptrs) {
  return ((ptrs == nullptr) || ...);
}

ps_status null_argument() {
  g_last_error = "null argument";
  return PS_ERR_NULL_ARGUMENT;
}

ps_branch to_c(Branch b) {
  switch (b) {
    case Branch::Pi: return PS_BRANCH_PI;
    case Branch::Zero: return PS_BRANCH_ZERO;
    case Branch::Boundary: return PS_BRANCH_BOUNDARY;
    case Branch::Generic: return PS_BRANCH_GENERIC;
  }
  return PS_BRANCH_GENERIC;
}

ps_model to_c(Model m) {
  switch (m) {
    case Model::Symmetric: return PS_MODEL_SYMMETRIC;
    case Model::Asymmetric: return PS_MODEL_ASYMMETRIC;
    case Model::Kerr: return PS_MODEL_KERR;
  }
  return PS_MODEL_SYMMETRIC;
}

Model from_c(ps_model m) {
  switch (m) {
    case PS_MODEL_SYMMETRIC: return Model::Symmetric;
    case PS_MODEL_ASYMMETRIC: return Model::Asymmetric;
    case PS_MODEL_KERR: return Model::Kerr;
  }
  fail(ErrorCode::Usage, "unknown model");
}

DipoleOrientation from_c(ps_dipole_orientation o) {
  switch (o) {
    case PS_DIPOLE_AXIAL: return DipoleOrientation::Axial;
    case PS_DIPOLE_TRANSVERSE: return DipoleOrientation::Transverse;
  }
  fail(ErrorCode::Usage, "unknown dipole orientation");
}

AsymmetricCoupling from_c(const ps_coupling& c) {
  return {c.omega_n, c.eta, c.omega_n_prime, c.eta_prime, c.p};
}

ParabolicMirror from_c(const ps_mirror& m) { return {m.focal_length, m.aperture_radius, m.hole_radius}; }

void write(const PhaseResult& r, ps_phase_result* out) {
  out->phi = r.phi;
  out->real_part = r.real_part;
  out->imag_part = r.imag_part;
  out->branch = to_c(r.branch);
}

// Resolves a C profile; PS_PROFILE_DOUGHNUT_OPTIMAL needs a mirror.
BeamProfile resolve_profile(const ps_profile* profile, const ParabolicMirror* mirror, double* waist) {
  if (waist) *waist = 0.0;
  if (profile == nullptr) return BeamProfile::flat_top();
  switch (profile->kind) {
    case PS_PROFILE_FLATTOP: return BeamProfile::flat_top();
    case PS_PROFILE_MATCHED: return BeamProfile::dipole_matched();
    case PS_PROFILE_DOUGHNUT:
      if (waist) *waist = profile->waist;
      return BeamProfile::doughnut(profile->waist);
    case PS_PROFILE_DOUGHNUT_OPTIMAL: {
      if (mirror == nullptr) fail(ErrorCode::Usage, "optimal doughnut waist is defined for mirrors only");
      const WaistOptimum best = optimize_waist(*mirror);
      if (waist) *waist = best.waist;
      return BeamProfile::doughnut(best.waist);
    }
  }
  fail(ErrorCode::Usage, "unknown profile kind");
}

}  // namespace

extern "C" {

const char* ps_status_name(ps_status status) {
  switch (status) {
    case PS_OK: return "ok";
    case PS_ERR_DOMAIN: return "domain error";
    case PS_ERR_PRECONDITION: return "precondition violated";
    case PS_ERR_DEGENERATE: return "degenerate result";
    case PS_ERR_POLE: return "pole";
    case PS_ERR_QUADRATURE: return "quadrature failure";
    case PS_ERR_USAGE: return "usage error";
    case PS_ERR_PARSE: return "parse error";
    case PS_ERR_NULL_ARGUMENT: return "null argument";
    case PS_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* ps_last_error_message(void) { return g_last_error.c_str(); }

const char* ps_version(void) { return "1.0.0"; }

ps_status ps_physical_to_normalized(double power, double omega0, double mu, double solid_angle, double eta,
                                    double* e0, double* rabi, double* s0) {
  if (any_null(e0, rabi, s0)) return null_argument();
  return guarded([&] {
    const auto r = physical_to_normalized(power, AtomTransition::from_dipole(omega0, mu), solid_angle, eta);
    *e0 = r.e0;
    *rabi = r.rabi;
    *s0 = r.s0;
  });
}

ps_status ps_saturation_at_detuning(double s0, double delta, double* s) {
  if (any_null(s)) return null_argument();
  return guarded([&] { *s = saturation_at_detuning(s0, delta); });
}

ps_status ps_excited_state_population(double s, double* rho_aa) {
  if (any_null(rho_aa)) return null_argument();
  return guarded([&] { *rho_aa = excited_state_population(s); });
}

ps_status ps_steady_state_coherence(double rabi, double detuning, double gamma, double* re, double* im) {
  if (any_null(re, im)) return null_argument();
  return guarded([&] {
    const auto rho = steady_state_coherence(rabi, detuning, gamma);
    *re = rho.real();
    *im = rho.imag();
  });
}

ps_status ps_scattered_phase(double delta, int include_gouy, double* phase) {
  if (any_null(phase)) return null_argument();
  return guarded([&] { *phase = scattered_phase(delta, include_gouy != 0); });
}

ps_status ps_scattered_power_ratio(double omega_n, double eta, double delta, double s0, double* ratio) {
  if (any_null(ratio)) return null_argument();
  return guarded([&] { *ratio = scattered_power_ratio(omega_n, eta, delta, s0); });
}

ps_status ps_coherent_fraction(double s, double* fraction) {
  if (any_null(fraction)) return null_argument();
  return guarded([&] { *fraction = coherent_fraction(s); });
}

ps_status ps_phase_symmetric(double omega_n, double eta, double delta, double s0, ps_phase_result* out) {
  if (any_null(out)) return null_argument();
  return guarded([&] { write(phase_symmetric({omega_n, eta}, delta, s0), out); });
}

ps_status ps_phase_asymmetric(const ps_coupling* coupling, double delta, double s0, ps_phase_result* out) {
  if (any_null(coupling, out)) return null_argument();
  return guarded([&] { write(phase_asymmetric(from_c(*coupling), delta, s0), out); });
}

ps_status ps_resonance_branch(double omega_n, double eta, double s0, ps_branch* out) {
  if (any_null(out)) return null_argument();
  return guarded([&] { *out = to_c(resonance_branch({omega_n, eta}, s0)); });
}

ps_status ps_critical_saturation(double omega_n, double eta, double* s0_star, int* exists) {
  if (any_null(s0_star, exists)) return null_argument();
  return guarded([&] {
    const auto s = critical_saturation({omega_n, eta});
    *exists = s.has_value() ? 1 : 0;
    *s0_star = s.value_or(0.0);
  });
}

ps_status ps_dispersive_phase_arctan(double omega_n, double eta, double delta, double s0, double* phi) {
  if (any_null(phi)) return null_argument();
  return guarded([&] { *phi = dispersive_phase_arctan({omega_n, eta}, delta, s0); });
}

ps_status ps_kerr_linear_phase(double omega_n, double eta, double delta, double* phi0) {
  if (any_null(phi0)) return null_argument();
  return guarded([&] { *phi0 = kerr_linear_phase({omega_n, eta}, delta); });
}

ps_status ps_kerr_phase(double phi0, double s, double* phi) {
  if (any_null(phi)) return null_argument();
  return guarded([&] { *phi = kerr_phase(phi0, s); });
}

ps_status ps_kerr_relative_error(double omega_n, double eta, double delta, double s, double* error) {
  if (any_null(error)) return null_argument();
  return guarded([&] { *error = kerr_relative_error({omega_n, eta}, delta, s); });
}

ps_status ps_repeater_margin(double phi, double coherent_amplitude, double* margin) {
  if (any_null(margin)) return null_argument();
  return guarded([&] { *margin = repeater_margin(phi, coherent_amplitude); });
}

ps_status ps_cone_weighted_solid_angle(double half_angle, ps_dipole_orientation orientation, double* omega_n) {
  if (any_null(omega_n)) return null_argument();
  return guarded([&] { *omega_n = cone_weighted_solid_angle({half_angle, from_c(orientation)}); });
}

ps_status ps_cone_overlap(double half_angle, ps_dipole_orientation orientation, const ps_profile* profile,
                          double* eta) {
  if (any_null(eta)) return null_argument();
  return guarded([&] {
    *eta = overlap_eta(resolve_profile(profile, nullptr, nullptr), ConeAperture{half_angle, from_c(orientation)});
  });
}

ps_status ps_parabola_ray_map(double d, const ps_mirror* mirror, double* theta, double* d_prime) {
  if (any_null(mirror, theta, d_prime)) return null_argument();
  return guarded([&] {
    const RayMap r = parabola_ray_map(d, from_c(*mirror));
    *theta = r.theta;
    *d_prime = r.d_prime;
  });
}

ps_status ps_mirror_weighted_solid_angle(const ps_mirror* mirror, double* omega_n) {
  if (any_null(mirror, omega_n)) return null_argument();
  return guarded([&] { *omega_n = mirror_weighted_solid_angle(from_c(*mirror)); });
}

ps_status ps_pupil_dipole_profile(double d, const ps_mirror* mirror, double* amplitude) {
  if (any_null(mirror, amplitude)) return null_argument();
  return guarded([&] { *amplitude = pupil_dipole_profile(d, from_c(*mirror)); });
}

ps_status ps_optimize_waist(const ps_mirror* mirror, double* waist, double* eta) {
  if (any_null(mirror, waist, eta)) return null_argument();
  return guarded([&] {
    const WaistOptimum best = optimize_waist(from_c(*mirror));
    *waist = best.waist;
    *eta = best.eta;
  });
}

ps_status ps_mirror_geometry(const ps_mirror* mirror, const ps_profile* profile, ps_mirror_report* out) {
  if (any_null(mirror, out)) return null_argument();
  return guarded([&] {
    const ParabolicMirror m = from_c(*mirror);
    m.validate();
    ps_mirror_report report{};
    const BeamProfile beam = resolve_profile(profile, &m, &report.waist);
    report.omega_n = mirror_weighted_solid_angle(m);
    report.eta = overlap_eta(beam, m);
    try {
      const RecollimationParameters r = recollimation_parameters(m, beam);
      report.has_recollimation = 1;
      report.omega_n_prime = r.omega_n_prime;
      report.eta_prime = r.eta_prime;
      report.p = r.p;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Degenerate) throw;
      report.has_recollimation = 0;
    }
    *out = report;
  });
}

ps_status ps_eval(ps_model model, const ps_coupling* coupling, double delta, double s0, ps_table** out) {
  if (any_null(coupling, out)) return null_argument();
  return guarded([&] {
    const Model m = from_c(model);
    const AsymmetricCoupling c = from_c(*coupling);
    if (m == Model::Asymmetric) {
      c.validate();
    } else {
      c.focusing().validate();
    }
    auto table = std::make_unique<ps_table>();
    table->rows.push_back(evaluate_point(m, c, delta, s0, delta));
    *out = table.release();
  });
}

ps_status ps_sweep_from_json(const char* config_json, ps_table** out) {
  if (any_null(config_json, out)) return null_argument();
  return guarded([&] {
    auto table = std::make_unique<ps_table>();
    table->rows = run_sweep(parse_sweep_config(config_json));
    *out = table.release();
  });
}

size_t ps_table_row_count(const ps_table* table) { return table ? table->rows.size() : 0; }

ps_status ps_table_row(const ps_table* table, size_t index, ps_row* out) {
  if (any_null(table, out)) return null_argument();
  return guarded([&] {
    if (index >= table->rows.size()) fail(ErrorCode::Usage, "row index out of range");
    const ResultRow& r = table->rows[index];
    ps_row row{};
    row.swept = r.swept;
    row.delta = r.delta;
    row.s0 = r.s0;
    row.s = r.s;
    row.has_phi = r.phi_rad.has_value() ? 1 : 0;
    row.phi_rad = r.phi_rad.value_or(0.0);
    row.phi_deg = r.phi_deg.value_or(0.0);
    row.branch = to_c(r.branch);
    row.p_sc_over_p = r.p_sc_over_p;
    row.coherent_fraction = r.coherent_fraction;
    row.model = to_c(r.model);
    row.has_kerr = r.phi_kerr_rad.has_value() ? 1 : 0;
    row.phi_kerr_rad = r.phi_kerr_rad.value_or(0.0);
    row.phi_kerr_deg = r.phi_kerr_deg.value_or(0.0);
    *out = row;
  });
}

ps_status ps_table_render(ps_table* table, ps_format format, const char** text) {
  if (any_null(table, text)) return null_argument();
  return guarded([&] {
    switch (format) {
      case PS_FORMAT_CSV: table->rendered = to_csv(table->rows); break;
      case PS_FORMAT_JSON: table->rendered = to_json(table->rows); break;
      default: fail(ErrorCode::Usage, "unknown output format");
    }
    *text = table->rendered.c_str();
  });
}

void ps_table_free(ps_table* table) { delete table; }

ps_status ps_figure_create(const char* name, ps_figure** out) {
  if (any_null(name, out)) return null_argument();
  return guarded([&] {
    auto fig = std::make_unique<ps_figure>();
    fig->series = render_figure(figure_preset(name));
    *out = fig.release();
  });
}

size_t ps_figure_series_count(const ps_figure* figure) { return figure ? figure->series.size() : 0; }

const char* ps_figure_series_name(const ps_figure* figure, size_t index) {
  if (!figure || index >= figure->series.size()) return nullptr;
  return figure->series[index].file_stem.c_str();
}

const char* ps_figure_series_csv(const ps_figure* figure, size_t index) {
  if (!figure || index >= figure->series.size()) return nullptr;
  return figure->series[index].csv.c_str();
}

void ps_figure_free(ps_figure* figure) { delete figure; }

}  // extern "C"
