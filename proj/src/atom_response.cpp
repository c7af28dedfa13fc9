#include "phaseshift/atom_response.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "phaseshift/error.hpp"

namespace phaseshift {

namespace {

using std::numbers::pi;

void require(bool ok, const char* what) {
  if (!ok) fail(ErrorCode::Domain, what);
}

void require_unit_interval(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) fail(ErrorCode::Domain, std::string(name) + " must lie in [0, 1]");
}

}  // namespace

AtomTransition AtomTransition::from_dipole(double omega0, double mu) {
  require(omega0 > 0.0 && std::isfinite(omega0), "transition frequency must be positive");
  require(mu > 0.0 && std::isfinite(mu), "dipole moment must be real and positive");
  using namespace constants;
  const double c3 = speed_of_light * speed_of_light * speed_of_light;
  const double gamma = omega0 * omega0 * omega0 * mu * mu / (3.0 * pi * epsilon0 * hbar * c3);
  return {omega0, gamma, mu};
}

AtomTransition AtomTransition::from_linewidth(double omega0, double gamma) {
  require(omega0 > 0.0 && std::isfinite(omega0), "transition frequency must be positive");
  require(gamma > 0.0 && std::isfinite(gamma), "linewidth must be positive");
  using namespace constants;
  const double c3 = speed_of_light * speed_of_light * speed_of_light;
  const double mu = std::sqrt(gamma * 3.0 * pi * epsilon0 * hbar * c3 / (omega0 * omega0 * omega0));
  return {omega0, gamma, mu};
}

double AtomTransition::wavelength() const { return 2.0 * pi * constants::speed_of_light / omega0_; }

double Drive::saturation() const { return saturation_at_detuning(s0, delta); }

NormalizedDrive physical_to_normalized(double power, const AtomTransition& atom, double solid_angle, double eta) {
  require(power >= 0.0, "power must be non-negative");
  require(solid_angle >= 0.0 && solid_angle <= kFullDipoleSolidAngle, "solid angle must lie in [0, 8pi/3]");
  require_unit_interval(eta, "eta");
  using namespace constants;
  const double e0 = std::sqrt(2.0 * power) / (atom.wavelength() * std::sqrt(epsilon0 * speed_of_light)) *
                    std::sqrt(solid_angle) * eta;
  const double rabi = e0 * atom.mu() / hbar;
  const double ratio = rabi / atom.gamma();
  return {e0, rabi, 2.0 * ratio * ratio};
}

double saturation_from_power(double power, const AtomTransition& atom, double omega_n, double eta) {
  require(power >= 0.0, "power must be non-negative");
  require_unit_interval(omega_n, "omega_n");
  require_unit_interval(eta, "eta");
  return 8.0 * power * omega_n * eta * eta / (constants::hbar * atom.omega0() * atom.gamma());
}

double saturation_at_detuning(double s0, double delta) {
  require(s0 >= 0.0, "s0 must be non-negative");
  return s0 / (1.0 + 4.0 * delta * delta);
}

double excited_state_population(double s) {
  require(s >= 0.0, "saturation must be non-negative");
  if (std::isinf(s)) return 0.5;
  return 0.5 * s / (1.0 + s);
}

std::complex<double> steady_state_coherence(double rabi, double detuning, double gamma) {
  require(gamma > 0.0, "linewidth must be positive");
  const double denom = 4.0 * detuning * detuning + gamma * gamma + 2.0 * rabi * rabi;
  return std::complex<double>(-2.0 * detuning, gamma) * (rabi / denom);
}

double scattered_phase(double delta, bool include_gouy) {
  return std::atan(2.0 * delta) + (include_gouy ? pi : 0.5 * pi);
}

double scattered_power_ratio(double omega_n, double eta, double delta, double s0) {
  require_unit_interval(omega_n, "omega_n");
  require_unit_interval(eta, "eta");
  const double s = saturation_at_detuning(s0, delta);
  return 4.0 * omega_n * eta * eta / ((1.0 + 4.0 * delta * delta) * (1.0 + s) * (1.0 + s));
}

double coherent_fraction(double s) {
  require(s >= 0.0, "saturation must be non-negative");
  return 1.0 / (1.0 + s);
}

}  // namespace phaseshift
