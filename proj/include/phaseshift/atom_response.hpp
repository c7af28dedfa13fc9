#pragma once

// Steady state of a coherently driven two-level atom.
//
// Detuning is carried in units of the linewidth (delta = Delta/Gamma) and the
// drive strength as the on-resonance saturation parameter s0. Physical
// quantities only enter through physical_to_normalized().

#include <complex>

namespace phaseshift {

namespace constants {
// CODATA 2018
inline constexpr double hbar = 1.054571817e-34;          // J s
inline constexpr double epsilon0 = 8.8541878128e-12;     // F/m
inline constexpr double speed_of_light = 299792458.0;    // m/s
}  // namespace constants

/// Full dipole-weighted solid angle, 8*pi/3.
inline constexpr double kFullDipoleSolidAngle = 8.0 * 3.141592653589793238462643383279502884 / 3.0;

class AtomTransition {
 public:
  /// Linewidth follows from the dipole moment: Gamma = omega0^3 mu^2 / (3 pi eps0 hbar c^3).
  static AtomTransition from_dipole(double omega0, double mu);
  /// Dipole moment follows from the linewidth (inverse of from_dipole).
  static AtomTransition from_linewidth(double omega0, double gamma);

  double omega0() const { return omega0_; }
  double gamma() const { return gamma_; }
  double mu() const { return mu_; }
  double wavelength() const;

 private:
  AtomTransition(double omega0, double gamma, double mu) : omega0_(omega0), gamma_(gamma), mu_(mu) {}

  double omega0_;
  double gamma_;
  double mu_;
};

struct Drive {
  double delta = 0.0;  // Delta / Gamma
  double s0 = 0.0;     // on-resonance saturation parameter

  double saturation() const;
};

struct NormalizedDrive {
  double e0;    // V/m, field component along the dipole at the atom
  double rabi;  // rad/s
  double s0;
};

/// Converts an incident power into field amplitude, Rabi frequency and s0.
/// `solid_angle` is the unnormalized dipole-weighted solid angle in [0, 8pi/3].
/// The drive frequency is approximated by the transition frequency.
NormalizedDrive physical_to_normalized(double power, const AtomTransition& atom, double solid_angle, double eta);

/// s0 = 8 P omega_n eta^2 / (hbar omega0 Gamma), evaluated directly.
double saturation_from_power(double power, const AtomTransition& atom, double omega_n, double eta);

double saturation_at_detuning(double s0, double delta);

double excited_state_population(double s);

/// rho_ab in physical units (all three arguments in rad/s).
std::complex<double> steady_state_coherence(double rabi, double detuning, double gamma);

/// Phase of the scattered field; with `include_gouy` the transmitted beam's
/// pi/2 Gouy shift is folded in.
double scattered_phase(double delta, bool include_gouy = false);

/// Coherently scattered power over incident power.
double scattered_power_ratio(double omega_n, double eta, double delta, double s0);

double coherent_fraction(double s);

}  // namespace phaseshift
