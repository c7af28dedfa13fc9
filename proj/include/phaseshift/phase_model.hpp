#pragma once

// Phase of the superposition of the transmitted beam and the coherently
// scattered field, for symmetric and asymmetric focusing/collection optics.

#include <optional>
#include <string_view>

namespace phaseshift {

/// Focusing parameters: dipole-weighted solid-angle fraction and mode overlap.
struct SymmetricCoupling {
  double omega_n = 1.0;
  double eta = 1.0;

  /// Throws ErrorCode::Domain unless both fields lie in [0, 1].
  void validate() const;
  /// 2 omega_n eta^2, the scattered-to-transmitted amplitude scale on resonance.
  double strength() const { return 2.0 * omega_n * eta * eta; }
};

/// Collection optics differ from the focusing optics: omega_n_prime and
/// eta_prime describe the re-collimating side, p the re-collimated power
/// fraction of the incident beam.
struct AsymmetricCoupling {
  double omega_n = 1.0;
  double eta = 1.0;
  double omega_n_prime = 1.0;
  double eta_prime = 1.0;
  double p = 1.0;

  void validate() const;
  static AsymmetricCoupling collapsed(const SymmetricCoupling& c) {
    return {c.omega_n, c.eta, c.omega_n, c.eta, 1.0};
  }
  SymmetricCoupling focusing() const { return {omega_n, eta}; }
};

enum class Branch { Pi, Zero, Boundary, Generic };

std::string_view to_string(Branch b);

struct PhaseResult {
  double phi = 0.0;  // atan2(imag_part, real_part), in (-pi, pi]
  Branch branch = Branch::Generic;
  double real_part = 0.0;
  double imag_part = 0.0;
};

/// Complex argument of the phase formula without taking its angle. Never
/// throws on a zero argument; `branch` is Boundary there and `phi` is 0.
/// Callers that need a defined phase use phase_symmetric().
PhaseResult phase_components_symmetric(const SymmetricCoupling& c, double delta, double s0);
PhaseResult phase_components_asymmetric(const AsymmetricCoupling& c, double delta, double s0);

/// Throws ErrorCode::Degenerate at the zero-argument point.
PhaseResult phase_symmetric(const SymmetricCoupling& c, double delta, double s0);
/// Throws ErrorCode::Domain for p == 0 and ErrorCode::Degenerate at the zero-argument point.
PhaseResult phase_asymmetric(const AsymmetricCoupling& c, double delta, double s0);

/// On-resonance branch: Pi iff 2 omega_n eta^2 > (1+s0)^(3/2).
Branch resonance_branch(const SymmetricCoupling& c, double s0);

/// Smallest s0 at which the resonance branch leaves Pi, or nullopt if the
/// coupling never reaches the Pi branch.
std::optional<double> critical_saturation(const SymmetricCoupling& c);

/// arctan form of the symmetric phase, valid for |delta| >= 1/2 where the real
/// part cannot go negative.
double dispersive_phase_arctan(const SymmetricCoupling& c, double delta, double s0);

/// Weak-drive dispersive phase phi0 of the Kerr-type expansion.
double kerr_linear_phase(const SymmetricCoupling& c, double delta);

/// phi0 (1 - 3s/2).
double kerr_phase(double phi0, double s);

/// |phi_full - phi_kerr| / |phi_full| at detuned saturation s.
double kerr_relative_error(const SymmetricCoupling& c, double delta, double s);

/// |phi| sqrt(amplitude); above 1 the shift exceeds the coherent-state phase
/// uncertainty amplitude^(-1/2).
double repeater_margin(double phi, double coherent_amplitude);

}  // namespace phaseshift
