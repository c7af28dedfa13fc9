#include "phaseshift/phase_model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "phaseshift/atom_response.hpp"
#include "phaseshift/error.hpp"

namespace phaseshift {

namespace {

void check_unit(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) fail(ErrorCode::Domain, std::string(name) + " must lie in [0, 1]");
}

// Shared tail of the symmetric and asymmetric formulas:
//   transmitted * (1+s)^(3/2) (1+4d^2) - g - i 2 g d
// where g is the (geometric-mean) coupling amplitude 2 sqrt(W W') eta eta'.
PhaseResult assemble(double transmitted, double g, double delta, double s0) {
  if (!std::isfinite(delta)) fail(ErrorCode::Domain, "detuning must be finite");
  const double s = saturation_at_detuning(s0, delta);
  const double detuning_factor = 1.0 + 4.0 * delta * delta;
  PhaseResult r;
  r.real_part = transmitted * std::pow(1.0 + s, 1.5) * detuning_factor - g;
  r.imag_part = -2.0 * g * delta;
  // keep +pi on resonance: atan2(-0, x<0) would give -pi
  if (r.imag_part == 0.0) r.imag_part = 0.0;

  if (r.real_part == 0.0 && r.imag_part == 0.0) {
    r.branch = Branch::Boundary;
    r.phi = 0.0;
    return r;
  }
  r.phi = std::atan2(r.imag_part, r.real_part);
  if (delta == 0.0) {
    r.branch = r.real_part < 0.0 ? Branch::Pi : Branch::Zero;
  } else {
    r.branch = Branch::Generic;
  }
  return r;
}

PhaseResult require_defined(PhaseResult r) {
  if (r.branch == Branch::Boundary) {
    fail(ErrorCode::Degenerate, "phase undefined: coherent superposition vanishes (zero complex argument)");
  }
  return r;
}

}  // namespace

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::Pi: return "pi";
    case Branch::Zero: return "zero";
    case Branch::Boundary: return "boundary";
    case Branch::Generic: return "generic";
  }
  return "generic";
}

void SymmetricCoupling::validate() const {
  check_unit(omega_n, "omega_n");
  check_unit(eta, "eta");
}

void AsymmetricCoupling::validate() const {
  check_unit(omega_n, "omega_n");
  check_unit(eta, "eta");
  check_unit(omega_n_prime, "omega_n_prime");
  check_unit(eta_prime, "eta_prime");
  check_unit(p, "p");
  if (p == 0.0) fail(ErrorCode::Domain, "re-collimated power fraction p must be positive");
}

PhaseResult phase_components_symmetric(const SymmetricCoupling& c, double delta, double s0) {
  c.validate();
  return assemble(1.0, c.strength(), delta, s0);
}

PhaseResult phase_components_asymmetric(const AsymmetricCoupling& c, double delta, double s0) {
  c.validate();
  const double g = 2.0 * std::sqrt(c.omega_n * c.omega_n_prime) * c.eta * c.eta_prime;
  return assemble(std::sqrt(c.p), g, delta, s0);
}

PhaseResult phase_symmetric(const SymmetricCoupling& c, double delta, double s0) {
  return require_defined(phase_components_symmetric(c, delta, s0));
}

PhaseResult phase_asymmetric(const AsymmetricCoupling& c, double delta, double s0) {
  return require_defined(phase_components_asymmetric(c, delta, s0));
}

Branch resonance_branch(const SymmetricCoupling& c, double s0) {
  c.validate();
  if (!(s0 >= 0.0)) fail(ErrorCode::Domain, "s0 must be non-negative");
  const double lhs = c.strength();
  const double rhs = std::pow(1.0 + s0, 1.5);
  if (lhs > rhs) return Branch::Pi;
  if (lhs < rhs) return Branch::Zero;
  return Branch::Boundary;
}

std::optional<double> critical_saturation(const SymmetricCoupling& c) {
  c.validate();
  const double g = c.strength();
  if (g < 1.0) return std::nullopt;
  return std::cbrt(g * g) - 1.0;
}

double dispersive_phase_arctan(const SymmetricCoupling& c, double delta, double s0) {
  c.validate();
  if (!(std::abs(delta) >= 0.5)) {
    fail(ErrorCode::Precondition, "arctan form requires |delta| >= 0.5");
  }
  const double s = saturation_at_detuning(s0, delta);
  const double numer = 2.0 * c.strength() * delta;
  const double denom = std::pow(1.0 + s, 1.5) * (1.0 + 4.0 * delta * delta) - c.strength();
  if (denom == 0.0) return -std::copysign(0.5 * std::numbers::pi, numer);
  return -std::atan(numer / denom);
}

double kerr_linear_phase(const SymmetricCoupling& c, double delta) {
  c.validate();
  const double denom = 1.0 + 4.0 * delta * delta - c.strength();
  if (denom == 0.0) fail(ErrorCode::Pole, "Kerr linear phase has a pole at 1 + 4 delta^2 = 2 omega_n eta^2");
  return -2.0 * c.strength() * delta / denom;
}

double kerr_phase(double phi0, double s) {
  if (!(s >= 0.0)) fail(ErrorCode::Domain, "saturation must be non-negative");
  return phi0 * (1.0 - 1.5 * s);
}

double kerr_relative_error(const SymmetricCoupling& c, double delta, double s) {
  if (!(s >= 0.0)) fail(ErrorCode::Domain, "saturation must be non-negative");
  const double s0 = s * (1.0 + 4.0 * delta * delta);
  const double full = phase_symmetric(c, delta, s0).phi;
  if (full == 0.0) fail(ErrorCode::Degenerate, "relative error undefined for a vanishing full-model phase");
  const double approx = kerr_phase(kerr_linear_phase(c, delta), s);
  return std::abs(full - approx) / std::abs(full);
}

double repeater_margin(double phi, double coherent_amplitude) {
  if (!(coherent_amplitude > 0.0)) fail(ErrorCode::Domain, "coherent amplitude must be positive");
  return std::abs(phi) * std::sqrt(coherent_amplitude);
}

}  // namespace phaseshift
