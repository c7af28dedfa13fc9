#include "phaseshift/coupling_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "phaseshift/error.hpp"
#include "phaseshift/numerics.hpp"

namespace phaseshift {

namespace {

using std::numbers::pi;

constexpr numerics::QuadratureOptions kAngularQuadrature{1e-9, 1e-12, 20};
constexpr numerics::QuadratureOptions kPupilQuadrature{1e-10, 1e-10, 24};

// Below this radius (in units of f) pupil integrals use a linear rule.
constexpr double kLogSplit = 1e-2;

// 1 - cos(theta) without cancellation near theta = 0.
double one_minus_cos(double theta) {
  const double h = std::sin(0.5 * theta);
  return 2.0 * h * h;
}

double axial_cap(double theta) {
  const double v = one_minus_cos(theta);
  const double c = 1.0 - v;
  return 0.25 * v * v * (2.0 + c);
}

double transverse_cap(double theta) {
  const double v = one_minus_cos(theta);
  const double c = 1.0 - v;
  return 0.75 * v - 0.125 * v * v * (2.0 + c);
}

double theta_of_radius(double d, double f) {
  if (d == 0.0) return pi;
  return pi - 2.0 * std::atan(d / (2.0 * f));
}

// Integral of g(d) d dd over [lo, hi], expressed in units of f^2.
double pupil_integral(const std::function<double(double)>& g, double lo, double hi, double f) {
  const auto integrand = [&](double x) { return g(x * f) * x; };
  double x_lo = lo / f;
  const double x_hi = hi / f;
  double total = 0.0;
  if (x_lo < kLogSplit) {
    const double split = std::min(x_hi, kLogSplit);
    total += numerics::integrate(integrand, x_lo, split, kPupilQuadrature);
    x_lo = split;
  }
  if (x_lo < x_hi) total += numerics::integrate_log(integrand, x_lo, x_hi, kPupilQuadrature);
  return total;
}

std::function<double(double)> pupil_amplitude(const BeamProfile& profile, const ParabolicMirror& mirror) {
  if (profile.kind() == BeamProfile::Kind::DipoleMatched) {
    return [mirror](double d) { return d > 0.0 ? pupil_dipole_profile(d, mirror) : 0.0; };
  }
  return [&profile](double d) { return profile(d); };
}

double normalized_overlap(double cross, double norm_a, double norm_b) {
  if (!(norm_a > 0.0) || !(norm_b > 0.0)) {
    fail(ErrorCode::Degenerate, "overlap undefined: profile has zero norm on the region");
  }
  return std::min(1.0, std::abs(cross) / std::sqrt(norm_a * norm_b));
}

}  // namespace

void ConeAperture::validate() const {
  if (!(half_angle > 0.0 && half_angle <= pi)) fail(ErrorCode::Domain, "cone half-angle must lie in (0, pi]");
}

void ParabolicMirror::validate() const {
  if (!(focal_length > 0.0) || !std::isfinite(focal_length)) fail(ErrorCode::Domain, "focal length must be positive");
  if (!(aperture_radius > 0.0) || !std::isfinite(aperture_radius)) {
    fail(ErrorCode::Domain, "aperture radius must be positive");
  }
  if (!(hole_radius >= 0.0 && hole_radius < aperture_radius)) {
    fail(ErrorCode::Domain, "hole radius must satisfy 0 <= hole < aperture");
  }
}

BeamProfile BeamProfile::flat_top() { return {}; }

BeamProfile BeamProfile::doughnut(double waist) {
  if (!(waist > 0.0)) fail(ErrorCode::Domain, "doughnut waist must be positive");
  BeamProfile p;
  p.kind_ = Kind::Doughnut;
  p.waist_ = waist;
  p.name_ = "doughnut";
  return p;
}

BeamProfile BeamProfile::dipole_matched() {
  BeamProfile p;
  p.kind_ = Kind::DipoleMatched;
  p.name_ = "matched";
  return p;
}

BeamProfile BeamProfile::custom(std::function<double(double)> amplitude, std::string name) {
  if (!amplitude) fail(ErrorCode::Domain, "custom profile needs an amplitude function");
  BeamProfile p;
  p.kind_ = Kind::Custom;
  p.name_ = std::move(name);
  p.custom_ = std::move(amplitude);
  return p;
}

double BeamProfile::operator()(double r) const {
  switch (kind_) {
    case Kind::FlatTop: return 1.0;
    case Kind::Doughnut: {
      const double x = r / waist_;
      return x * std::exp(-x * x);
    }
    case Kind::Custom: return custom_(r);
    case Kind::DipoleMatched: break;
  }
  fail(ErrorCode::Usage, "dipole-matched profile has no value outside a geometry");
}

double dipole_intensity(DipoleOrientation orientation, double theta, double phi) {
  if (orientation == DipoleOrientation::Axial) {
    const double s = std::sin(theta);
    return s * s;
  }
  const double c = std::sin(theta) * std::cos(phi);
  return 1.0 - c * c;
}

double dipole_cap_fraction(DipoleOrientation orientation, double theta) {
  return orientation == DipoleOrientation::Axial ? axial_cap(theta) : transverse_cap(theta);
}

double cone_weighted_solid_angle(const ConeAperture& cone) {
  cone.validate();
  return dipole_cap_fraction(cone.orientation, cone.half_angle);
}

RayMap parabola_ray_map(double d, const ParabolicMirror& mirror) {
  if (!(d > 0.0)) fail(ErrorCode::Domain, "pupil radius must be positive");
  const double f = mirror.focal_length;
  return {theta_of_radius(d, f), 4.0 * f * f / d};
}

double mirror_weighted_solid_angle(const ParabolicMirror& mirror, DipoleOrientation orientation) {
  mirror.validate();
  if (orientation != DipoleOrientation::Axial) {
    fail(ErrorCode::Domain, "parabolic mirrors are modelled for axial dipoles only");
  }
  const double f = mirror.focal_length;
  return axial_cap(theta_of_radius(mirror.hole_radius, f)) - axial_cap(theta_of_radius(mirror.aperture_radius, f));
}

double pupil_dipole_profile(double d, const ParabolicMirror& mirror) {
  if (!(d > 0.0)) fail(ErrorCode::Domain, "pupil radius must be positive");
  const double t = d / (2.0 * mirror.focal_length);
  return std::sin(theta_of_radius(d, mirror.focal_length)) / (1.0 + t * t);
}

double angular_image_amplitude(const BeamProfile& profile, const ParabolicMirror& mirror, double theta) {
  const double f = mirror.focal_length;
  if (profile.kind() == BeamProfile::Kind::DipoleMatched) return f * std::sin(theta);
  const double t = std::tan(0.5 * (pi - theta));
  return f * (1.0 + t * t) * profile(2.0 * f * t);
}

double pupil_power(const BeamProfile& profile, const ParabolicMirror& mirror, const PupilRegion& region) {
  if (!(region.inner >= 0.0 && region.inner <= region.outer)) fail(ErrorCode::Domain, "invalid pupil region");
  const auto amp = pupil_amplitude(profile, mirror);
  return pupil_integral([&](double d) { return amp(d) * amp(d); }, region.inner, region.outer, mirror.focal_length);
}

double overlap_eta(const BeamProfile& profile, const ParabolicMirror& mirror, const PupilRegion& region) {
  mirror.validate();
  if (!(region.inner >= 0.0 && region.inner < region.outer)) {
    fail(ErrorCode::Degenerate, "overlap region is empty");
  }
  const double f = mirror.focal_length;
  const auto amp = pupil_amplitude(profile, mirror);
  const auto dip = [&mirror](double d) { return d > 0.0 ? pupil_dipole_profile(d, mirror) : 0.0; };

  const double cross = pupil_integral([&](double d) { return amp(d) * dip(d); }, region.inner, region.outer, f);
  const double norm_a = pupil_integral([&](double d) { return amp(d) * amp(d); }, region.inner, region.outer, f);
  const double norm_b = pupil_integral([&](double d) { return dip(d) * dip(d); }, region.inner, region.outer, f);
  return normalized_overlap(cross, norm_a, norm_b);
}

double overlap_eta(const BeamProfile& profile, const ParabolicMirror& mirror) {
  mirror.validate();
  return overlap_eta(profile, mirror, {mirror.hole_radius, mirror.aperture_radius});
}

double overlap_eta(const BeamProfile& profile, DipoleOrientation orientation, const AngularRegion& region) {
  if (!(region.theta_min >= 0.0 && region.theta_min < region.theta_max && region.theta_max <= pi)) {
    fail(ErrorCode::Degenerate, "angular region is empty or outside [0, pi]");
  }
  const bool matched = profile.kind() == BeamProfile::Kind::DipoleMatched;

  // Azimuthal integrals of the rotationally symmetric profile against the
  // dipole amplitude are closed form; only the polar integral is numerical.
  std::function<double(double)> cross_phi;
  std::function<double(double)> dipole_sq_phi;
  if (orientation == DipoleOrientation::Axial) {
    dipole_sq_phi = [](double th) { return 2.0 * pi * std::sin(th) * std::sin(th); };
    cross_phi = [&](double th) {
      const double a = matched ? std::sin(th) : profile(th);
      return 2.0 * pi * a * std::sin(th);
    };
  } else {
    dipole_sq_phi = [](double th) { return 2.0 * pi * (1.0 - 0.5 * std::sin(th) * std::sin(th)); };
    cross_phi = [&](double th) {
      if (matched) return 2.0 * pi * (1.0 - 0.5 * std::sin(th) * std::sin(th));
      // integral of sqrt(1 - sin^2(th) cos^2(phi)) over phi is 4 E(sin th)
      return profile(th) * 4.0 * std::comp_ellint_2(std::sin(th));
    };
  }
  const auto profile_sq_phi = [&](double th) {
    if (matched) return dipole_sq_phi(th);
    const double a = profile(th);
    return 2.0 * pi * a * a;
  };

  const auto band = [&](const std::function<double(double)>& g) {
    return numerics::integrate([&](double th) { return g(th) * std::sin(th); }, region.theta_min, region.theta_max,
                               kAngularQuadrature);
  };
  return normalized_overlap(band(cross_phi), band(profile_sq_phi), band(dipole_sq_phi));
}

double overlap_eta(const BeamProfile& profile, const ConeAperture& cone) {
  cone.validate();
  return overlap_eta(profile, cone.orientation, {0.0, cone.half_angle});
}

RecollimationParameters recollimation_parameters(const ParabolicMirror& mirror, const BeamProfile& profile) {
  mirror.validate();
  const double f = mirror.focal_length;
  const double R = mirror.aperture_radius;
  const double h = mirror.hole_radius;
  const double four_f2 = 4.0 * f * f;

  PupilRegion kept{std::max(h, four_f2 / R), h > 0.0 ? std::min(R, four_f2 / h) : R};
  if (!(kept.inner < kept.outer)) {
    fail(ErrorCode::Degenerate, "no incident ray is re-collimated by this mirror (p = 0)");
  }

  RecollimationParameters out{};
  out.kept = kept;
  out.omega_n = mirror_weighted_solid_angle(mirror);
  out.eta = overlap_eta(profile, mirror);
  out.omega_n_prime = axial_cap(theta_of_radius(kept.inner, f)) - axial_cap(theta_of_radius(kept.outer, f));

  const double total = pupil_power(profile, mirror, {h, R});
  if (!(total > 0.0)) fail(ErrorCode::Degenerate, "incident profile carries no power on the mirror");
  out.p = std::min(1.0, pupil_power(profile, mirror, kept) / total);

  // Energy-conserving image of the profile under d -> d' = 4 f^2 / d.
  const auto amp = pupil_amplitude(profile, mirror);
  const BeamProfile exit_profile = BeamProfile::custom(
      [amp, four_f2](double d_prime) {
        const double d = four_f2 / d_prime;
        return amp(d) * d / d_prime;
      },
      profile.name() + "-recollimated");
  out.eta_prime = overlap_eta(exit_profile, mirror, {four_f2 / kept.outer, four_f2 / kept.inner});
  return out;
}

WaistOptimum optimize_waist(const ParabolicMirror& mirror, const ProfileFamily& family, double lo_factor,
                            double hi_factor, double rel_tol) {
  mirror.validate();
  if (!(lo_factor > 0.0 && lo_factor < hi_factor)) fail(ErrorCode::Domain, "invalid waist search bracket");
  const double f = mirror.focal_length;
  const auto best = numerics::golden_section_maximize(
      [&](double w) { return overlap_eta(family(w), mirror); }, lo_factor * f, hi_factor * f, rel_tol);
  return {best.x, best.value};
}

WaistOptimum optimize_waist(const ParabolicMirror& mirror, double lo_factor, double hi_factor, double rel_tol) {
  return optimize_waist(mirror, [](double w) { return BeamProfile::doughnut(w); }, lo_factor, hi_factor, rel_tol);
}

}  // namespace phaseshift
