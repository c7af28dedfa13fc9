#pragma once

// Focusing geometry: dipole-weighted solid-angle fractions for lens cones and
// deep parabolic mirrors, mode overlaps, and the re-collimation losses of a
// finite parabola.
//
// Angles are polar angles from the optical axis. For a mirror the axis points
// from the vertex through the focus, so the vertex direction is theta = pi.

#include <functional>
#include <string>

namespace phaseshift {

enum class DipoleOrientation { Axial, Transverse };

struct ConeAperture {
  double half_angle = 0.0;  // (0, pi]
  DipoleOrientation orientation = DipoleOrientation::Axial;

  void validate() const;
};

struct ParabolicMirror {
  double focal_length = 1.0;
  double aperture_radius = 1.0;
  double hole_radius = 0.0;

  void validate() const;
};

/// Radially symmetric incident amplitude. The radial coordinate is the pupil
/// radius for mirrors and the polar angle for cones.
class BeamProfile {
 public:
  enum class Kind { FlatTop, Doughnut, DipoleMatched, Custom };

  static BeamProfile flat_top();
  /// (r/w) exp(-r^2/w^2)
  static BeamProfile doughnut(double waist);
  /// Exactly the dipole's own amplitude pattern in the given geometry.
  static BeamProfile dipole_matched();
  /// The function must be re-entrant.
  static BeamProfile custom(std::function<double(double)> amplitude, std::string name = "custom");

  Kind kind() const { return kind_; }
  double waist() const { return waist_; }
  const std::string& name() const { return name_; }

  /// Amplitude at radius r. DipoleMatched has no geometry-free value; the
  /// geometry routines substitute the dipole pattern for it.
  double operator()(double r) const;

 private:
  Kind kind_ = Kind::FlatTop;
  double waist_ = 0.0;
  std::string name_ = "flattop";
  std::function<double(double)> custom_;
};

/// sin^2 of the angle to the dipole axis; the dipole is along z (Axial) or x (Transverse).
double dipole_intensity(DipoleOrientation orientation, double theta, double phi);

/// Fraction of the full dipole-weighted solid angle inside the cap [0, theta].
double dipole_cap_fraction(DipoleOrientation orientation, double theta);

double cone_weighted_solid_angle(const ConeAperture& cone);

struct RayMap {
  double theta;    // emission angle of the focal ray reaching pupil radius d
  double d_prime;  // exit radius after the second reflection, 4 f^2 / d
};

RayMap parabola_ray_map(double d, const ParabolicMirror& mirror);

/// Dipole-weighted solid angle covered by the annulus [hole, aperture].
/// Only axial dipoles keep the mirror's rotational symmetry.
double mirror_weighted_solid_angle(const ParabolicMirror& mirror,
                                   DipoleOrientation orientation = DipoleOrientation::Axial);

/// Pupil image of the axial dipole's far-field amplitude:
/// sin(theta(d)) / (1 + (d/2f)^2).
double pupil_dipole_profile(double d, const ParabolicMirror& mirror);

/// Incident amplitude carried from the pupil to emission angle theta so that
/// power per solid angle is conserved: a(theta) = f (1 + (d/2f)^2) A(d).
double angular_image_amplitude(const BeamProfile& profile, const ParabolicMirror& mirror, double theta);

struct PupilRegion {
  double inner = 0.0;
  double outer = 0.0;
};

struct AngularRegion {
  double theta_min = 0.0;
  double theta_max = 0.0;
};

/// Normalized amplitude overlap with the dipole pattern over a pupil annulus
/// (measure 2 pi d dd).
double overlap_eta(const BeamProfile& profile, const ParabolicMirror& mirror, const PupilRegion& region);
/// Same, over the mirror's illuminated annulus [hole, aperture].
double overlap_eta(const BeamProfile& profile, const ParabolicMirror& mirror);
/// Overlap over a polar-angle band (measure sin(theta) dtheta dphi).
double overlap_eta(const BeamProfile& profile, DipoleOrientation orientation, const AngularRegion& region);
double overlap_eta(const BeamProfile& profile, const ConeAperture& cone);

/// Power of the profile inside a pupil annulus, in units of f^2 (2 pi omitted).
double pupil_power(const BeamProfile& profile, const ParabolicMirror& mirror, const PupilRegion& region);

struct RecollimationParameters {
  double omega_n;        // focusing side
  double eta;            // focusing side
  double omega_n_prime;  // re-collimated part
  double eta_prime;
  double p;              // re-collimated power fraction
  PupilRegion kept;      // entrance radii that are re-collimated
};

/// Rays entering at d leave at 4f^2/d. They are kept if the exit radius lies
/// inside the mirror and outside the hole.
RecollimationParameters recollimation_parameters(const ParabolicMirror& mirror, const BeamProfile& profile);

struct WaistOptimum {
  double waist;
  double eta;
};

using ProfileFamily = std::function<BeamProfile(double width)>;

/// Width maximizing overlap_eta of a one-parameter profile family on the
/// mirror, by golden-section search over [lo_factor f, hi_factor f]. The
/// overlap is assumed unimodal in the width.
WaistOptimum optimize_waist(const ParabolicMirror& mirror, const ProfileFamily& family, double lo_factor = 0.1,
                            double hi_factor = 20.0, double rel_tol = 1e-6);
/// Doughnut family.
WaistOptimum optimize_waist(const ParabolicMirror& mirror, double lo_factor = 0.1, double hi_factor = 20.0,
                            double rel_tol = 1e-6);

}  // namespace phaseshift
