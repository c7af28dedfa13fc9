#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "phaseshift/coupling_geometry.hpp"
#include "phaseshift/error.hpp"
#include "phaseshift/numerics.hpp"

using namespace phaseshift;
using std::numbers::pi;

namespace {

constexpr double kFullWeight = 8.0 * pi / 3.0;

double brute_cap(DipoleOrientation o, double theta) {
  return oracle::simpson2d([o](double th, double ph) { return dipole_intensity(o, th, ph) * std::sin(th); }, 0.0, theta,
                           0.0, 2.0 * pi, 1000, 1000) /
         kFullWeight;
}

// sin(theta)/(1+t^2) written through t = d/(2f) only
double dipole_pupil(double d, double f) {
  const double t = d / (2.0 * f);
  return 2.0 * t / ((1.0 + t * t) * (1.0 + t * t));
}

template <class A>
double pupil_overlap(A&& amp, double f, double lo, double hi) {
  const int n = 40000;
  const double cross = oracle::simpson([&](double d) { return amp(d) * dipole_pupil(d, f) * d; }, lo, hi, n);
  const double na = oracle::simpson([&](double d) { return amp(d) * amp(d) * d; }, lo, hi, n);
  const double nb = oracle::simpson([&](double d) { return dipole_pupil(d, f) * dipole_pupil(d, f) * d; }, lo, hi, n);
  return std::abs(cross) / std::sqrt(na * nb);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::Usage;
}

}  // namespace

TEST_CASE("dipole cap fractions: closed forms against 2-D quadrature") {
  for (auto o : {DipoleOrientation::Axial, DipoleOrientation::Transverse}) {
    for (double theta : {0.05, 0.4, 1.0, std::asin(0.95), pi / 2, 2.2, 3.0, pi}) {
      CAPTURE(theta);
      CHECK(std::abs(dipole_cap_fraction(o, theta) - brute_cap(o, theta)) < 1e-9);

      // adaptive nested quadrature as a second reference
      const double nested = numerics::integrate(
          [&](double th) {
            return std::sin(th) *
                   numerics::integrate([&](double ph) { return dipole_intensity(o, th, ph); }, 0.0, 2.0 * pi);
          },
          0.0, theta);
      CHECK(std::abs(dipole_cap_fraction(o, theta) - nested / kFullWeight) < 1e-9);
    }
  }
}

TEST_CASE("cone weighted solid angle golden values") {
  const double alpha = std::asin(0.95);
  CHECK(cone_weighted_solid_angle({alpha, DipoleOrientation::Transverse}) == doctest::Approx(0.3791).epsilon(2e-4));
  for (auto o : {DipoleOrientation::Axial, DipoleOrientation::Transverse}) {
    CHECK(std::abs(cone_weighted_solid_angle({pi / 2, o}) - 0.5) < 1e-12);
    CHECK(std::abs(cone_weighted_solid_angle({pi, o}) - 1.0) < 1e-12);
    // monotone in the half-angle
    double previous = 0.0;
    for (int k = 1; k <= 100; ++k) {
      const double v = cone_weighted_solid_angle({pi * k / 100.0, o});
      CHECK(v > previous);
      previous = v;
    }
  }
  CHECK(code_of([] { cone_weighted_solid_angle({0.0, DipoleOrientation::Axial}); }) == ErrorCode::Domain);
  CHECK(code_of([] { cone_weighted_solid_angle({3.5, DipoleOrientation::Axial}); }) == ErrorCode::Domain);
}

TEST_CASE("parabola ray map against a reflection ray trace") {
  for (double f : {0.3, 1.0, 2.5}) {
    const ParabolicMirror mirror{f, 100.0 * f, 0.0};
    for (double x : {0.01, 0.2, 1.0, 2.0, 3.7, 10.0, 55.0}) {
      const double d = x * f;
      const auto map = parabola_ray_map(d, mirror);
      const auto trace = oracle::trace_parabola(d, f);
      CAPTURE(d);
      CHECK(map.theta == doctest::Approx(trace.theta).epsilon(1e-12));
      CHECK(map.d_prime == doctest::Approx(trace.d_prime).epsilon(1e-9));
      CHECK(trace.miss_distance < 1e-12 * (1.0 + d * d / f));
      CHECK(trace.exit_tilt < 1e-9);
    }
    CHECK(parabola_ray_map(2.0 * f, mirror).theta == doctest::Approx(pi / 2).epsilon(1e-15));
    CHECK(oracle::trace_parabola(2.0 * f, f).theta == doctest::Approx(pi / 2).epsilon(1e-14));
  }
}

TEST_CASE("parabola ray map is an involution") {
  auto gen = oracle::rng(21);
  std::uniform_real_distribution<double> log_d(-3.0, 3.0);
  const ParabolicMirror mirror{1.3, 2000.0, 0.0};
  for (int i = 0; i < 1000; ++i) {
    const double d = std::pow(10.0, log_d(gen));
    const double back = parabola_ray_map(parabola_ray_map(d, mirror).d_prime, mirror).d_prime;
    CHECK(std::abs(back - d) <= 1e-12 * d);
    // emission angles of a ray and its image are supplementary
    const auto map = parabola_ray_map(d, mirror);
    CHECK(map.theta + parabola_ray_map(map.d_prime, mirror).theta == doctest::Approx(pi).epsilon(1e-13));
  }
  CHECK(code_of([&] { parabola_ray_map(0.0, mirror); }) == ErrorCode::Domain);
}

TEST_CASE("pupil to angle mapping conserves power") {
  const double f = 1.7;
  const ParabolicMirror mirror{f, 30.0, 0.0};
  const auto doughnut = BeamProfile::doughnut(2.1);
  const double d1 = 0.3, d2 = 12.0;

  const double pupil = pupil_power(doughnut, mirror, {d1, d2}) * f * f;
  const double angular = oracle::simpson(
      [&](double th) {
        const double a = angular_image_amplitude(doughnut, mirror, th);
        return a * a * std::sin(th);
      },
      parabola_ray_map(d2, mirror).theta, parabola_ray_map(d1, mirror).theta, 200000);
  CHECK(std::abs(angular - pupil) <= 1e-6 * pupil);

  // exit-side image A'(d') = A(d) d / d'
  const double remapped = oracle::simpson(
      [&](double dp) {
        const double d = 4.0 * f * f / dp;
        const double a = doughnut(d) * d / dp;
        return a * a * dp;
      },
      4.0 * f * f / d2, 4.0 * f * f / d1, 200000);
  CHECK(std::abs(remapped - pupil) <= 1e-6 * pupil);

  // the pupil dipole profile is the dipole pattern carried to the pupil
  for (double d : {0.5, 2.0, 9.0}) {
    const auto matched = [&](double th) { return f * std::sin(th); };
    const double th = parabola_ray_map(d, mirror).theta;
    const double t = d / (2.0 * f);
    CHECK(matched(th) == doctest::Approx(f * (1 + t * t) * pupil_dipole_profile(d, mirror)).epsilon(1e-14));
  }
}

TEST_CASE("mirror weighted solid angle") {
  // the whole paraboloid closes the sphere
  CHECK(mirror_weighted_solid_angle({1.0, 1e9, 0.0}) == doctest::Approx(1.0).epsilon(1e-9));
  // d = 2f reaches the focal plane: half of the pattern
  CHECK(mirror_weighted_solid_angle({1.0, 2.0, 0.0}) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(mirror_weighted_solid_angle({1.0, 20.0, 0.4}) == doctest::Approx(0.99539).epsilon(1e-4));

  const ParabolicMirror m{0.8, 6.0, 0.3};
  const double expected = brute_cap(DipoleOrientation::Axial, parabola_ray_map(m.hole_radius, m).theta) -
                          brute_cap(DipoleOrientation::Axial, parabola_ray_map(m.aperture_radius, m).theta);
  CHECK(std::abs(mirror_weighted_solid_angle(m) - expected) < 1e-9);

  CHECK(code_of([] { mirror_weighted_solid_angle({1.0, 2.0, 0.0}, DipoleOrientation::Transverse); }) ==
        ErrorCode::Domain);
  CHECK(code_of([] { mirror_weighted_solid_angle({1.0, 2.0, 3.0}); }) == ErrorCode::Domain);
  CHECK(code_of([] { mirror_weighted_solid_angle({-1.0, 2.0, 0.0}); }) == ErrorCode::Domain);
}

TEST_CASE("overlap is at most one and reaches one only for matched profiles") {
  const ParabolicMirror mirror{1.0, 20.0, 0.4};
  CHECK(overlap_eta(BeamProfile::dipole_matched(), mirror) == doctest::Approx(1.0).epsilon(1e-12));
  for (auto o : {DipoleOrientation::Axial, DipoleOrientation::Transverse}) {
    CHECK(overlap_eta(BeamProfile::dipole_matched(), ConeAperture{1.2, o}) == doctest::Approx(1.0).epsilon(1e-12));
  }

  auto gen = oracle::rng(22);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 40; ++i) {
    const double w = 0.2 + 8.0 * unit(gen);
    const double eta = overlap_eta(BeamProfile::doughnut(w), mirror);
    CHECK(eta < 1.0 - 1e-6);
    CHECK(eta > 0.0);
    CHECK(eta == doctest::Approx(pupil_overlap(BeamProfile::doughnut(w), 1.0, 0.4, 20.0)).epsilon(1e-7));

    const double k = 0.5 + 2.0 * unit(gen);
    const auto poly = BeamProfile::custom([k](double d) { return std::pow(d, k) / (1.0 + d * d * d); });
    CHECK(overlap_eta(poly, mirror) < 1.0);

    const double alpha = 0.3 + 2.8 * unit(gen);
    const auto o = unit(gen) < 0.5 ? DipoleOrientation::Axial : DipoleOrientation::Transverse;
    CHECK(overlap_eta(BeamProfile::flat_top(), ConeAperture{alpha, o}) < 1.0 - 1e-6);
  }
  CHECK(overlap_eta(BeamProfile::flat_top(), mirror) < 1.0);
}

TEST_CASE("cone overlap against 2-D quadrature") {
  const double alpha = 1.1;
  const auto profile = BeamProfile::doughnut(0.7);
  for (auto o : {DipoleOrientation::Axial, DipoleOrientation::Transverse}) {
    const auto dip = [o](double th, double ph) { return std::sqrt(dipole_intensity(o, th, ph)); };
    const double cross = oracle::simpson2d([&](double th, double ph) { return profile(th) * dip(th, ph) * std::sin(th); },
                                           0.0, alpha, 0.0, 2.0 * pi, 1000, 1000);
    const double na = oracle::simpson2d([&](double th, double) { return profile(th) * profile(th) * std::sin(th); }, 0.0,
                                        alpha, 0.0, 2.0 * pi, 1000, 20);
    const double nb = oracle::simpson2d(
        [&](double th, double ph) { return dipole_intensity(o, th, ph) * std::sin(th); }, 0.0, alpha, 0.0, 2.0 * pi,
        1000, 1000);
    CHECK(overlap_eta(profile, ConeAperture{alpha, o}) == doctest::Approx(cross / std::sqrt(na * nb)).epsilon(1e-8));
  }
}

TEST_CASE("flat-top worked example on a finite mirror") {
  const ParabolicMirror mirror{1.0, 4.0, 0.2};
  const auto r = recollimation_parameters(mirror, BeamProfile::flat_top());
  CHECK(r.kept.inner == doctest::Approx(1.0));
  CHECK(r.kept.outer == doctest::Approx(4.0));
  CHECK(std::abs(r.p - 0.9398) < 1e-3);
  CHECK(r.p == doctest::Approx(15.0 / 15.96).epsilon(1e-9));
  CHECK(std::abs(r.omega_n - 0.8957) < 1e-3);
  CHECK(std::abs(r.omega_n_prime - 0.7920) < 1e-3);
  CHECK(r.eta == doctest::Approx(0.915402).epsilon(1e-5));
  CHECK(r.eta_prime == doctest::Approx(0.914633).epsilon(1e-5));

  // eta' from an independent remap of the kept annulus
  const double expected_eta_prime = pupil_overlap(
      [](double dp) {
        const double d = 4.0 / dp;
        return d / dp;
      },
      1.0, 1.0, 4.0);
  CHECK(r.eta_prime == doctest::Approx(expected_eta_prime).epsilon(1e-7));

  CHECK(code_of([] { recollimation_parameters({1.0, 1.5, 0.0}, BeamProfile::flat_top()); }) == ErrorCode::Degenerate);
}

TEST_CASE("waist optimization") {
  SUBCASE("doughnut on a deep mirror, against a grid scan") {
    const ParabolicMirror mirror{1.0, 20.0, 0.4};
    const auto best = optimize_waist(mirror);
    CHECK(best.eta == doctest::Approx(0.9591).epsilon(1e-4));
    CHECK(best.waist == doctest::Approx(2.363).epsilon(2e-3));

    double scan_best = 0.0;
    double scan_w = 0.0;
    for (int k = 0; k <= 200; ++k) {
      const double w = 1.5 + 0.01 * k;
      const double eta = pupil_overlap(BeamProfile::doughnut(w), 1.0, 0.4, 20.0);
      if (eta > scan_best) {
        scan_best = eta;
        scan_w = w;
      }
    }
    CHECK(best.eta >= scan_best - 1e-9);
    CHECK(std::abs(best.waist - scan_w) <= 0.01);
  }

  SUBCASE("a family containing the matched profile finds it") {
    const ParabolicMirror mirror{1.0, 20.0, 0.0};
    const auto family = [](double width) {
      const ParabolicMirror scaled{width, 1.0, 0.0};
      return BeamProfile::custom([scaled](double d) { return d > 0.0 ? pupil_dipole_profile(d, scaled) : 0.0; });
    };
    const auto best = optimize_waist(mirror, family, 0.2, 5.0, 1e-8);
    CHECK(best.waist == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(best.eta == doctest::Approx(1.0).epsilon(1e-10));
  }

  CHECK(code_of([] { optimize_waist({1.0, 20.0, 0.0}, 2.0, 1.0); }) == ErrorCode::Domain);
}

TEST_CASE("profile edge cases") {
  CHECK(code_of([] { BeamProfile::doughnut(0.0); }) == ErrorCode::Domain);
  CHECK(code_of([] { BeamProfile::dipole_matched()(1.0); }) == ErrorCode::Usage);
  CHECK(BeamProfile::doughnut(2.0)(2.0) == doctest::Approx(std::exp(-1.0)));
  CHECK(code_of([] {
          overlap_eta(BeamProfile::custom([](double) { return 0.0; }), ParabolicMirror{1.0, 4.0, 0.0});
        }) == ErrorCode::Degenerate);
}

TEST_CASE("geometry reference points") {
  CHECK(cone_weighted_solid_angle({pi / 3, DipoleOrientation::Axial}) == doctest::Approx(0.15625).epsilon(1e-14));
  const ParabolicMirror unit{1.0, 100.0, 0.0};
  const auto map = parabola_ray_map(1.0, unit);
  CHECK(map.theta == doctest::Approx(2.214297).epsilon(1e-6));
  CHECK(map.theta == doctest::Approx(oracle::trace_parabola(1.0, 1.0).theta).epsilon(1e-13));
  CHECK(map.d_prime == doctest::Approx(4.0).epsilon(1e-15));

  CHECK(pupil_dipole_profile(2.0, unit) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(pupil_dipole_profile(1e-9, unit) < 1e-8);
  CHECK(pupil_dipole_profile(1e9, unit) < 1e-8);
  CHECK(code_of([&] { pupil_dipole_profile(0.0, unit); }) == ErrorCode::Domain);

  // flat top filling the whole sphere around an axial dipole
  CHECK(overlap_eta(BeamProfile::flat_top(), ConeAperture{pi, DipoleOrientation::Axial}) ==
        doctest::Approx(pi * std::sqrt(3.0 / 32.0)).epsilon(1e-9));
  CHECK(std::abs(overlap_eta(BeamProfile::flat_top(), ConeAperture{pi, DipoleOrientation::Axial}) - 0.9620) < 1e-4);

  // an almost closed hole leaves nothing
  CHECK(mirror_weighted_solid_angle({1.0, 4.0, 4.0 - 1e-12}) < 1e-9);

  // theta falls monotonically across the pupil
  double previous = pi;
  for (int k = -300; k <= 300; ++k) {
    const double th = parabola_ray_map(std::pow(10.0, 0.01 * k), unit).theta;
    CHECK(th < previous);
    previous = th;
  }
}

TEST_CASE("pupil and angular norms agree for the standard profiles") {
  const double f = 0.9;
  const ParabolicMirror mirror{f, 50.0, 0.0};
  const double d1 = 0.05, d2 = 40.0;
  const double th_lo = parabola_ray_map(d2, mirror).theta;
  const double th_hi = parabola_ray_map(d1, mirror).theta;
  for (const auto& profile : {BeamProfile::flat_top(), BeamProfile::doughnut(1.4), BeamProfile::dipole_matched()}) {
    CAPTURE(profile.name());
    const double pupil = pupil_power(profile, mirror, {d1, d2}) * f * f;
    const double angular = oracle::simpson(
        [&](double th) {
          const double a = angular_image_amplitude(profile, mirror, th);
          return a * a * std::sin(th);
        },
        th_lo, th_hi, 400000);
    CHECK(std::abs(angular - pupil) <= 1e-6 * pupil);
  }
  // the matched profile's full norm is the pattern norm 4/3, in units of f^2
  const double full = pupil_power(BeamProfile::dipole_matched(), ParabolicMirror{1.0, 1e7, 0.0}, {0.0, 1e7});
  CHECK(full == doctest::Approx(4.0 / 3.0).epsilon(1e-6));
}

TEST_CASE("re-collimation limits and bounds") {
  SUBCASE("a very deep mirror re-collimates a matched profile completely") {
    const ParabolicMirror deep{1.0, 1e6, 0.0};
    const auto r = recollimation_parameters(deep, BeamProfile::dipole_matched());
    CHECK(std::abs(r.omega_n_prime - r.omega_n) <= 1e-6);
    CHECK(std::abs(r.p - 1.0) <= 1e-6);
    CHECK(std::abs(r.eta_prime - 1.0) <= 1e-6);
  }

  SUBCASE("hole close to the rim") {
    CHECK(code_of([] { recollimation_parameters({1.0, 4.0, 3.9}, BeamProfile::flat_top()); }) ==
          ErrorCode::Degenerate);
  }

  SUBCASE("bounds over a family of mirrors") {
    for (double R : {2.5, 4.0, 10.0, 40.0}) {
      for (double h : {0.0, 0.1, 0.5, 1.2}) {
        for (const auto& profile : {BeamProfile::flat_top(), BeamProfile::doughnut(1.7)}) {
          const ParabolicMirror m{1.0, R, h};
          RecollimationParameters r{};
          try {
            r = recollimation_parameters(m, profile);
          } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::Degenerate);
            continue;
          }
          CAPTURE(R);
          CAPTURE(h);
          CHECK(r.omega_n_prime <= r.omega_n + 1e-15);
          CHECK(r.p <= 1.0);
          CHECK(r.p > 0.0);
          CHECK(r.eta <= 1.0);
          CHECK(r.eta_prime <= 1.0);
        }
      }
    }
  }
}

TEST_CASE("optimized waist is a local maximum") {
  const ParabolicMirror mirror{1.0, 20.0, 0.4};
  const auto best = optimize_waist(mirror);
  CHECK(best.eta >= 0.95);
  CHECK(best.eta < 1.0);
  CHECK(overlap_eta(BeamProfile::doughnut(best.waist * (1 + 1e-3)), mirror) <= best.eta);
  CHECK(overlap_eta(BeamProfile::doughnut(best.waist * (1 - 1e-3)), mirror) <= best.eta);
}
