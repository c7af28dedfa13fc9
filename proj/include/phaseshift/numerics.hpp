#pragma once

#include <functional>

namespace phaseshift::numerics {

struct QuadratureOptions {
  double abs_tol = 1e-9;
  double rel_tol = 1e-12;
  unsigned max_depth = 20;
};

/// Adaptive Gauss-Kronrod (15 point) integral of f over [a, b]. Subdivision
/// is serial and depth-first, so results are reproducible for fixed options.
/// Throws ErrorCode::Quadrature if the tolerance is not met.
double integrate(const std::function<double(double)>& f, double a, double b, const QuadratureOptions& opts = {});

/// Integral over [a, b] with 0 < a < b carried out in log(x); suited to
/// pupil integrals that span several decades.
double integrate_log(const std::function<double(double)>& f, double a, double b, const QuadratureOptions& opts = {});

struct Maximum {
  double x;
  double value;
  int evaluations;
};

/// Golden-section maximization of a unimodal f on [lo, hi]; stops when the
/// bracket is below rel_tol * |x| (or rel_tol if x is zero).
Maximum golden_section_maximize(const std::function<double(double)>& f, double lo, double hi, double rel_tol = 1e-6,
                                int max_iterations = 200);

}  // namespace phaseshift::numerics
