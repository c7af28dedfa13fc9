#include "phaseshift/numerics.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <sstream>

#include "phaseshift/error.hpp"

namespace phaseshift::numerics {

double integrate(const std::function<double(double)>& f, double a, double b, const QuadratureOptions& opts) {
  if (a == b) return 0.0;
  double error = 0.0;
  double l1 = 0.0;
  const double value =
      boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, opts.max_depth, opts.rel_tol, &error, &l1);
  if (!std::isfinite(value) || !(error <= std::max(opts.abs_tol, opts.rel_tol * l1))) {
    std::ostringstream msg;
    msg << "adaptive quadrature on [" << a << ", " << b << "] did not converge (error estimate " << error << ")";
    fail(ErrorCode::Quadrature, msg.str());
  }
  return value;
}

double integrate_log(const std::function<double(double)>& f, double a, double b, const QuadratureOptions& opts) {
  if (!(a > 0.0 && b >= a)) fail(ErrorCode::Domain, "log-space quadrature needs 0 < a <= b");
  return integrate(
      [&f](double u) {
        const double x = std::exp(u);
        return f(x) * x;
      },
      std::log(a), std::log(b), opts);
}

Maximum golden_section_maximize(const std::function<double(double)>& f, double lo, double hi, double rel_tol,
                                int max_iterations) {
  if (!(lo < hi)) fail(ErrorCode::Domain, "golden-section bracket must satisfy lo < hi");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;

  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int evaluations = 2;

  for (int i = 0; i < max_iterations; ++i) {
    const double mid = 0.5 * (a + b);
    const double scale = mid == 0.0 ? 1.0 : std::abs(mid);
    if (b - a <= rel_tol * scale) break;
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++evaluations;
  }

  // report the best point actually evaluated
  if (fc >= fd) return {c, fc, evaluations};
  return {d, fd, evaluations};
}

}  // namespace phaseshift::numerics
