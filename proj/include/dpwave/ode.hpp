#pragma once

#include <functional>
#include <vector>

namespace dpwave {

// Right-hand side of y' = f(x, y); writes the derivative into dy.
using OdeRhs = std::function<void(double x, const double* y, double* dy)>;

// Adaptive one-step integrator: Gragg midpoint scheme extrapolated over
// the step sequence {2,4,6,8}, giving an 8th-order result with a
// built-in error estimate.  Advances y in place from x0 to x1.
// `tol` bounds the local error per step (mixed abs/rel).
void ode_integrate(const OdeRhs& f, int dim, double x0, double x1, std::vector<double>& y,
                   double tol = 1e-12);

// Integrates until `event(x, y)` changes sign (from its value at x0) or
// x reaches x_max.  Returns the crossing abscissa located to `x_tol`;
// y is left at the crossing.  Throws NoRoot if no crossing occurs.
double ode_integrate_until(const OdeRhs& f, int dim,
                           const std::function<double(double, const double*)>& event, double x0,
                           double x_max, std::vector<double>& y, double tol = 1e-12,
                           double x_tol = 1e-13);

}  // namespace dpwave
