#ifndef E11_QUADRATURE_HPP
#define E11_QUADRATURE_HPP

#include <functional>

namespace e11::quadrature {

struct Result {
  double value = 0.0;
  double error = 0.0;
  bool converged = true;
};

// Adaptive Gauss-Kronrod 7-15 on a finite interval.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-12, double rel_tol = 1e-10, int max_depth = 30);

// Integral over (0, inf) via the map x = t/(1-t).
Result integrate_semi_infinite(const std::function<double(double)>& f,
                               double abs_tol = 1e-12, double rel_tol = 1e-10);

} // namespace e11::quadrature

#endif
