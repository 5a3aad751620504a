#include "e11/specfun.hpp"

#include <cmath>

namespace e11::specfun {

double laguerre(int n, double a, double x) {
  if (n < 0) return 0.0;
  if (n == 0) return 1.0;
  double lm1 = 1.0;            // L_0
  double l = 1.0 + a - x;      // L_1
  for (int i = 1; i < n; ++i) {
    const double lp1 = ((2.0 * i + 1.0 + a - x) * l - (i + a) * lm1) / (i + 1.0);
    lm1 = l;
    l = lp1;
  }
  return l;
}

double laguerre_deriv(int n, double a, double x) {
  if (n <= 0) return 0.0;
  return -laguerre(n - 1, a + 1.0, x);
}

double laguerre_deriv2(int n, double a, double x) {
  if (n < 2) return 0.0;
  return laguerre(n - 2, a + 2.0, x);
}

double chebyshev_t(int n, double x) {
  if (n < 0) throw std::invalid_argument("chebyshev_t: negative degree");
  if (n == 0) return 1.0;
  double tm1 = 1.0;
  double t = x;
  for (int i = 1; i < n; ++i) {
    const double tp1 = 2.0 * x * t - tm1;
    tm1 = t;
    t = tp1;
  }
  return t;
}

double chebyshev_u(int n, double x) {
  if (n < -1) throw std::invalid_argument("chebyshev_u: degree below -1");
  if (n == -1) return 0.0;
  if (n == 0) return 1.0;
  double um1 = 1.0;
  double u = 2.0 * x;
  for (int i = 1; i < n; ++i) {
    const double up1 = 2.0 * x * u - um1;
    um1 = u;
    u = up1;
  }
  return u;
}

double falling_factorial(double z, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= z - i;
  return r;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

double bessel_poly(int n, double a, double b, double x) {
  if (n < 0) throw std::invalid_argument("bessel_poly: negative degree");
  if (b == 0.0) throw std::invalid_argument("bessel_poly: b must be nonzero");
  double sum = 0.0;
  const double xb = x / b;
  double xbk = 1.0;
  for (int k = 0; k <= n; ++k) {
    sum += binomial(n, k) * falling_factorial(n + k + a - 2.0, k) * xbk;
    xbk *= xb;
  }
  return sum;
}

double bessel_poly_deriv(int n, double a, double b, double x, int order) {
  if (b == 0.0) throw std::invalid_argument("bessel_poly_deriv: b must be nonzero");
  double sum = 0.0;
  for (int k = order; k <= n; ++k) {
    sum += binomial(n, k) * falling_factorial(n + k + a - 2.0, k) *
           falling_factorial(k, order) * std::pow(x, k - order) / std::pow(b, k);
  }
  return sum;
}

} // namespace e11::specfun
