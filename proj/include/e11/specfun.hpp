#ifndef E11_SPECFUN_HPP
#define E11_SPECFUN_HPP

#include <stdexcept>

namespace e11::specfun {

// Associated Laguerre polynomial L_n^a(x), real parameter a, by the
// three-term recurrence in n. L_{-1}^a == 0 by convention.
double laguerre(int n, double a, double x);

// d/dx L_n^a(x) = -L_{n-1}^{a+1}(x); zero for n = 0.
double laguerre_deriv(int n, double a, double x);

// d^2/dx^2 L_n^a(x) = L_{n-2}^{a+2}(x); zero for n < 2.
double laguerre_deriv2(int n, double a, double x);

// Chebyshev polynomials of the first and second kind, valid for all real x.
// chebyshev_u accepts n = -1 with U_{-1} == 0.
double chebyshev_t(int n, double x);
double chebyshev_u(int n, double x);

// Generalized Bessel polynomial y_n(x, a, b) =
//   sum_{k=0..n} C(n,k) (n+k+a-2)^(k) (x/b)^k,
// falling factorial z^(k) = z(z-1)...(z-k+1). Requires b != 0.
double bessel_poly(int n, double a, double b, double x);

// order-th derivative of bessel_poly in x, termwise (exact).
double bessel_poly_deriv(int n, double a, double b, double x, int order);

double falling_factorial(double z, int k);
double binomial(int n, int k);

} // namespace e11::specfun

#endif
