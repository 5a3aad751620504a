#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "e11/specfun.hpp"

using namespace e11::specfun;

TEST_CASE("laguerre anchor values") {
  CHECK(laguerre(0, 0.0, 5.0) == 1.0);
  CHECK(laguerre(1, 2.0, 1.0) == doctest::Approx(2.0).epsilon(1e-14)); // 1 + a - x
  CHECK(laguerre(2, 0.0, 2.0) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(laguerre(2, 1.0, 0.0) == doctest::Approx(3.0).epsilon(1e-14)); // C(n+a, n)
  CHECK(laguerre(-1, 1.5, 0.3) == 0.0);
}

TEST_CASE("chebyshev anchor values") {
  CHECK(chebyshev_t(2, 0.5) == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(chebyshev_t(3, 0.5) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(chebyshev_u(1, 0.3) == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(chebyshev_u(-1, 0.7) == 0.0);
  CHECK(chebyshev_u(0, -2.0) == 1.0);
  CHECK_THROWS_AS(chebyshev_t(-1, 0.0), std::invalid_argument);
}

TEST_CASE("bessel polynomial anchor values") {
  CHECK(bessel_poly(0, 2.0, 1.0, 3.0) == 1.0);
  CHECK(bessel_poly(1, 3.0, 1.0, 2.0) == doctest::Approx(7.0).epsilon(1e-14));
  CHECK(bessel_poly(2, 1.0, 1.0, 1.0) == doctest::Approx(11.0).epsilon(1e-14));
  CHECK_THROWS_AS(bessel_poly(1, 1.0, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("laguerre ODE x y'' + (a+1-x) y' + n y = 0") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> xd(0.05, 12.0);
  for (double a : {0.0, 0.5, 1.0, 2.5, 4.0}) {
    for (int n = 0; n <= 12; ++n) {
      for (int rep = 0; rep < 25; ++rep) {
        const double x = xd(rng);
        const double t1 = x * laguerre_deriv2(n, a, x);
        const double t2 = (a + 1.0 - x) * laguerre_deriv(n, a, x);
        const double t3 = n * laguerre(n, a, x);
        const double scale = std::max({1.0, std::abs(t1), std::abs(t2), std::abs(t3)});
        CHECK(std::abs(t1 + t2 + t3) / scale < 1e-10);
      }
    }
  }
}

TEST_CASE("chebyshev trig identities") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> td(0.0, 3.14159265358979);
  for (int n = 0; n <= 12; ++n) {
    for (int rep = 0; rep < 25; ++rep) {
      const double th = td(rng);
      CHECK(chebyshev_t(n, std::cos(th)) == doctest::Approx(std::cos(n * th)).epsilon(1e-12));
      CHECK(std::abs(chebyshev_u(n - 1, std::cos(th)) * std::sin(th) - std::sin(n * th)) <
            1e-12);
    }
  }
}

TEST_CASE("generalized bessel ODE x^2 y'' + (a x + b) y' = n (n + a - 1) y") {
  for (double a : {1.0, 2.5, -1.5}) {
    for (double b : {1.0, 2.0}) {
      for (int n = 0; n <= 8; ++n) {
        for (double x : {0.25, 1.0, 4.0}) {
          const double t1 = x * x * bessel_poly_deriv(n, a, b, x, 2);
          const double t2 = (a * x + b) * bessel_poly_deriv(n, a, b, x, 1);
          const double t3 = n * (n + a - 1.0) * bessel_poly(n, a, b, x);
          const double scale = std::max({1.0, std::abs(t1), std::abs(t2), std::abs(t3)});
          CHECK(std::abs(t1 + t2 - t3) / scale < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("laguerre derivatives against central differences") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> xd(0.5, 8.0);
  std::uniform_real_distribution<double> ad(0.0, 3.0);
  for (int n = 1; n <= 8; ++n) {
    for (int rep = 0; rep < 10; ++rep) {
      const double a = ad(rng), x = xd(rng), h = 1e-5;
      const double fd = (laguerre(n, a, x + h) - laguerre(n, a, x - h)) / (2.0 * h);
      CHECK(std::abs(fd - laguerre_deriv(n, a, x)) /
                std::max(1.0, std::abs(laguerre_deriv(n, a, x))) <
            1e-6);
    }
  }
}

TEST_CASE("combinatorial helpers") {
  CHECK(binomial(5, 2) == 10.0);
  CHECK(binomial(5, 6) == 0.0);
  CHECK(binomial(5, -1) == 0.0);
  CHECK(falling_factorial(4.0, 3) == 24.0);
  CHECK(falling_factorial(2.5, 0) == 1.0);
}
