#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "e11/quantum.hpp"
#include "e11/specfun.hpp"

using namespace e11;
using namespace e11::quantum;

namespace {
const SystemParams kSet1{RationalK(1, 1), -1.0, 7.0, 1.0};
const SystemParams kSet32{RationalK(3, 2), -1.0, 9.0, 2.0};
} // namespace

TEST_CASE("closed-form spectrum for k=1, alpha=-1, beta=7, omega=1") {
  const auto spec = spectrum(kSet1, 3);
  CHECK(spec.N == 1);
  CHECK(spec.B == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(spec.ratio == doctest::Approx(3.5).epsilon(1e-14));
  CHECK(spec.sqrt_minus_A(kSet1, 0) == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(spec.sqrt_minus_A(kSet1, 1) == doctest::Approx(0.5).epsilon(1e-14));
  for (const auto& lv : spec.levels) {
    CHECK(lv.E_mn == doctest::Approx(4.0 * lv.m - 4.0 * lv.n + 7.0).epsilon(1e-13));
    CHECK(lv.A_n == doctest::Approx(-lv.lambda * lv.lambda).epsilon(1e-13));
  }
  CHECK(spec.levels[0].A_n == doctest::Approx(-6.25).epsilon(1e-14));
  // bitwise-equal degenerate energies
  CHECK(spec.energy(kSet1, 0, 0) == spec.energy(kSet1, 1, 1));
  CHECK(spec.energy(kSet1, 0, 0) == 7.0);
}

TEST_CASE("no bound states below the coupling threshold") {
  CHECK_THROWS_AS(spectrum({RationalK(1, 1), -1.0, 1.999, 1.0}, 2), NoBoundStates);
  CHECK_THROWS_AS(spectrum({RationalK(1, 1), -1.0, 2.0, 1.0}, 2), NoBoundStates);
  CHECK_THROWS_AS(spectrum({RationalK(1, 1), 1.0, 7.0, 1.0}, 2), DomainError);
  CHECK_NOTHROW(spectrum({RationalK(1, 1), -1.0, 2.001, 1.0}, 2));
}

TEST_CASE("k=3/2 boundary level is dropped, ground energy survives") {
  // ratio = 3 exactly: the n=1 level would have sqrt(-A) = 0, so N = 0, B = 2
  const auto spec = spectrum(kSet32, 2);
  CHECK(spec.N == 0);
  CHECK(spec.B == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(spec.energy(kSet32, 0, 0) == doctest::Approx(16.0).epsilon(1e-14));
}

TEST_CASE("both closed forms of the energy agree") {
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (auto [p, q] : {std::pair{1, 1}, {2, 1}, {1, 2}, {3, 2}, {5, 3}}) {
    for (int trial = 0; trial < 10; ++trial) {
      SystemParams params{RationalK(p, q), -(0.5 + 3.0 * unit(rng)), 0.0,
                          0.3 + 2.0 * unit(rng)};
      params.beta =
          2.0 * params.kval() * std::sqrt(-params.alpha) * (1.5 + 6.0 * unit(rng));
      const auto spec = spectrum(params, 3);
      for (const auto& lv : spec.levels) {
        const double e2 = energy_explicit(params, lv.m, lv.n);
        CHECK(std::abs(lv.E_mn - e2) <= 1e-12 * std::max(1.0, std::abs(e2)));
      }
      // one past N would not bind
      CHECK(spec.sqrt_minus_A(params, spec.N) > 0.0);
      CHECK(spec.sqrt_minus_A(params, spec.N + 1) <= 0.0);
    }
  }
}

TEST_CASE("radial wavefunction anchors") {
  const auto spec = spectrum(kSet1, 3);
  // lambda_0 = 2.5; L_1^{2.5}(xi) vanishes at xi = 3.5
  CHECK(std::abs(wavefunction_R(kSet1, 1, 2.5, 3.5)) < 1e-14);
  CHECK(wavefunction_R(kSet1, 0, 2.5, 1.0) ==
        doctest::Approx(std::exp(-0.5)).epsilon(1e-13));
  // against the series form at a generic point
  const double xi = 1.7;
  CHECK(wavefunction_R(kSet1, 2, 2.5, xi) ==
        doctest::Approx(std::exp(-xi / 2.0) * std::pow(xi, 1.25) *
                        specfun::laguerre(2, 2.5, xi))
            .epsilon(1e-13));
  CHECK_THROWS_AS(wavefunction_R(kSet1, 0, 2.5, -1.0), DomainError);
  (void)spec;
}

TEST_CASE("angular wavefunction anchors") {
  const auto spec = spectrum(kSet1, 1);
  // n=0: a = B + 2N = 2.5, eta = 1 -> e^{-1/2} * 1 * L_0 = e^{-1/2}
  CHECK(wavefunction_S(kSet1, spec, 0, 1.0) ==
        doctest::Approx(std::exp(-0.5)).epsilon(1e-13));
  // n=1: a = B = 0.5, L_1^{0.5}(1.5) = 0
  CHECK(std::abs(wavefunction_S(kSet1, spec, 1, 1.5)) < 1e-14);
  CHECK_THROWS_AS(wavefunction_S(kSet1, spec, 2, 1.0), std::out_of_range);
}

TEST_CASE("separated radial equation residual") {
  const auto spec = spectrum(kSet1, 3);
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 1; ++n) {
      for (double rho : {0.37, 0.9, 1.8, 3.1, 6.4}) {
        CHECK(std::abs(radial_residual(kSet1, spec, m, n, rho)) < 1e-10);
      }
    }
  }
}

TEST_CASE("full Schroedinger residual on interior points") {
  const SystemParams sets[3] = {kSet1,
                                {RationalK(3, 2), -1.0, 9.5, 2.0},
                                {RationalK(2, 1), -4.0, 36.0, 1.5}};
  for (const auto& params : sets) {
    const auto spec = spectrum(params, 3);
    const double k = params.kval();
    const double sqa = std::sqrt(-params.alpha);
    for (const auto& lv : spec.levels) {
      for (int i = 0; i < 20; ++i) {
        const double f = (i + 0.6180339887) / 20.0;
        const double rho = (0.4 + 7.6 * f) / params.omega;
        const double sigma = std::pow(k * (0.4 + 7.6 * f) / sqa, 1.0 / k);
        CHECK(std::abs(schrodinger_residual(params, spec, lv.m, lv.n, rho, sigma)) < 1e-9);
      }
    }
  }
}

TEST_CASE("angular modes are orthogonal in deta/eta") {
  for (const auto& params : {kSet1, SystemParams{RationalK(2, 1), -4.0, 36.0, 1.5}}) {
    const auto spec = spectrum(params, 0);
    const auto g = gram_matrix_S(params, spec);
    REQUIRE(g.size() == static_cast<std::size_t>(spec.N + 1));
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK(g[i][i] > 0.0);
      for (std::size_t j = 0; j < i; ++j) {
        CHECK(std::abs(g[i][j]) < 1e-8 * std::sqrt(g[i][i] * g[j][j]));
      }
    }
  }
}

TEST_CASE("generalized-Bessel form of the angular modes") {
  // alpha consistency of the parameterization: alpha = -beta^2/(4k^2 (a-2)^2)
  const double a = bessel_parameter_a(kSet1);
  CHECK(a == doctest::Approx(-1.5).epsilon(1e-14));
  CHECK(-kSet1.beta * kSet1.beta / (4.0 * (a - 2.0) * (a - 2.0)) ==
        doctest::Approx(kSet1.alpha).epsilon(1e-13));

  const auto spec = spectrum(kSet1, 1);
  for (int n = 0; n <= spec.N; ++n) {
    for (double s : {0.2, 0.5, 1.0, 2.3, 5.0}) {
      CHECK(bessel_representation_check(kSet1, spec, n, s) < 1e-9);
    }
  }
}

TEST_CASE("base Laguerre ladder relations") {
  using specfun::laguerre;
  using specfun::laguerre_deriv;
  for (double a : {0.5, 1.0, 2.0, 3.5}) {
    for (int n = 0; n <= 4; ++n) {
      for (double x : {0.5, 1.0, 2.0}) {
        const double l = laguerre(n, a, x), ld = laguerre_deriv(n, a, x);
        CHECK(std::abs(ld + laguerre(n - 1, a + 1.0, x)) < 1e-10);
        CHECK(std::abs(ld - l + laguerre(n, a + 1.0, x)) < 1e-10);
        CHECK(std::abs(x * ld + (a - x) * l - (n + 1.0) * laguerre(n + 1, a - 1.0, x)) <
              1e-10);
        CHECK(std::abs(x * ld + a * l - (n + a) * laguerre(n, a - 1.0, x)) < 1e-10);
      }
    }
  }
}

TEST_CASE("first-order mode ladder identities") {
  for (double a : {0.5, 1.0, 2.0, 3.5}) {
    for (int n = 0; n <= 4; ++n) {
      const ExpPoly f = laguerre_mode(n, a);
      const double c = (2.0 * n + a + 1.0) / 2.0;
      const ExpPoly down = ladder_step(true, a, c, f);
      const ExpPoly up = ladder_step(false, a, c, f);
      const ExpPoly down_ref = laguerre_mode(n - 1, a + 2.0).scaled(-1.0);
      const ExpPoly up_ref = laguerre_mode(n + 1, a - 2.0).scaled(-(n + 1.0) * (n + a));
      for (double x : {0.5, 1.0, 2.0}) {
        CHECK(std::abs(down.eval(x) - (n >= 1 ? down_ref.eval(x) : 0.0)) < 1e-10);
        CHECK(std::abs(up.eval(x) - up_ref.eval(x)) < 1e-10);
      }
    }
  }
}

TEST_CASE("mode evaluation matches the wavefunctions") {
  const auto spec = spectrum(kSet1, 2);
  for (int m = 0; m <= 2; ++m) {
    const double lam = spec.sqrt_minus_A(kSet1, 0);
    const ExpPoly f = laguerre_mode(m, lam);
    for (double xi : {0.4, 1.3, 3.7}) {
      CHECK(f.eval(xi) == doctest::Approx(wavefunction_R(kSet1, m, lam, xi)).epsilon(1e-12));
    }
  }
}

TEST_CASE("energy re-read after a single K step is unchanged") {
  const auto spec = spectrum(kSet1, 3);
  for (const auto& lv : spec.levels) {
    // K with -lambda: m -> m+1, lambda -> lambda - 2
    const double e_before = 2.0 * kSet1.omega * (2.0 * lv.m + 1.0 + lv.lambda);
    const double e_after = 2.0 * kSet1.omega * (2.0 * (lv.m + 1) + 1.0 + (lv.lambda - 2.0));
    CHECK(e_before == e_after);
    CHECK(e_before == doctest::Approx(lv.E_mn).epsilon(1e-13));
  }
}

TEST_CASE("degeneracy maps for (p,q) = (1,1) and (3,2)") {
  {
    const auto spec = spectrum(kSet1, 3);
    const auto rep = degeneracy_map_check(kSet1, spec, 0, 0);
    CHECK(rep.m_partner == 1);
    CHECK(rep.n_partner == 1);
    CHECK(rep.energy_equal);
    CHECK(rep.ratio_variation_R < 1e-8);
    CHECK(rep.ratio_variation_S < 1e-8);
    CHECK(rep.ratio_R != 0.0);
  }
  {
    const SystemParams p32{RationalK(3, 2), -1.0, 16.0, 2.0};
    const auto spec = spectrum(p32, 6);
    REQUIRE(spec.N >= 2);
    const auto rep = degeneracy_map_check(p32, spec, 0, 0);
    CHECK(rep.energy_equal);
    CHECK(rep.ratio_variation_R < 1e-8);
    CHECK(rep.ratio_variation_S < 1e-8);
  }
  {
    const auto spec = spectrum(kSet1, 3);
    CHECK_THROWS_AS(degeneracy_map_check(kSet1, spec, 0, 1), std::out_of_range);
  }
}
