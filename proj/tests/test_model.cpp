#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "e11/model.hpp"

using namespace e11;

TEST_CASE("rational exponent parsing") {
  CHECK(RationalK::parse("3/2").p == 3);
  CHECK(RationalK::parse("3/2").q == 2);
  CHECK(RationalK::parse("2").p == 2);
  CHECK(RationalK::parse("2").q == 1);
  CHECK(RationalK::parse("6/4").p == 3); // reduced to lowest terms
  CHECK(RationalK::parse("6/4").q == 2);
  CHECK_THROWS(RationalK::parse("1.5"));
  CHECK_THROWS(RationalK::parse("0"));
  CHECK_THROWS(RationalK::parse("-1/2"));
  CHECK_THROWS(RationalK::parse("x"));
  CHECK_THROWS(RationalK::parse("1/0"));
}

TEST_CASE("chart map anchor points") {
  auto mp = to_modified_polar(PhasePoint::cartesian(1.0, 0.0, 0.0, 0.0));
  CHECK(mp.q1 == doctest::Approx(1.0));
  CHECK(mp.q2 == doctest::Approx(1.0));
  CHECK(mp.p1 == doctest::Approx(0.0));
  CHECK(mp.p2 == doctest::Approx(0.0));

  mp = to_modified_polar(PhasePoint::cartesian(1.0, 0.0, 2.0, 0.0));
  CHECK(mp.q1 == doctest::Approx(1.0));
  CHECK(mp.q2 == doctest::Approx(1.0));
  CHECK(mp.p1 == doctest::Approx(1.0)); // p_u = 2 u p_rho at v = 0
  CHECK(mp.p2 == doctest::Approx(0.0));

  mp = to_modified_polar(PhasePoint::cartesian(2.5, 1.5, 0.0, 0.0));
  CHECK(mp.q1 == doctest::Approx(4.0));
  CHECK(mp.q2 == doctest::Approx(4.0));

  CHECK_THROWS_AS(to_modified_polar(PhasePoint::cartesian(1.0, 1.0, 0.0, 0.0)), DomainError);
  CHECK_THROWS_AS(to_cartesian(PhasePoint::modified_polar(-1.0, 1.0, 0.0, 0.0)), DomainError);
}

TEST_CASE("chart round trip and Hamiltonian invariance") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> ud(0.5, 3.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> pd(-2.0, 2.0);
  const SystemParams sets[3] = {{RationalK(1, 1), -2.0, 6.0, 3.0},
                                {RationalK(3, 2), -1.0, 3.0, 4.0},
                                {RationalK(2, 1), -0.5, 2.0, 1.0}};
  for (int i = 0; i < 1000; ++i) {
    const double u = ud(rng);
    const double v = (2.0 * unit(rng) - 1.0) * (u - 0.05);
    const auto cart = PhasePoint::cartesian(u, v, pd(rng), pd(rng));
    const auto polar = to_modified_polar(cart);
    const auto back = to_cartesian(polar);
    CHECK(std::abs(back.q1 - cart.q1) < 1e-12);
    CHECK(std::abs(back.q2 - cart.q2) < 1e-12);
    CHECK(std::abs(back.p1 - cart.p1) < 1e-12);
    CHECK(std::abs(back.p2 - cart.p2) < 1e-12);

    const auto& params = sets[i % 3];
    const double h1 = hamiltonian(params, cart);
    const double h2 = hamiltonian(params, polar);
    CHECK(std::abs(h1 - h2) <= 1e-10 * std::max(1.0, std::abs(h1)));
  }
}

TEST_CASE("worked Hamiltonian value") {
  const SystemParams params{RationalK(1, 1), -2.0, 6.0, 3.0};
  const auto pt = PhasePoint::modified_polar(1.0, 1.0, 0.0, 0.0);
  CHECK(hamiltonian(params, pt) == doctest::Approx(13.0).epsilon(1e-14));
  // same point seen from the cartesian chart
  CHECK(hamiltonian(params, to_cartesian(pt)) == doctest::Approx(13.0).epsilon(1e-12));
}

TEST_CASE("coupling constant metamorphosis") {
  const SystemParams params{RationalK(1, 1), -2.0, 6.0, 3.0};
  const auto ccm = ccm_map(params, 20.0);
  CHECK(ccm.K == doctest::Approx(-10.0));
  CHECK(ccm.alpha == doctest::Approx(-0.5));
  CHECK(ccm.beta == doctest::Approx(1.5));
}

TEST_CASE("separable family parameter embedding") {
  SeparableSpec spec;
  spec.f1 = [](double q) { return q * q; };
  spec.f2 = [](double q) { return q * q; };
  spec.psi = PsiKind::InverseSquare;
  const auto emb = embed_parameter(spec, 2.0);
  // f2 -> k^2 f2(k q): q^2 -> 4 (2q)^2 = 16 q^2
  CHECK(emb.f2(1.0) == doctest::Approx(16.0));
  CHECK(emb.f2(0.5) == doctest::Approx(4.0));
  CHECK(emb.f1(3.0) == doctest::Approx(9.0)); // untouched
  // separability is preserved: H still splits as p1^2 + f1 + psi (p2^2 + f2)
  CHECK(emb.hamiltonian(2.0, 1.0, 0.5, 0.25) ==
        doctest::Approx(0.25 + 4.0 + 0.25 * (0.0625 + 16.0)));
}

TEST_CASE("canonical momentum transform is symplectic (finite differences)") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> qd(0.5, 3.0);
  std::uniform_real_distribution<double> pd(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto polar = PhasePoint::modified_polar(qd(rng), qd(rng), pd(rng), pd(rng));
    double jac[4][4];
    for (int col = 0; col < 4; ++col) {
      PhasePoint lo = polar, hi = polar;
      double* clo[4] = {&lo.q1, &lo.q2, &lo.p1, &lo.p2};
      double* chi[4] = {&hi.q1, &hi.q2, &hi.p1, &hi.p2};
      const double h = 6e-6 * (1.0 + std::abs(*chi[col]));
      *clo[col] -= h;
      *chi[col] += h;
      const auto a = to_cartesian(lo);
      const auto b = to_cartesian(hi);
      const double d[4] = {b.q1 - a.q1, b.q2 - a.q2, b.p1 - a.p1, b.p2 - a.p2};
      for (int row = 0; row < 4; ++row) jac[row][col] = d[row] / (2.0 * h);
    }
    double omega[4][4] = {};
    omega[0][2] = omega[1][3] = 1.0;
    omega[2][0] = omega[3][1] = -1.0;
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        double s = 0.0;
        for (int r = 0; r < 4; ++r)
          for (int c = 0; c < 4; ++c) s += jac[r][a] * omega[r][c] * jac[c][b];
        CHECK(std::abs(s - omega[a][b]) < 1e-9);
      }
    }
  }
}

TEST_CASE("principal-sheet sigma power") {
  const SystemParams params{RationalK(3, 2), -1.0, 3.0, 4.0};
  CHECK(sigma_pow_k(params, 4.0) == doctest::Approx(8.0).epsilon(1e-14));
  CHECK(sigma_pow_k(params, 1.0) == doctest::Approx(1.0));
}
