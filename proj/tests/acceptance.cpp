// Acceptance gate: ten pass/fail criteria covering the classical and quantum
// halves of the deformed-oscillator laboratory at their stated tolerances.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>

#include "e11/batch.hpp"
#include "e11/classical.hpp"
#include "e11/invariants.hpp"
#include "e11/quantum.hpp"
#include "e11/specfun.hpp"
#include "e11/verify.hpp"

using Clock = std::chrono::steady_clock;
using namespace e11;

namespace {

int g_failures = 0;

void report(int index, const char* name, bool pass, const std::string& detail) {
  std::printf("%s  criterion %2d: %-34s %s\n", pass ? "PASS" : "FAIL", index, name,
              detail.c_str());
  if (!pass) ++g_failures;
}

double elapsed_s(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_err(double err) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "max_error=%.3g", err);
  return buf;
}

// 1. turning points and angular band of the k=1 figure orbit, < 1 ms
void criterion_1() {
  const auto t0 = Clock::now();
  const SystemParams params{RationalK(1, 1), -2.0, 6.0, 3.0};
  const auto [r1, r2] = classical::rho_bounds(20.0, -1.0, 3.0);
  const auto [s1, s2] = classical::sigma_bounds(params, -1.0);
  const double dt = elapsed_s(t0);
  const double err = std::max({std::abs(r1 - 0.051178), std::abs(r2 - 2.171045),
                               std::abs(s1 - 0.354249), std::abs(s2 - 5.645751)});
  char detail[96];
  std::snprintf(detail, sizeof detail, "max_error=%.3g time=%.3gms", err, 1e3 * dt);
  report(1, "closed-form turning points", err < 1e-5 && dt < 1e-3, detail);
}

// 2. H, A, L drift < 1e-6 over two radial periods on all six figure sets, < 5 s
void criterion_2() {
  const auto t0 = Clock::now();
  const auto r = verify::run_conservation();
  const double dt = elapsed_s(t0);
  char detail[96];
  std::snprintf(detail, sizeof detail, "max_error=%.3g cases=%d time=%.2gs", r.max_error,
                r.cases, dt);
  report(2, "conservation over two periods", r.pass && dt < 5.0, detail);
}

// 3. implicit closure law along the same runs, both Chebyshev forms
void criterion_3() {
  const auto r = verify::run_curve();
  report(3, "implicit-curve law", r.pass, fmt_err(r.max_error));
}

// 4. find_period recovers closure on every figure case
void criterion_4() {
  const auto r = verify::run_period();
  report(4, "periodicity of the six figure orbits", r.pass, fmt_err(r.max_error));
}

// 5. |{L, H}| below 1e-5 of the gradient scale at 100 seeded points, < 10 s
void criterion_5() {
  const auto t0 = Clock::now();
  const auto r = verify::run_poisson(42);
  const double dt = elapsed_s(t0);
  char detail[96];
  std::snprintf(detail, sizeof detail, "max_error=%.3g cases=%d time=%.2gs", r.max_error,
                r.cases, dt);
  report(5, "Poisson bracket {L, H} = 0", r.pass && dt < 10.0, detail);
}

// 6. exact closed-form spectrum plus exact degeneracy on 50 random sets
void criterion_6() {
  bool pass = true;
  double err = 0.0;
  const SystemParams params{RationalK(1, 1), -1.0, 7.0, 1.0};
  const auto spec = quantum::spectrum(params, 3);
  pass = pass && spec.N == 1;
  err = std::max(err, std::abs(spec.levels[0].A_n + 6.25));
  err = std::max(err, std::abs(spec.sqrt_minus_A(params, 1) - 0.5)); // A_1 = -0.25
  err = std::max(err, std::abs(spec.energy(params, 0, 0) - 7.0));
  pass = pass && spec.energy(params, 0, 0) == spec.energy(params, 1, 1);
  pass = pass && err < 1e-12;

  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::pair<int, int> pqs[5] = {{1, 1}, {2, 1}, {1, 2}, {3, 2}, {2, 3}};
  for (int i = 0; i < 50; ++i) {
    const auto [p, q] = pqs[i % 5];
    SystemParams sp{RationalK(p, q), -(0.5 + 3.5 * unit(rng)), 0.0, 0.5 + 3.0 * unit(rng)};
    sp.beta = 2.0 * sp.kval() * std::sqrt(-sp.alpha) * (2.0 * q + 2.0 + 4.0 * unit(rng));
    const auto s = quantum::spectrum(sp, 1);
    pass = pass && s.energy(sp, 1, 0) == s.energy(sp, 1 + p, q);
  }
  report(6, "quantum spectrum exactness", pass, fmt_err(err));
}

// 7. Schroedinger residual < 1e-9 on 20x20 interior grids, 3 parameter sets, < 5 s
void criterion_7() {
  const auto t0 = Clock::now();
  const SystemParams sets[3] = {{RationalK(1, 1), -1.0, 7.0, 1.0},
                                {RationalK(3, 2), -1.0, 9.5, 2.0},
                                {RationalK(2, 1), -4.0, 36.0, 1.5}};
  double worst = 0.0;
  for (const auto& params : sets) {
    const auto spec = quantum::spectrum(params, 3);
    std::vector<double> rho_grid, sigma_grid;
    const double k = params.kval(), sqa = std::sqrt(-params.alpha);
    for (int i = 0; i < 20; ++i) {
      const double f = (i + 0.6180339887) / 20.0;
      rho_grid.push_back((0.4 + 7.6 * f) / params.omega);
      sigma_grid.push_back(std::pow(k * (0.4 + 7.6 * f) / sqa, 1.0 / k));
    }
    for (const auto& lv : spec.levels) {
      worst = std::max(worst, batch::max_schrodinger_residual(params, spec, lv.m, lv.n,
                                                              rho_grid, sigma_grid));
    }
  }
  const double dt = elapsed_s(t0);
  char detail[96];
  std::snprintf(detail, sizeof detail, "max_error=%.3g time=%.2gs", worst, dt);
  report(7, "Schroedinger residual on grids", worst < 1e-9 && dt < 5.0, detail);
}

// 8. orthogonality of the angular modes and the Bessel-polynomial form
void criterion_8() {
  bool pass = true;
  double err = 0.0;
  const SystemParams sets[2] = {{RationalK(1, 1), -1.0, 7.0, 1.0},
                                {RationalK(2, 1), -4.0, 36.0, 1.5}};
  for (const auto& params : sets) {
    const auto spec = quantum::spectrum(params, 0);
    const auto g = quantum::gram_matrix_S(params, spec);
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) {
        const double rel = std::abs(g[i][j]) / std::sqrt(g[i][i] * g[j][j]);
        err = std::max(err, rel);
        pass = pass && rel < 1e-8;
      }
    for (int n = 0; n <= spec.N; ++n)
      for (double s : {0.2, 1.0, 5.0}) {
        const double rel = quantum::bessel_representation_check(params, spec, n, s);
        pass = pass && rel < 1e-9;
      }
  }
  report(8, "orthogonality and Bessel form", pass, fmt_err(err));
}

// 9. pointwise ladder identities and the p-fold/q-fold degeneracy maps
void criterion_9() {
  bool pass = true;
  double err = 0.0;
  using specfun::laguerre;
  using specfun::laguerre_deriv;
  for (double a : {0.5, 1.0, 2.0, 3.5}) {
    for (int n = 0; n <= 4; ++n) {
      const quantum::ExpPoly f = quantum::laguerre_mode(n, a);
      const double c = (2.0 * n + a + 1.0) / 2.0;
      const auto down = quantum::ladder_step(true, a, c, f);
      const auto up = quantum::ladder_step(false, a, c, f);
      const auto down_ref = quantum::laguerre_mode(n - 1, a + 2.0).scaled(-1.0);
      const auto up_ref = quantum::laguerre_mode(n + 1, a - 2.0).scaled(-(n + 1.0) * (n + a));
      for (double x : {0.5, 1.0, 2.0}) {
        const double l = laguerre(n, a, x), ld = laguerre_deriv(n, a, x);
        err = std::max(err, std::abs(ld + laguerre(n - 1, a + 1.0, x)));
        err = std::max(err, std::abs(ld - l + laguerre(n, a + 1.0, x)));
        err = std::max(err,
                       std::abs(x * ld + (a - x) * l - (n + 1.0) * laguerre(n + 1, a - 1.0, x)));
        err = std::max(err, std::abs(x * ld + a * l - (n + a) * laguerre(n, a - 1.0, x)));
        err = std::max(err, std::abs(down.eval(x) - (n >= 1 ? down_ref.eval(x) : 0.0)));
        err = std::max(err, std::abs(up.eval(x) - up_ref.eval(x)));
      }
    }
  }
  pass = pass && err < 1e-10;

  const SystemParams p11{RationalK(1, 1), -1.0, 7.0, 1.0};
  const auto rep11 = quantum::degeneracy_map_check(p11, quantum::spectrum(p11, 3), 0, 0);
  const SystemParams p32{RationalK(3, 2), -1.0, 16.0, 2.0};
  const auto rep32 = quantum::degeneracy_map_check(p32, quantum::spectrum(p32, 6), 0, 0);
  for (const auto& rep : {rep11, rep32}) {
    pass = pass && rep.energy_equal && rep.ratio_variation_R < 1e-8 &&
           rep.ratio_variation_S < 1e-8;
  }
  report(9, "ladder identities and compositions", pass, fmt_err(err));
}

// 10. closed-form oscillator identities at random samples
void criterion_10() {
  const auto r = verify::run_oscillator(42);
  report(10, "oscillator closed forms", r.pass, fmt_err(r.max_error));
}

} // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (g_failures > 0) {
    std::printf("%d of 10 criteria failed\n", g_failures);
    return 1;
  }
  std::printf("all 10 criteria passed\n");
  return 0;
}
