#include "e11/verify.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "e11/batch.hpp"
#include "e11/invariants.hpp"
#include "e11/quantum.hpp"
#include "e11/specfun.hpp"

namespace e11::verify {

namespace {

constexpr double kPi = std::numbers::pi;

void record(SuiteResult& r, double err, double tol) {
  ++r.cases;
  if (err > r.max_error) r.max_error = err;
  if (!(err < tol)) r.pass = false;
}

// Central-difference Jacobian of the polar -> cartesian chart map.
std::array<std::array<double, 4>, 4> chart_jacobian(const PhasePoint& polar) {
  std::array<std::array<double, 4>, 4> j{};
  for (int col = 0; col < 4; ++col) {
    PhasePoint lo = polar, hi = polar;
    double* coords_lo[4] = {&lo.q1, &lo.q2, &lo.p1, &lo.p2};
    double* coords_hi[4] = {&hi.q1, &hi.q2, &hi.p1, &hi.p2};
    const double h = 6e-6 * (1.0 + std::abs(*coords_hi[col]));
    *coords_lo[col] -= h;
    *coords_hi[col] += h;
    const PhasePoint a = to_cartesian(lo);
    const PhasePoint b = to_cartesian(hi);
    const double da[4] = {b.q1 - a.q1, b.q2 - a.q2, b.p1 - a.p1, b.p2 - a.p2};
    for (int row = 0; row < 4; ++row) j[row][col] = da[row] / (2.0 * h);
  }
  return j;
}

// max |(J^T Omega J - Omega)_{ij}| with Omega the symplectic form of
// (q1, q2, p1, p2) ordering.
double symplectic_defect(const PhasePoint& polar) {
  const auto j = chart_jacobian(polar);
  double omega[4][4] = {};
  omega[0][2] = omega[1][3] = 1.0;
  omega[2][0] = omega[3][1] = -1.0;
  double worst = 0.0;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      double s = 0.0;
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) s += j[r][a] * omega[r][c] * j[c][b];
      worst = std::max(worst, std::abs(s - omega[a][b]));
    }
  }
  return worst;
}

struct FigureRun {
  FigureCase fc;
  classical::CurveConstants consts;
  classical::Trajectory traj;
};

// Each figure orbit integrated over two radial periods from its
// delta-phase initial state.
std::vector<FigureRun> figure_runs() {
  std::vector<FigureRun> runs;
  for (const auto& fc : figure_cases()) {
    FigureRun run;
    run.fc = fc;
    run.consts = classical::curve_constants(fc.params, fc.E, fc.A, 0.0, fc.delta2);
    const PhasePoint p0 = classical::initial_state(fc.params, run.consts);
    const double t_end = kPi / fc.params.omega;
    run.traj = classical::integrate(fc.params, p0, t_end, 1e-10, t_end / 400.0);
    runs.push_back(std::move(run));
  }
  return runs;
}

} // namespace

const std::vector<FigureCase>& figure_cases() {
  static const std::vector<FigureCase> cases = [] {
    std::vector<FigureCase> c;
    const double d32 = kPi / 32.0;
    c.push_back({"fig1-k1", {RationalK(1, 1), -2.0, 6.0, 3.0}, 20.0, -1.0, d32});
    c.push_back({"fig1-k2", {RationalK(2, 1), -2.0, 6.0, 3.0}, 20.0, -1.0, d32});
    c.push_back({"fig1-k3", {RationalK(3, 1), -2.0, 6.0, 3.0}, 20.0, -1.0, d32});
    c.push_back({"fig2-k13", {RationalK(1, 3), -1.0, 3.0, 4.0}, 20.0, -1.5, kPi / 4.0});
    c.push_back({"fig2-k12", {RationalK(1, 2), -1.0, 3.0, 4.0}, 20.0, -1.5, kPi / 6.0});
    c.push_back({"fig2-k32", {RationalK(3, 2), -1.0, 3.0, 4.0}, 20.0, -1.5, kPi / 12.0});
    return c;
  }();
  return cases;
}

PhasePoint random_bounded_point(const SystemParams& params, std::mt19937_64& rng,
                                double& E_out, double e_lo, double e_hi) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double E = e_lo + (e_hi - e_lo) * unit(rng);
  const double w2 = params.omega * params.omega;
  const double a_cap =
      std::min(E * E / (4.0 * w2), params.beta * params.beta / (4.0 * std::abs(params.alpha)));
  // stay off the regime boundary so both momenta radicands have room
  const double A = -a_cap * (0.1 + 0.8 * unit(rng));
  const auto [rho1, rho2] = classical::rho_bounds(E, A, params.omega);
  const auto [slo, shi] = classical::sigma_bounds(params, A);
  const double rho = rho1 + (rho2 - rho1) * (0.05 + 0.9 * unit(rng));
  const double sig_inv_k = slo + (shi - slo) * (0.05 + 0.9 * unit(rng));
  const double sigma = std::pow(sig_inv_k, -1.0 / params.kval());
  const double sk = sigma_pow_k(params, sigma);
  const double rad_r = E * rho + A - w2 * rho * rho;
  const double rad_s = A + params.alpha * sk * sk + params.beta * sk;
  const double prho = (unit(rng) < 0.5 ? -1.0 : 1.0) * std::sqrt(std::max(rad_r, 0.0)) /
                      (2.0 * rho);
  const double psigma = (unit(rng) < 0.5 ? -1.0 : 1.0) * std::sqrt(std::max(rad_s, 0.0)) /
                        (2.0 * sigma);
  E_out = E;
  return PhasePoint::modified_polar(rho, sigma, prho, psigma);
}

SuiteResult run_specfun(std::uint64_t seed) {
  SuiteResult r{"specfun"};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> xdist(0.05, 10.0);
  std::uniform_real_distribution<double> tdist(0.0, kPi);

  // Laguerre ODE x y'' + (a+1-x) y' + n y = 0, relative to term magnitudes.
  for (double a : {0.0, 0.5, 1.0, 2.5}) {
    for (int n = 0; n <= 12; ++n) {
      for (int rep = 0; rep < 20; ++rep) {
        const double x = xdist(rng);
        const double t1 = x * specfun::laguerre_deriv2(n, a, x);
        const double t2 = (a + 1.0 - x) * specfun::laguerre_deriv(n, a, x);
        const double t3 = n * specfun::laguerre(n, a, x);
        const double scale = std::max({1.0, std::abs(t1), std::abs(t2), std::abs(t3)});
        record(r, std::abs(t1 + t2 + t3) / scale, 1e-10);
      }
    }
  }

  // Chebyshev multiple-angle identities.
  for (int n = 0; n <= 12; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      const double th = tdist(rng);
      record(r, std::abs(specfun::chebyshev_t(n, std::cos(th)) - std::cos(n * th)), 1e-12);
      record(r,
             std::abs(specfun::chebyshev_u(n - 1, std::cos(th)) * std::sin(th) -
                      std::sin(n * th)),
             1e-12);
    }
  }

  // Generalized Bessel ODE x^2 y'' + (a x + b) y' = n (n + a - 1) y.
  for (double a : {1.0, 2.5, 4.0}) {
    for (int n = 0; n <= 8; ++n) {
      for (double x : {0.25, 1.0, 4.0}) {
        const double b = 1.0;
        const double t1 = x * x * specfun::bessel_poly_deriv(n, a, b, x, 2);
        const double t2 = (a * x + b) * specfun::bessel_poly_deriv(n, a, b, x, 1);
        const double t3 = n * (n + a - 1.0) * specfun::bessel_poly(n, a, b, x);
        const double scale = std::max({1.0, std::abs(t1), std::abs(t2), std::abs(t3)});
        record(r, std::abs(t1 + t2 - t3) / scale, 1e-10);
      }
    }
  }

  // laguerre_deriv against a central finite difference.
  for (int n = 1; n <= 8; ++n) {
    for (int rep = 0; rep < 10; ++rep) {
      const double a = 2.5 * xdist(rng) / 10.0;
      const double x = xdist(rng);
      const double h = 1e-5;
      const double fd =
          (specfun::laguerre(n, a, x + h) - specfun::laguerre(n, a, x - h)) / (2.0 * h);
      const double exact = specfun::laguerre_deriv(n, a, x);
      record(r, std::abs(fd - exact) / std::max(1.0, std::abs(exact)), 1e-6);
    }
  }
  return r;
}

SuiteResult run_charts(std::uint64_t seed) {
  SuiteResult r{"charts"};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> udist(0.5, 3.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> pdist(-2.0, 2.0);
  const SystemParams sets[3] = {{RationalK(1, 1), -2.0, 6.0, 3.0},
                                {RationalK(3, 2), -1.0, 3.0, 4.0},
                                {RationalK(2, 1), -0.5, 2.0, 1.0}};

  for (int i = 0; i < 1000; ++i) {
    const double u = udist(rng);
    const double v = (2.0 * unit(rng) - 1.0) * (u - 0.05); // keep sigma > 0
    const PhasePoint cart = PhasePoint::cartesian(u, v, pdist(rng), pdist(rng));
    const PhasePoint polar = to_modified_polar(cart);
    const PhasePoint back = to_cartesian(polar);

    const double rt = std::max({std::abs(back.q1 - cart.q1), std::abs(back.q2 - cart.q2),
                                std::abs(back.p1 - cart.p1), std::abs(back.p2 - cart.p2)});
    record(r, rt, 1e-12);

    const SystemParams& params = sets[i % 3];
    const double h1 = hamiltonian(params, cart);
    const double h2 = hamiltonian(params, polar);
    record(r, std::abs(h1 - h2) / std::max(1.0, std::abs(h1)), 1e-10);
  }

  // symplectic check via central differences: sample away from the u = v
  // singularity, where the truncation error of the stencil stays below tol
  std::uniform_real_distribution<double> qd(0.5, 3.0);
  for (int i = 0; i < 100; ++i) {
    const auto polar = PhasePoint::modified_polar(qd(rng), qd(rng), pdist(rng), pdist(rng));
    record(r, symplectic_defect(polar), 1e-9);
  }
  return r;
}

SuiteResult run_conservation() {
  SuiteResult r{"conservation"};
  for (const auto& run : figure_runs()) {
    if (run.traj.escape) {
      r.pass = false;
      continue;
    }
    const auto& s0 = run.traj.samples.front();
    for (const auto& s : run.traj.samples) {
      record(r, std::abs(s.H - run.fc.E) / std::max(1.0, std::abs(run.fc.E)), 1e-6);
      record(r, std::abs(s.A_phase - run.fc.A) / std::max(1.0, std::abs(run.fc.A)), 1e-6);
      record(r, std::abs(s.L - s0.L) / std::max(1.0, std::abs(s0.L)), 1e-6);
    }
  }
  return r;
}

SuiteResult run_curve() {
  SuiteResult r{"curve"};
  for (const auto& run : figure_runs()) {
    if (run.traj.escape) {
      r.pass = false;
      continue;
    }
    const auto serial = batch::curve_residual_scan(run.fc.params, run.consts,
                                                   run.traj.samples, batch::Exec::Serial);
    const auto par = batch::curve_residual_scan(run.fc.params, run.consts,
                                                run.traj.samples, batch::Exec::OpenMP);
    record(r, serial.max_recurrence, 1e-6);
    record(r, serial.max_expanded, 1e-6);
    record(r, serial.max_cross, 1e-9);
    record(r, std::abs(serial.max_recurrence - par.max_recurrence), 1e-15);
    record(r, std::abs(serial.max_expanded - par.max_expanded), 1e-15);
  }
  return r;
}

SuiteResult run_period() {
  SuiteResult r{"period"};
  for (const auto& fc : figure_cases()) {
    const auto consts = classical::curve_constants(fc.params, fc.E, fc.A, 0.0, fc.delta2);
    const PhasePoint p0 = classical::initial_state(fc.params, consts);
    const double t_max = 4.0 * kPi * fc.params.k.q / fc.params.omega;
    const auto period = classical::find_period(fc.params, p0, t_max, 1e-6);
    if (!period) {
      r.pass = false;
      ++r.cases;
      continue;
    }
    // re-integrate to the recovered period and compare componentwise
    const auto traj = classical::integrate(fc.params, p0, *period, 1e-11, *period);
    const auto& pt = traj.samples.back().point;
    const double scale[4] = {std::max(1.0, std::abs(p0.q1)), std::max(1.0, std::abs(p0.q2)),
                             std::max(1.0, std::abs(p0.p1)), std::max(1.0, std::abs(p0.p2))};
    record(r, std::abs(pt.q1 - p0.q1) / scale[0], 1e-6);
    record(r, std::abs(pt.q2 - p0.q2) / scale[1], 1e-6);
    record(r, std::abs(pt.p1 - p0.p1) / scale[2], 1e-6);
    record(r, std::abs(pt.p2 - p0.p2) / scale[3], 1e-6);
  }
  return r;
}

SuiteResult run_poisson(std::uint64_t seed) {
  SuiteResult r{"poisson"};
  std::mt19937_64 rng(seed);
  const std::pair<int, int> pq[4] = {{1, 1}, {2, 1}, {1, 2}, {3, 2}};
  for (const auto& [p, q] : pq) {
    const SystemParams params{RationalK(p, q), -2.0, 6.0, 3.0};
    std::vector<PhasePoint> pts;
    double e;
    for (int i = 0; i < 25; ++i) pts.push_back(random_bounded_point(params, rng, e));
    const auto serial = batch::poisson_ratio_sweep(params, pts, batch::Exec::Serial);
    const auto par = batch::poisson_ratio_sweep(params, pts, batch::Exec::OpenMP);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      record(r, serial[i], 1e-5);
      record(r, std::abs(serial[i] - par[i]), 1e-15);
    }
  }
  return r;
}

SuiteResult run_quantum(std::uint64_t seed) {
  SuiteResult r{"quantum"};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  // Closed-form anchor values for k=1, alpha=-1, beta=7, omega=1.
  {
    const SystemParams params{RationalK(1, 1), -1.0, 7.0, 1.0};
    const auto spec = quantum::spectrum(params, 3);
    record(r, std::abs(spec.N - 1.0), 0.5);
    record(r, std::abs(spec.levels[0].A_n - (-6.25)), 1e-12);
    record(r, std::abs(spec.energy(params, 0, 0) - 7.0), 1e-12);
    record(r, std::abs(spec.energy(params, 1, 1) - 7.0), 1e-12);
    for (const auto& lv : spec.levels) {
      const double e2 = quantum::energy_explicit(params, lv.m, lv.n);
      record(r, std::abs(lv.E_mn - e2) / std::max(1.0, std::abs(e2)), 1e-12);
    }
  }

  const SystemParams sets[3] = {{RationalK(1, 1), -1.0, 7.0, 1.0},
                                {RationalK(3, 2), -1.0, 9.5, 2.0},
                                {RationalK(2, 1), -4.0, 36.0, 1.5}};

  for (const auto& params : sets) {
    const auto spec = quantum::spectrum(params, 3);

    // Schrodinger residual on interior grids (golden-ratio spacing keeps the
    // samples off Laguerre nodes).
    std::vector<double> rho_grid, sigma_grid;
    const double k = params.kval();
    const double sqa = std::sqrt(-params.alpha);
    for (int i = 0; i < 20; ++i) {
      const double f = (i + 0.6180339887) / 20.0;
      const double xi = 0.4 + 7.6 * f;
      const double eta = 0.4 + 7.6 * f;
      rho_grid.push_back(xi / params.omega);
      sigma_grid.push_back(std::pow(k * eta / sqa, 1.0 / k));
    }
    for (const auto& lv : spec.levels) {
      if (lv.m > 3) continue;
      const double serial = batch::max_schrodinger_residual(
          params, spec, lv.m, lv.n, rho_grid, sigma_grid, batch::Exec::Serial);
      const double par = batch::max_schrodinger_residual(
          params, spec, lv.m, lv.n, rho_grid, sigma_grid, batch::Exec::OpenMP);
      record(r, serial, 1e-9);
      record(r, std::abs(serial - par), 1e-15);
    }

    // Gram matrix off-diagonals relative to the diagonal geometric mean.
    const auto gram = quantum::gram_matrix_S(params, spec);
    for (std::size_t i = 0; i < gram.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        const double scale = std::sqrt(gram[i][i] * gram[j][j]);
        record(r, std::abs(gram[i][j]) / scale, 1e-8);
      }
    }

    // Bessel-polynomial representation of S_n.
    for (int n = 0; n <= spec.N; ++n) {
      for (double s : {0.2, 0.7, 1.6, 5.0}) {
        record(r, quantum::bessel_representation_check(params, spec, n, s), 1e-9);
      }
    }
  }

  // Ladder identities as pointwise function identities.
  for (double a : {0.5, 1.0, 2.0, 3.5}) {
    for (int n = 0; n <= 4; ++n) {
      for (double x : {0.5, 1.0, 2.0}) {
        using specfun::laguerre;
        using specfun::laguerre_deriv;
        const double l = laguerre(n, a, x);
        const double ld = laguerre_deriv(n, a, x);
        // x L' + (a - x) L = (n+1) L_{n+1}^{a-1}
        record(r, std::abs(x * ld + (a - x) * l - (n + 1.0) * laguerre(n + 1, a - 1.0, x)),
               1e-10);
        // x L' + a L = (n + a) L_n^{a-1}
        record(r, std::abs(x * ld + a * l - (n + a) * laguerre(n, a - 1.0, x)), 1e-10);
        // L' - L = -L_n^{a+1}
        record(r, std::abs(ld - l + laguerre(n, a + 1.0, x)), 1e-10);
        // L' = -L_{n-1}^{a+1}
        record(r, std::abs(ld + laguerre(n - 1, a + 1.0, x)), 1e-10);

        // first-order mode ladder: down in n / up in a, and its adjoint
        const quantum::ExpPoly f = quantum::laguerre_mode(n, a);
        const double c = (2.0 * n + a + 1.0) / 2.0;
        const quantum::ExpPoly km = quantum::ladder_step(true, a, c, f);
        const quantum::ExpPoly km_ref = quantum::laguerre_mode(n - 1, a + 2.0).scaled(-1.0);
        record(r, std::abs(km.eval(x) - (n >= 1 ? km_ref.eval(x) : 0.0)), 1e-10);
        const quantum::ExpPoly kp = quantum::ladder_step(false, a, c, f);
        const quantum::ExpPoly kp_ref =
            quantum::laguerre_mode(n + 1, a - 2.0).scaled(-(n + 1.0) * (n + a));
        record(r, std::abs(kp.eval(x) - kp_ref.eval(x)), 1e-10);
      }
    }
  }

  // Degeneracy maps for (p, q) = (1, 1) and (3, 2).
  {
    const auto spec1 = quantum::spectrum(sets[0], 3);
    const auto rep1 = quantum::degeneracy_map_check(sets[0], spec1, 0, 0);
    record(r, rep1.energy_equal ? 0.0 : 1.0, 0.5);
    record(r, rep1.ratio_variation_R, 1e-8);
    record(r, rep1.ratio_variation_S, 1e-8);

    const SystemParams p32{RationalK(3, 2), -1.0, 16.0, 2.0}; // ratio > 5 so N >= 2
    const auto spec32 = quantum::spectrum(p32, 6);
    const auto rep32 = quantum::degeneracy_map_check(p32, spec32, 0, 0);
    record(r, rep32.energy_equal ? 0.0 : 1.0, 0.5);
    record(r, rep32.ratio_variation_R, 1e-8);
    record(r, rep32.ratio_variation_S, 1e-8);
  }

  // Exact degeneracy for 50 random rational-k parameter sets.
  {
    const std::pair<int, int> pqs[5] = {{1, 1}, {2, 1}, {1, 2}, {3, 2}, {2, 3}};
    for (int i = 0; i < 50; ++i) {
      const auto [p, q] = pqs[i % 5];
      SystemParams params{RationalK(p, q), -(0.5 + 3.5 * unit(rng)), 0.0,
                          0.5 + 3.0 * unit(rng)};
      const double k = params.kval();
      const double sqa = std::sqrt(-params.alpha);
      // ratio > 2q + 2 guarantees N >= q, so the n + q partner exists
      params.beta = 2.0 * k * sqa * (2.0 * q + 2.0 + 4.0 * unit(rng));
      const auto spec = quantum::spectrum(params, 2 * p + 2);
      const int n = 0, m = 1;
      const double e1 = spec.energy(params, m, n);
      const double e2 = spec.energy(params, m + p, n + q);
      record(r, e1 == e2 ? 0.0 : std::abs(e1 - e2), 1e-300);
    }
  }
  return r;
}

SuiteResult run_oscillator(std::uint64_t seed) {
  SuiteResult r{"oscillator"};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 10; ++i) {
    const double a = 0.5 + 2.5 * unit(rng);
    const double b = 0.2 + 2.0 * unit(rng);
    const double omega = 0.5 + 2.5 * unit(rng);
    const double e_ref = omega * omega * (a * a - b * b);
    const double a_ref = omega * omega * a * a * b * b;
    int done = 0;
    while (done < 50) {
      const double t = 4.0 * kPi * unit(rng) / omega;
      const auto s = classical::oscillator_trajectory(a, b, omega, t);
      if (!std::isfinite(s.sigma)) continue; // chart-singular instant
      ++done;
      const double scale = std::max(1.0, std::abs(e_ref));
      record(r, std::abs(s.E - e_ref) / scale, 1e-9);
      record(r, std::abs(4.0 * s.sigma * s.sigma * s.p_sigma * s.p_sigma - a_ref) /
                    std::max(1.0, a_ref),
             1e-9);
      record(r, std::abs(s.A - a_ref) / std::max(1.0, a_ref), 1e-9);
    }
  }
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "specfun", "charts", "conservation", "curve",
      "period",  "poisson", "quantum",     "oscillator"};
  return names;
}

std::vector<SuiteResult> run(const std::string& suite, std::uint64_t seed) {
  std::vector<SuiteResult> out;
  auto dispatch = [&](const std::string& name) {
    if (name == "specfun") return run_specfun(seed);
    if (name == "charts") return run_charts(seed);
    if (name == "conservation") return run_conservation();
    if (name == "curve") return run_curve();
    if (name == "period") return run_period();
    if (name == "poisson") return run_poisson(seed);
    if (name == "quantum") return run_quantum(seed);
    if (name == "oscillator") return run_oscillator(seed);
    throw std::invalid_argument("unknown suite: " + name);
  };
  if (suite == "all") {
    for (const auto& name : suite_names()) out.push_back(dispatch(name));
  } else {
    out.push_back(dispatch(suite));
  }
  return out;
}

} // namespace e11::verify
