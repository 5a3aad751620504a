// Timing comparison of the OpenMP batch kernels against their serial
// reference paths, with an agreement check on the results.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "e11/batch.hpp"
#include "e11/classical.hpp"
#include "e11/quantum.hpp"
#include "e11/verify.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

void report(const char* name, double t_serial, double t_parallel, double agreement) {
  std::printf("%-24s serial %8.3f ms   parallel %8.3f ms   speedup %5.2fx   max |diff| %g\n",
              name, 1e3 * t_serial, 1e3 * t_parallel, t_serial / t_parallel, agreement);
}

} // namespace

int main() {
  using namespace e11;

  // --- Poisson-bracket ratio sweep -----------------------------------------
  {
    const SystemParams params{RationalK(3, 2), -2.0, 6.0, 3.0};
    std::mt19937_64 rng(12345);
    std::vector<PhasePoint> pts;
    double e;
    for (int i = 0; i < 2000; ++i)
      pts.push_back(verify::random_bounded_point(params, rng, e));

    const auto t0 = Clock::now();
    const auto serial = batch::poisson_ratio_sweep(params, pts, batch::Exec::Serial);
    const auto t1 = Clock::now();
    const auto par = batch::poisson_ratio_sweep(params, pts, batch::Exec::OpenMP);
    const auto t2 = Clock::now();
    double diff = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
      diff = std::max(diff, std::abs(serial[i] - par[i]));
    report("poisson_ratio_sweep", seconds(t0, t1), seconds(t1, t2), diff);
  }

  // --- Schroedinger residual grid ------------------------------------------
  {
    const SystemParams params{RationalK(2, 1), -4.0, 36.0, 1.5};
    const auto spec = quantum::spectrum(params, 3);
    std::vector<double> rho_grid, sigma_grid;
    for (int i = 0; i < 120; ++i) {
      const double f = (i + 0.5) / 120.0;
      rho_grid.push_back((0.4 + 7.6 * f) / params.omega);
      sigma_grid.push_back(std::pow(params.kval() * (0.4 + 7.6 * f) / 2.0,
                                    1.0 / params.kval()));
    }
    const auto t0 = Clock::now();
    const double serial = batch::max_schrodinger_residual(params, spec, 3, 0, rho_grid,
                                                          sigma_grid, batch::Exec::Serial);
    const auto t1 = Clock::now();
    const double par = batch::max_schrodinger_residual(params, spec, 3, 0, rho_grid,
                                                       sigma_grid, batch::Exec::OpenMP);
    const auto t2 = Clock::now();
    report("schrodinger_residual", seconds(t0, t1), seconds(t1, t2), std::abs(serial - par));
  }

  // --- Closure-law residual scan -------------------------------------------
  {
    const auto& fc = verify::figure_cases()[5]; // k = 3/2 run
    const auto consts = classical::curve_constants(fc.params, fc.E, fc.A, 0.0, fc.delta2);
    const auto p0 = classical::initial_state(fc.params, consts);
    const double t_end = 3.14159265358979 / fc.params.omega;
    const auto traj = classical::integrate(fc.params, p0, t_end, 1e-10, t_end / 20000.0);

    const auto t0 = Clock::now();
    const auto serial =
        batch::curve_residual_scan(fc.params, consts, traj.samples, batch::Exec::Serial);
    const auto t1 = Clock::now();
    const auto par =
        batch::curve_residual_scan(fc.params, consts, traj.samples, batch::Exec::OpenMP);
    const auto t2 = Clock::now();
    const double diff = std::max(std::abs(serial.max_recurrence - par.max_recurrence),
                                 std::abs(serial.max_expanded - par.max_expanded));
    report("curve_residual_scan", seconds(t0, t1), seconds(t1, t2), diff);
  }
  return 0;
}
