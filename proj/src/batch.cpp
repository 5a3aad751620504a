#include "e11/batch.hpp"

#include <cmath>

namespace e11::batch {

namespace {

double poisson_ratio(const SystemParams& params, const PhasePoint& pt) {
  auto l_fn = [&params](const PhasePoint& x) { return invariants::extra_integral(params, x); };
  auto h_fn = [&params](const PhasePoint& x) { return hamiltonian(params, x); };
  const double bracket = invariants::poisson_bracket(l_fn, h_fn, pt);
  const double scale =
      invariants::gradient_norm(l_fn, pt) * invariants::gradient_norm(h_fn, pt);
  return std::abs(bracket) / std::max(scale, 1e-300);
}

} // namespace

std::vector<double> poisson_ratio_sweep(const SystemParams& params,
                                        const std::vector<PhasePoint>& points,
                                        Exec exec) {
  const int n = static_cast<int>(points.size());
  std::vector<double> out(points.size());
  if (exec == Exec::Serial) {
    for (int i = 0; i < n; ++i) out[i] = poisson_ratio(params, points[i]);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) out[i] = poisson_ratio(params, points[i]);
  }
  return out;
}

double max_schrodinger_residual(const SystemParams& params,
                                const quantum::SpectrumData& spec, int m, int n,
                                const std::vector<double>& rho_grid,
                                const std::vector<double>& sigma_grid,
                                Exec exec) {
  const int nr = static_cast<int>(rho_grid.size());
  const int ns = static_cast<int>(sigma_grid.size());
  double worst = 0.0;
  if (exec == Exec::Serial) {
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < ns; ++j)
        worst = std::max(worst, std::abs(quantum::schrodinger_residual(
                                    params, spec, m, n, rho_grid[i], sigma_grid[j])));
  } else {
#pragma omp parallel for collapse(2) reduction(max : worst)
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < ns; ++j)
        worst = std::max(worst, std::abs(quantum::schrodinger_residual(
                                    params, spec, m, n, rho_grid[i], sigma_grid[j])));
  }
  return worst;
}

CurveScan curve_residual_scan(const SystemParams& params,
                              const classical::CurveConstants& consts,
                              const std::vector<classical::TrajectorySample>& samples,
                              Exec exec) {
  const int n = static_cast<int>(samples.size());
  CurveScan scan;
  double mr = 0.0, me = 0.0, mc = 0.0;

  auto body = [&](int i, double& r, double& e, double& c) {
    const auto iv = invariants::phase_invariants(params, samples[i].point);
    const double res = classical::curve_residual(params, consts, iv.Z, iv.W, iv.sqrt_term);
    const double rese =
        classical::curve_residual_expanded(params, consts, iv.Z, iv.W, iv.sqrt_term);
    r = std::max(r, std::abs(res));
    e = std::max(e, std::abs(rese));
    c = std::max(c, std::abs(res - rese));
  };

  if (exec == Exec::Serial) {
    for (int i = 0; i < n; ++i) body(i, mr, me, mc);
  } else {
#pragma omp parallel for reduction(max : mr, me, mc)
    for (int i = 0; i < n; ++i) body(i, mr, me, mc);
  }
  scan.max_recurrence = mr;
  scan.max_expanded = me;
  scan.max_cross = mc;
  return scan;
}

} // namespace e11::batch
