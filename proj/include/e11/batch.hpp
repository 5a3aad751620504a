#ifndef E11_BATCH_HPP
#define E11_BATCH_HPP

#include <vector>

#include "e11/classical.hpp"
#include "e11/invariants.hpp"
#include "e11/quantum.hpp"

namespace e11::batch {

// Point sweeps are embarrassingly parallel; every kernel has a serial
// reference path producing identical output (per-point values are
// independent and the reductions are order-insensitive).
enum class Exec { Serial, OpenMP };

// |{L, H}| / (|grad L| |grad H|) per point.
std::vector<double> poisson_ratio_sweep(const SystemParams& params,
                                        const std::vector<PhasePoint>& points,
                                        Exec exec = Exec::OpenMP);

// max over the (rho, sigma) product grid of |schrodinger_residual|.
double max_schrodinger_residual(const SystemParams& params,
                                const quantum::SpectrumData& spec, int m, int n,
                                const std::vector<double>& rho_grid,
                                const std::vector<double>& sigma_grid,
                                Exec exec = Exec::OpenMP);

struct CurveScan {
  double max_recurrence = 0.0; // max |curve_residual| along the samples
  double max_expanded = 0.0;   // same, binomial double-sum form
  double max_cross = 0.0;      // max |recurrence - expanded|
};
CurveScan curve_residual_scan(const SystemParams& params,
                              const classical::CurveConstants& consts,
                              const std::vector<classical::TrajectorySample>& samples,
                              Exec exec = Exec::OpenMP);

} // namespace e11::batch

#endif
