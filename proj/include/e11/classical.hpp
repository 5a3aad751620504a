#ifndef E11_CLASSICAL_HPP
#define E11_CLASSICAL_HPP

#include <array>
#include <optional>
#include <vector>

#include "e11/model.hpp"

namespace e11::classical {

// Constants of one bounded orbit: energy E, separation constant A, the
// discriminants D1 = E^2 + 4 w^2 A and D2 = beta^2 - 4 alpha A, radial
// turning points, the allowed band of sigma^-k, and the curve constants
// Gamma_k, C_k.
struct CurveConstants {
  double E = 0.0;
  double A = 0.0;
  double D1 = 0.0;
  double D2 = 0.0;
  double rho1 = 0.0;
  double rho2 = 0.0;
  double sigma_lo = 0.0;   // lower bound of the (beta -+ sqrt(D2))/(2|A|) band
  double sigma_hi = 0.0;
  double gamma_k = 0.0;
  double c_k = 0.0;
  double delta1 = 0.0;
  double delta2 = 0.0;
};

struct TrajectorySample {
  double t = 0.0;
  PhasePoint point;          // modified polar chart
  double H = 0.0;
  double A_phase = 0.0;
  double L = 0.0;
  double curve_residual = 0.0;
};

// Step-size underflow near the rho -> 0 or sigma -> 0 boundary.
struct DomainEscape {
  double t = 0.0;
  std::string reason;
};

struct Trajectory {
  SystemParams params;
  std::vector<TrajectorySample> samples;
  std::optional<DomainEscape> escape;
};

using State = std::array<double, 4>; // rho, sigma, p_rho, p_sigma

// Hamilton's equations for the modified-polar Hamiltonian.
State equations_of_motion(const SystemParams& params, const State& s);
State equations_of_motion(const SystemParams& params, const PhasePoint& point);

// Adaptive Dormand-Prince 5(4) with dense output; samples every dt_out.
// rel_tol in [1e-13, 1e-6]. Cartesian starts are transformed first.
Trajectory integrate(const SystemParams& params, const PhasePoint& initial,
                     double t_end, double rel_tol, double dt_out);

// rho(t) = (E + sqrt(D1) cos(4 w (t + delta1))) / (2 w^2). Requires D1 > 0.
double rho_closed_form(const CurveConstants& consts, double omega, double t);

// Radial turning points ((E - sqrt(D1))/(2 w^2), (E + sqrt(D1))/(2 w^2)).
std::pair<double, double> rho_bounds(double E, double A, double omega);

// Band ((beta - sqrt(D2))/(2|A|), (beta + sqrt(D2))/(2|A|)). Requires the
// bounded regime and D2 > 0. Note: along an orbit this interval brackets
// sigma^-k; the turning points of sigma^k itself are its reciprocals.
std::pair<double, double> sigma_bounds(const SystemParams& params, double A);

// Gamma_k = k (4 delta2 sqrt(-A) + pi/2) + pi/2 (turning-point value of the
// arcsin fixed to +pi/2), C_k = (p+q) pi/2 - q Gamma_k.
CurveConstants curve_constants(const SystemParams& params, double E, double A,
                               double delta1, double delta2);

// cos(C_k) - [T_q(W) T_p(Z) - U_{q-1}(W) U_{p-1}(Z) s], with s the signed
// value of sqrt((1-Z^2)(1-W^2)) supplied by the caller (see
// invariants::phase_invariants). Zero on the orbit.
double curve_residual(const SystemParams& params, const CurveConstants& consts,
                      double Z, double W, double s);

// Same contract, evaluated via the explicit binomial double sums.
double curve_residual_expanded(const SystemParams& params, const CurveConstants& consts,
                               double Z, double W, double s);

// Smallest t* in (0, t_max] where the orbit returns to its initial state in
// the amplitude-scaled max metric; nullopt when no closure is found.
std::optional<double> find_period(const SystemParams& params, const PhasePoint& initial,
                                  double t_max, double tol,
                                  double rel_tol = 1e-11);

// Closed-form harmonic oscillator (alpha = beta = 0) orbit in both charts.
// At chart-singular instants (u = v) the modified-polar fields are NaN.
struct OscillatorSample {
  double t = 0.0;
  double u = 0.0, v = 0.0, pu = 0.0, pv = 0.0;
  double rho = 0.0, sigma = 0.0, p_rho = 0.0, p_sigma = 0.0;
  double E = 0.0;
  double A = 0.0;
};
OscillatorSample oscillator_trajectory(double a, double b, double omega, double t);

// Initial phase point on the orbit fixed by (E, A, delta1, delta2): at t = 0
// rho sits at its delta1-phase and sigma follows the trajectory equation.
PhasePoint initial_state(const SystemParams& params, const CurveConstants& consts);

void require_bounded_regime(const SystemParams& params, double E, double A);

} // namespace e11::classical

#endif
