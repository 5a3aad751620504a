#ifndef E11_INVARIANTS_HPP
#define E11_INVARIANTS_HPP

#include <functional>

#include "e11/model.hpp"

namespace e11::invariants {

// Conserved phase-space quantities of one point: H, the separation constant
// A_phase = 4 sigma^2 p_sigma^2 - alpha sigma^{2k} - beta sigma^k, the
// discriminants D1 = H^2 + 4 w^2 A_phase and D2 = beta^2 - 4 alpha A_phase,
// the turning-point variables Z, W_k, and the signed square-root term.
struct InvariantValues {
  double Z = 0.0;
  double W = 0.0;
  double sqrt_term = 0.0; // signed value of sqrt((1-Z^2)(1-W^2))
  double D1 = 0.0;
  double D2 = 0.0;
  double A_phase = 0.0;
  double H = 0.0;
};

InvariantValues phase_invariants(const SystemParams& params, const PhasePoint& point);

double a_phase(const SystemParams& params, const PhasePoint& point);

// The degree-(2p+2q) polynomial integral
//   L = sqrt(D1)^p sqrt(D2)^q [T_q(W) T_p(Z) - U_{q-1}(W) U_{p-1}(Z) sqrt_term].
// The signed phase-space sqrt_term keeps L single-valued.
double extra_integral(const SystemParams& params, const PhasePoint& point);

using PhaseFunction = std::function<double(const PhasePoint&)>;

// Numerical Poisson bracket {f, g} by central differences with one level of
// Richardson extrapolation. step scales as step * (1 + |coordinate|).
double poisson_bracket(const PhaseFunction& f, const PhaseFunction& g,
                       const PhasePoint& point, double step = 1e-5);

// max-norm of the finite-difference phase-space gradient, same stencil.
double gradient_norm(const PhaseFunction& f, const PhasePoint& point, double step = 1e-5);

} // namespace e11::invariants

#endif
