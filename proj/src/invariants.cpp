#include "e11/invariants.hpp"

#include <cmath>

#include "e11/specfun.hpp"

namespace e11::invariants {

using specfun::chebyshev_t;
using specfun::chebyshev_u;

double a_phase(const SystemParams& params, const PhasePoint& point) {
  const PhasePoint mp = point.chart == Chart::ModifiedPolar ? point : to_modified_polar(point);
  const double sigma = mp.q2, psigma = mp.p2;
  const double sk = sigma_pow_k(params, sigma);
  return 4.0 * sigma * sigma * psigma * psigma - params.alpha * sk * sk - params.beta * sk;
}

InvariantValues phase_invariants(const SystemParams& params, const PhasePoint& point) {
  const PhasePoint mp = point.chart == Chart::ModifiedPolar ? point : to_modified_polar(point);
  const double rho = mp.q1, sigma = mp.q2, prho = mp.p1, psigma = mp.p2;
  if (rho <= 0.0 || sigma <= 0.0)
    throw DomainError("phase_invariants: requires rho, sigma > 0");

  InvariantValues iv;
  iv.H = hamiltonian(params, mp);
  iv.A_phase = a_phase(params, mp);
  const double w2 = params.omega * params.omega;
  iv.D1 = iv.H * iv.H + 4.0 * w2 * iv.A_phase;
  iv.D2 = params.beta * params.beta - 4.0 * params.alpha * iv.A_phase;
  if (iv.D1 <= 0.0) throw DomainError("phase_invariants: D1 <= 0 (outside bounded regime)");
  if (iv.D2 <= 0.0) throw DomainError("phase_invariants: D2 <= 0 (outside bounded regime)");

  const double sk = sigma_pow_k(params, sigma);
  const double sd1 = std::sqrt(iv.D1), sd2 = std::sqrt(iv.D2);
  iv.Z = (4.0 * rho * rho * prho * prho + 4.0 * sigma * sigma * psigma * psigma +
          w2 * rho * rho - params.alpha * sk * sk - params.beta * sk) /
         (rho * sd1);
  iv.W = (8.0 * sigma * sigma * psigma * psigma / sk - 2.0 * params.alpha * sk - params.beta) / sd2;
  iv.sqrt_term = 16.0 * (sigma / sk) * prho * psigma *
                 (params.alpha * sk * sk + params.beta * sk -
                  4.0 * sigma * sigma * psigma * psigma) /
                 (sd1 * sd2);
  return iv;
}

double extra_integral(const SystemParams& params, const PhasePoint& point) {
  const InvariantValues iv = phase_invariants(params, point);
  const int p = params.k.p, q = params.k.q;
  const double norm = std::pow(std::sqrt(iv.D1), p) * std::pow(std::sqrt(iv.D2), q);
  return norm * (chebyshev_t(q, iv.W) * chebyshev_t(p, iv.Z) -
                 chebyshev_u(q - 1, iv.W) * chebyshev_u(p - 1, iv.Z) * iv.sqrt_term);
}

namespace {

// Central difference with one Richardson level: (4 D(h/2) - D(h)) / 3.
double partial(const PhaseFunction& f, PhasePoint point, int index, double step) {
  double* coord = nullptr;
  switch (index) {
    case 0: coord = &point.q1; break;
    case 1: coord = &point.q2; break;
    case 2: coord = &point.p1; break;
    default: coord = &point.p2; break;
  }
  const double x0 = *coord;
  const double h = step * (1.0 + std::abs(x0));
  auto central = [&](double hh) {
    *coord = x0 + hh;
    const double fp = f(point);
    *coord = x0 - hh;
    const double fm = f(point);
    *coord = x0;
    return (fp - fm) / (2.0 * hh);
  };
  const double d1 = central(h);
  const double d2 = central(h / 2.0);
  return (4.0 * d2 - d1) / 3.0;
}

} // namespace

double poisson_bracket(const PhaseFunction& f, const PhaseFunction& g,
                       const PhasePoint& point, double step) {
  double sum = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double df_dq = partial(f, point, i, step);
    const double dg_dq = partial(g, point, i, step);
    const double df_dp = partial(f, point, i + 2, step);
    const double dg_dp = partial(g, point, i + 2, step);
    sum += df_dq * dg_dp - df_dp * dg_dq;
  }
  return sum;
}

double gradient_norm(const PhaseFunction& f, const PhasePoint& point, double step) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(partial(f, point, i, step)));
  return m;
}

} // namespace e11::invariants
