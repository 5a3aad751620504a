#include "e11/classical.hpp"

#include <cmath>
#include <numbers>

#include "e11/invariants.hpp"
#include "e11/ode.hpp"
#include "e11/specfun.hpp"

namespace e11::classical {

using specfun::binomial;
using specfun::chebyshev_t;
using specfun::chebyshev_u;

State equations_of_motion(const SystemParams& params, const State& s) {
  const double rho = s[0], sigma = s[1], prho = s[2], psigma = s[3];
  if (rho <= 0.0 || sigma <= 0.0)
    throw DomainError("equations_of_motion: requires rho, sigma > 0");
  const double k = params.kval();
  const double w2 = params.omega * params.omega;
  const double sk = std::exp(k * std::log(sigma));
  const double pot_ang = params.alpha * sk * sk + params.beta * sk;
  // dH/drho, dH/dsigma for H = 4 rho p_rho^2 - 4 sigma^2/rho p_sigma^2
  //                            + w^2 rho + pot_ang / rho
  const double dH_drho =
      4.0 * prho * prho + 4.0 * (sigma * sigma / (rho * rho)) * psigma * psigma + w2 -
      pot_ang / (rho * rho);
  const double dH_dsigma =
      -8.0 * (sigma / rho) * psigma * psigma +
      (2.0 * k * params.alpha * sk * sk + k * params.beta * sk) / (sigma * rho);
  return {8.0 * rho * prho, -8.0 * (sigma * sigma / rho) * psigma, -dH_drho, -dH_dsigma};
}

State equations_of_motion(const SystemParams& params, const PhasePoint& point) {
  const PhasePoint mp = point.chart == Chart::ModifiedPolar ? point : to_modified_polar(point);
  return equations_of_motion(params, State{mp.q1, mp.q2, mp.p1, mp.p2});
}

std::pair<double, double> rho_bounds(double E, double A, double omega) {
  const double D1 = E * E + 4.0 * omega * omega * A;
  if (D1 <= 0.0) throw DomainError("rho_bounds: D1 <= 0, no real turning points");
  const double sd1 = std::sqrt(D1);
  const double w2 = omega * omega;
  return {(E - sd1) / (2.0 * w2), (E + sd1) / (2.0 * w2)};
}

std::pair<double, double> sigma_bounds(const SystemParams& params, double A) {
  if (!(params.alpha < 0.0 && params.beta > 0.0 && A < 0.0))
    throw DomainError("sigma_bounds: requires alpha < 0, beta > 0, A < 0");
  const double D2 = params.beta * params.beta - 4.0 * params.alpha * A;
  if (D2 < 0.0)
    throw DomainError("sigma_bounds: D2 < 0, separation constant above its upper bound");
  const double sd2 = std::sqrt(D2);
  const double denom = 2.0 * std::abs(A);
  return {(params.beta - sd2) / denom, (params.beta + sd2) / denom};
}

void require_bounded_regime(const SystemParams& params, double E, double A) {
  if (!(params.omega > 0.0)) throw DomainError("bounded regime requires omega > 0");
  if (!(params.alpha < 0.0)) throw DomainError("bounded regime requires alpha < 0");
  if (!(params.beta > 0.0)) throw DomainError("bounded regime requires beta > 0");
  if (!(E >= 0.0)) throw DomainError("bounded regime requires E >= 0");
  if (!(A < 0.0)) throw DomainError("bounded regime requires A < 0");
  const double w2 = params.omega * params.omega;
  if (!(-A <= E * E / (4.0 * w2)))
    throw DomainError("bounded regime requires -A <= E^2/(4 omega^2)");
  if (!(-A <= params.beta * params.beta / (4.0 * std::abs(params.alpha))))
    throw DomainError("bounded regime requires -A <= beta^2/(4|alpha|)");
}

double rho_closed_form(const CurveConstants& consts, double omega, double t) {
  if (consts.D1 <= 0.0) throw DomainError("rho_closed_form: D1 <= 0");
  return (consts.E + std::sqrt(consts.D1) * std::cos(4.0 * omega * (t + consts.delta1))) /
         (2.0 * omega * omega);
}

CurveConstants curve_constants(const SystemParams& params, double E, double A,
                               double delta1, double delta2) {
  require_bounded_regime(params, E, A);
  CurveConstants c;
  c.E = E;
  c.A = A;
  c.delta1 = delta1;
  c.delta2 = delta2;
  c.D1 = E * E + 4.0 * params.omega * params.omega * A;
  c.D2 = params.beta * params.beta - 4.0 * params.alpha * A;
  std::tie(c.rho1, c.rho2) = rho_bounds(E, A, params.omega);
  std::tie(c.sigma_lo, c.sigma_hi) = sigma_bounds(params, A);
  const double k = params.kval();
  const double half_pi = std::numbers::pi / 2.0;
  // arcsin at the sigma turning point is +pi/2 on the principal branch
  c.gamma_k = k * (4.0 * delta2 * std::sqrt(-A) + half_pi) + half_pi;
  c.c_k = (params.k.p + params.k.q) * half_pi - params.k.q * c.gamma_k;
  return c;
}

double curve_residual(const SystemParams& params, const CurveConstants& consts,
                      double Z, double W, double s) {
  const int p = params.k.p, q = params.k.q;
  return std::cos(consts.c_k) -
         (chebyshev_t(q, W) * chebyshev_t(p, Z) -
          chebyshev_u(q - 1, W) * chebyshev_u(p - 1, Z) * s);
}

namespace {

// T_n(x) = sum_{j<=n/2} C(n,2j) x^{n-2j} (x^2-1)^j
double cheb_t_sum(int n, double x) {
  if (n == 0) return 1.0;
  double sum = 0.0;
  const double y = x * x - 1.0;
  for (int j = 0; 2 * j <= n; ++j)
    sum += binomial(n, 2 * j) * std::pow(x, n - 2 * j) * std::pow(y, j);
  return sum;
}

// U_{n-1}(x) = sum_{j<=(n-1)/2} C(n,2j+1) x^{n-1-2j} (x^2-1)^j
double cheb_u_sum(int n, double x) {
  if (n == 0) return 0.0;
  double sum = 0.0;
  const double y = x * x - 1.0;
  for (int j = 0; 2 * j + 1 <= n; ++j)
    sum += binomial(n, 2 * j + 1) * std::pow(x, n - 1 - 2 * j) * std::pow(y, j);
  return sum;
}

} // namespace

double curve_residual_expanded(const SystemParams& params, const CurveConstants& consts,
                               double Z, double W, double s) {
  const int p = params.k.p, q = params.k.q;
  return std::cos(consts.c_k) -
         (cheb_t_sum(q, W) * cheb_t_sum(p, Z) - cheb_u_sum(q, W) * cheb_u_sum(p, Z) * s);
}

namespace {

double curve_expression(const SystemParams& params, const invariants::InvariantValues& iv) {
  const int p = params.k.p, q = params.k.q;
  return chebyshev_t(q, iv.W) * chebyshev_t(p, iv.Z) -
         chebyshev_u(q - 1, iv.W) * chebyshev_u(p - 1, iv.Z) * iv.sqrt_term;
}

ode::Solution solve_flow(const SystemParams& params, const State& s0, double t_end,
                         double rel_tol) {
  auto rhs = [&params](double, const ode::Vec& y) { return equations_of_motion(params, y); };
  auto valid = [](const ode::Vec& y) { return y[0] > 0.0 && y[1] > 0.0; };
  return ode::solve(rhs, valid, s0, 0.0, t_end, rel_tol, rel_tol);
}

TrajectorySample make_sample(const SystemParams& params, double t, const ode::Vec& y,
                             double cos_c) {
  TrajectorySample smp;
  smp.t = t;
  smp.point = PhasePoint::modified_polar(y[0], y[1], y[2], y[3]);
  smp.H = hamiltonian(params, smp.point);
  smp.A_phase = invariants::a_phase(params, smp.point);
  try {
    const auto iv = invariants::phase_invariants(params, smp.point);
    smp.L = invariants::extra_integral(params, smp.point);
    smp.curve_residual = cos_c - curve_expression(params, iv);
  } catch (const DomainError&) {
    // D1 or D2 not positive (e.g. alpha = beta = 0): Z, W, L undefined
    smp.L = std::nan("");
    smp.curve_residual = std::nan("");
  }
  return smp;
}

} // namespace

Trajectory integrate(const SystemParams& params, const PhasePoint& initial,
                     double t_end, double rel_tol, double dt_out) {
  if (!(rel_tol >= 1e-13 && rel_tol <= 1e-6))
    throw std::invalid_argument("integrate: rel_tol must lie in [1e-13, 1e-6]");
  if (!(dt_out > 0.0 && t_end > 0.0))
    throw std::invalid_argument("integrate: t_end and dt_out must be positive");
  const PhasePoint mp0 =
      initial.chart == Chart::ModifiedPolar ? initial : to_modified_polar(initial);
  if (mp0.q1 <= 0.0 || mp0.q2 <= 0.0)
    throw DomainError("integrate: initial point must have rho, sigma > 0");

  const State s0{mp0.q1, mp0.q2, mp0.p1, mp0.p2};
  const auto sol = solve_flow(params, s0, t_end, rel_tol);

  Trajectory traj;
  traj.params = params;
  if (sol.failure)
    traj.escape = DomainEscape{sol.failure->t, sol.failure->reason};

  double cos_c = std::nan("");
  try {
    cos_c = curve_expression(params, invariants::phase_invariants(params, mp0));
  } catch (const DomainError&) {
  }

  const double t_reached = sol.t_end;
  for (double t = 0.0;; t += dt_out) {
    if (t > t_reached) break;
    const ode::Vec y = t == 0.0 ? s0 : sol.eval(t);
    traj.samples.push_back(make_sample(params, t, y, cos_c));
    if (t + dt_out > t_reached && t < t_reached) {
      traj.samples.push_back(make_sample(params, t_reached, sol.y_end, cos_c));
      break;
    }
  }
  return traj;
}

std::optional<double> find_period(const SystemParams& params, const PhasePoint& initial,
                                  double t_max, double tol, double rel_tol) {
  const PhasePoint mp0 =
      initial.chart == Chart::ModifiedPolar ? initial : to_modified_polar(initial);
  const State s0{mp0.q1, mp0.q2, mp0.p1, mp0.p2};
  const auto sol = solve_flow(params, s0, t_max, rel_tol);
  if (sol.failure || sol.steps.empty()) return std::nullopt;
  const double t_reached = sol.t_end;

  // per-component amplitude for the scaled max metric
  std::array<double, 4> lo = s0, hi = s0;
  for (const auto& st : sol.steps) {
    for (int i = 0; i < 4; ++i) {
      lo[i] = std::min(lo[i], st.cont[0][i]);
      hi[i] = std::max(hi[i], st.cont[0][i]);
    }
  }
  std::array<double, 4> scale;
  for (int i = 0; i < 4; ++i) scale[i] = std::max(hi[i] - lo[i], 1e-12);

  auto dist = [&](double t) {
    const ode::Vec y = sol.eval(t);
    double d = 0.0;
    for (int i = 0; i < 4; ++i) d = std::max(d, std::abs(y[i] - s0[i]) / scale[i]);
    return d;
  };

  const int n_scan = 20000;
  const double dt = t_reached / n_scan;
  // skip the initial neighbourhood of the start point
  int i0 = 1;
  while (i0 < n_scan && dist(i0 * dt) < 0.05) ++i0;

  double prev = dist(i0 * dt);
  for (int i = i0 + 1; i <= n_scan; ++i) {
    const double d = dist(i * dt);
    if (d > prev || i == n_scan) {
      if (prev < 0.05) {
        // local minimum near (i-1)*dt: refine by golden-section search
        double a = std::max((i - 2) * dt, i0 * dt * 0.5), b = std::min(i * dt, t_reached);
        const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
        double c = b - gr * (b - a), dgs = a + gr * (b - a);
        double fc = dist(c), fd = dist(dgs);
        for (int it = 0; it < 200 && (b - a) > 1e-14 * t_reached; ++it) {
          if (fc < fd) {
            b = dgs; dgs = c; fd = fc;
            c = b - gr * (b - a); fc = dist(c);
          } else {
            a = c; c = dgs; fc = fd;
            dgs = a + gr * (b - a); fd = dist(dgs);
          }
        }
        const double t_star = 0.5 * (a + b);
        if (dist(t_star) < tol) return t_star;
      }
    }
    prev = d;
  }
  return std::nullopt;
}

OscillatorSample oscillator_trajectory(double a, double b, double omega, double t) {
  if (!(omega > 0.0)) throw std::invalid_argument("oscillator_trajectory: omega must be positive");
  OscillatorSample s;
  s.t = t;
  const double c = std::cos(2.0 * omega * t), sn = std::sin(2.0 * omega * t);
  s.u = a * sn;
  s.v = b * c;
  s.pu = omega * a * c;
  // p_v = -v'/2 under the (+,-) kinetic signature, so +b w sin (this keeps
  // sigma p_sigma = w a b / 2 constant along the orbit)
  s.pv = b * omega * sn;
  s.E = omega * omega * (a * a - b * b);
  s.A = omega * omega * a * a * b * b;
  if (s.u == s.v) {
    s.rho = s.sigma = s.p_rho = s.p_sigma = std::nan("");
  } else {
    const auto mp = to_modified_polar(PhasePoint::cartesian(s.u, s.v, s.pu, s.pv));
    s.rho = mp.q1;
    s.sigma = mp.q2;
    s.p_rho = mp.p1;
    s.p_sigma = mp.p2;
  }
  return s;
}

PhasePoint initial_state(const SystemParams& params, const CurveConstants& consts) {
  const double w = params.omega;
  const double rho = rho_closed_form(consts, w, 0.0);
  const double radial = -w * w * rho * rho + consts.E * rho + consts.A;
  const double prho = std::copysign(std::sqrt(std::max(radial, 0.0)) / (2.0 * rho),
                                    -std::sin(4.0 * w * consts.delta1));
  const double Z = (2.0 * consts.A / rho + consts.E) / std::sqrt(consts.D1);
  const double Zc = std::clamp(Z, -1.0, 1.0);
  const double W = std::sin(consts.gamma_k - params.kval() * std::asin(Zc));
  const double sig_mk = (W * std::sqrt(consts.D2) - params.beta) / (2.0 * consts.A);
  const double sigma = std::exp(-std::log(sig_mk) / params.kval());
  const double sk = sigma_pow_k(params, sigma);
  const double angular = consts.A + params.alpha * sk * sk + params.beta * sk;
  const double psigma = std::sqrt(std::max(angular, 0.0)) / (2.0 * sigma);
  return PhasePoint::modified_polar(rho, sigma, prho, psigma);
}

} // namespace e11::classical
