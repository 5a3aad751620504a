#include "e11/quantum.hpp"

#include <cmath>

#include "e11/quadrature.hpp"
#include "e11/specfun.hpp"

namespace e11::quantum {

using specfun::laguerre;

namespace {

double coupling_ratio(const SystemParams& params) {
  if (!(params.alpha < 0.0 && params.beta > 0.0))
    throw DomainError("spectrum: requires alpha < 0 and beta > 0");
  return params.beta / (2.0 * params.kval() * std::sqrt(-params.alpha));
}

} // namespace

double SpectrumData::sqrt_minus_A(const SystemParams& params, int n) const {
  return params.k.p * (B + 2.0 * (N - n)) / params.k.q;
}

double SpectrumData::energy(const SystemParams& params, int m, int n) const {
  // q(2m+1) + pB + 2p(N-n) is invariant under (m,n) -> (m+p, n+q) term by
  // term, so degenerate energies come out bitwise equal.
  const double p = params.k.p, q = params.k.q;
  return 2.0 * params.omega * ((q * (2.0 * m + 1.0) + p * B + 2.0 * p * (N - n)) / q);
}

double energy_explicit(const SystemParams& params, int m, int n) {
  const double k = params.kval();
  return 2.0 * params.omega *
         (2.0 * m - 2.0 * k * n + 1.0 - k + params.beta / (2.0 * std::sqrt(-params.alpha)));
}

SpectrumData spectrum(const SystemParams& params, int m_max) {
  if (!(params.omega > 0.0)) throw DomainError("spectrum: requires omega > 0");
  const double ratio = coupling_ratio(params);
  // bound states need sqrt(-A_n) = k(ratio - 2n - 1) > 0 for some n >= 0
  if (ratio <= 1.0)
    throw NoBoundStates("no bound states: beta/(2k sqrt(-alpha)) must exceed 1");
  int N = static_cast<int>(std::floor((ratio - 1.0) / 2.0));
  double B = ratio - 2.0 * N - 1.0;
  if (B == 0.0) { // boundary level has sqrt(-A) = 0; drop it
    N -= 1;
    B = 2.0;
  }
  SpectrumData spec;
  spec.N = N;
  spec.B = B;
  spec.ratio = ratio;
  for (int n = 0; n <= N; ++n) {
    const double lambda = spec.sqrt_minus_A(params, n);
    for (int m = 0; m <= m_max; ++m) {
      QuantumLevel lvl;
      lvl.m = m;
      lvl.n = n;
      lvl.lambda = lambda;
      lvl.A_n = -lambda * lambda;
      lvl.E_mn = spec.energy(params, m, n);
      spec.levels.push_back(lvl);
    }
  }
  return spec;
}

double wavefunction_R(const SystemParams&, int m, double lambda, double xi) {
  if (!(xi > 0.0)) throw DomainError("wavefunction_R: requires xi > 0");
  return std::exp(-xi / 2.0) * std::pow(xi, lambda / 2.0) * laguerre(m, lambda, xi);
}

double wavefunction_S(const SystemParams&, const SpectrumData& spec, int n, double eta) {
  if (n < 0 || n > spec.N) throw std::out_of_range("wavefunction_S: n outside [0, N]");
  if (!(eta > 0.0)) throw DomainError("wavefunction_S: requires eta > 0");
  const double a = spec.B + 2.0 * (spec.N - n);
  return std::exp(-eta / 2.0) * std::pow(eta, a / 2.0) * laguerre(n, a, eta);
}

// ---------------------------------------------------------------------------
// ExpPoly

double ExpPoly::eval(double x) const {
  double poly = 0.0;
  for (std::size_t j = coef.size(); j-- > 0;) poly = poly * x + coef[j];
  return std::exp(-x / 2.0) * std::pow(x, power) * poly;
}

ExpPoly ExpPoly::deriv() const {
  // d/dx e^{-x/2} x^p P = e^{-x/2} x^{p-1} (p P + x P' - x P / 2)
  ExpPoly out;
  out.power = power - 1.0;
  out.coef.assign(coef.size() + 1, 0.0);
  for (std::size_t j = 0; j < coef.size(); ++j) {
    out.coef[j] += (power + j) * coef[j];
    out.coef[j + 1] -= 0.5 * coef[j];
  }
  return out;
}

ExpPoly ExpPoly::scaled(double c) const {
  ExpPoly out = *this;
  for (double& v : out.coef) v *= c;
  return out;
}

ExpPoly ExpPoly::mul_x(int e) const {
  ExpPoly out = *this;
  out.power += e;
  return out;
}

ExpPoly ExpPoly::operator+(const ExpPoly& other) const {
  // powers must differ by an integer; align to the smaller one
  const double diff = other.power - power;
  const long shift = std::lround(diff);
  if (std::abs(diff - shift) > 1e-9)
    throw std::invalid_argument("ExpPoly: powers differ by a non-integer");
  const ExpPoly& lo = shift >= 0 ? *this : other;
  const ExpPoly& hi = shift >= 0 ? other : *this;
  const std::size_t off = static_cast<std::size_t>(std::abs(shift));
  ExpPoly out;
  out.power = lo.power;
  out.coef.assign(std::max(lo.coef.size(), hi.coef.size() + off), 0.0);
  for (std::size_t j = 0; j < lo.coef.size(); ++j) out.coef[j] += lo.coef[j];
  for (std::size_t j = 0; j < hi.coef.size(); ++j) out.coef[j + off] += hi.coef[j];
  return out;
}

ExpPoly laguerre_mode(int n, double a) {
  ExpPoly out;
  out.power = a / 2.0;
  out.coef.assign(std::max(n + 1, 1), 0.0);
  if (n < 0) return out; // L_{-1} == 0
  // L_n^a = sum_j c_j x^j with c_j = (-1)^j/j! C(n+a, n-j); the product form
  // stays finite when a is a negative integer (mid-ladder values)
  double fact = 1.0;
  for (int j = 0; j <= n; ++j) {
    if (j > 0) fact *= j;
    double c = 1.0;
    for (int i = j + 1; i <= n; ++i) c *= (a + i) / (i - j);
    out.coef[j] = (j % 2 == 0 ? c : -c) / fact;
  }
  return out;
}

ExpPoly ladder_step(bool plus_lambda, double lam, double c, const ExpPoly& f) {
  const double s = plus_lambda ? 1.0 : -1.0;
  ExpPoly out = f.deriv().scaled(1.0 + s * lam);
  out = out + f.scaled(c);
  out = out + f.mul_x(-1).scaled(-s * lam * (1.0 + s * lam) / 2.0);
  return out;
}

ExpPoly ladder_apply(LadderKind kind, const SystemParams& params,
                     const SpectrumData& spec, int m, int n, const ExpPoly& f) {
  const double lam = spec.sqrt_minus_A(params, n);
  switch (kind) {
    case LadderKind::KPlusLambda:
      return ladder_step(true, lam, spec.energy(params, m, n) / (4.0 * params.omega), f);
    case LadderKind::KMinusLambda:
      return ladder_step(false, lam, spec.energy(params, m, n) / (4.0 * params.omega), f);
    case LadderKind::JPlus:
      return ladder_step(true, lam / params.kval(),
                         params.beta / (4.0 * params.kval() * std::sqrt(-params.alpha)), f);
    default:
      return ladder_step(false, lam / params.kval(),
                         params.beta / (4.0 * params.kval() * std::sqrt(-params.alpha)), f);
  }
}

// ---------------------------------------------------------------------------
// Schroedinger residuals (analytic derivatives throughout)

double radial_residual(const SystemParams& params, const SpectrumData& spec,
                       int m, int n, double rho) {
  if (!(rho > 0.0)) throw DomainError("radial_residual: requires rho > 0");
  const double w = params.omega;
  const double lam = spec.sqrt_minus_A(params, n);
  const double A = -lam * lam;
  const double E = spec.energy(params, m, n);
  const ExpPoly R = laguerre_mode(m, lam);
  const ExpPoly R1 = R.deriv();
  const ExpPoly R2 = R1.deriv();
  const double xi = w * rho;
  // [4 rho d^2/drho^2 + 4 d/drho - w^2 rho + A/rho + E] R(xi(rho))
  const double val = 4.0 * rho * w * w * R2.eval(xi) + 4.0 * w * R1.eval(xi) +
                     (-w * w * rho + A / rho + E) * R.eval(xi);
  return val / std::max(std::abs(R.eval(xi)), 1e-300);
}

double schrodinger_residual(const SystemParams& params, const SpectrumData& spec,
                            int m, int n, double rho, double sigma) {
  if (!(rho > 0.0 && sigma > 0.0))
    throw DomainError("schrodinger_residual: requires rho, sigma > 0");
  const double w = params.omega;
  const double k = params.kval();
  const double lam = spec.sqrt_minus_A(params, n);
  const double mu = lam / k;
  const double E = spec.energy(params, m, n);

  const ExpPoly R = laguerre_mode(m, lam);
  const ExpPoly S = laguerre_mode(n, mu);
  const ExpPoly R1 = R.deriv(), R2 = R1.deriv();
  const ExpPoly S1 = S.deriv(), S2 = S1.deriv();

  const double xi = w * rho;
  const double sk = sigma_pow_k(params, sigma);
  const double eta = std::sqrt(-params.alpha) * sk / k;

  const double r = R.eval(xi), r1 = w * R1.eval(xi), r2 = w * w * R2.eval(xi);
  const double s0 = S.eval(eta);
  // d eta/d sigma = k eta / sigma
  const double de = k * eta / sigma;
  const double s1 = S1.eval(eta) * de;
  const double s2 = S2.eval(eta) * de * de + S1.eval(eta) * k * (k - 1.0) * eta / (sigma * sigma);

  const double psi = r * s0;
  const double pot = w * w * rho + (params.alpha * sk * sk + params.beta * sk) / rho;
  const double h_psi = -4.0 * rho * r2 * s0 - 4.0 * r1 * s0 +
                       (4.0 * sigma * sigma / rho) * r * s2 + (4.0 * sigma / rho) * r * s1 +
                       pot * psi;
  return (h_psi - E * psi) / std::max(std::abs(psi), 1e-300);
}

// ---------------------------------------------------------------------------

std::vector<std::vector<double>> gram_matrix_S(const SystemParams& params,
                                               const SpectrumData& spec) {
  const int size = spec.N + 1;
  std::vector<std::vector<double>> g(size, std::vector<double>(size, 0.0));
  for (int n = 0; n < size; ++n) {
    for (int np = n; np < size; ++np) {
      // log substitution eta = e^y removes the eta^{B-1} endpoint
      // singularity; both tails then decay exponentially
      auto f = [&](double y) {
        if (std::abs(y) > 700.0) return 0.0; // exp would over/underflow; tail is 0
        const double eta = std::exp(y);
        return wavefunction_S(params, spec, n, eta) * wavefunction_S(params, spec, np, eta);
      };
      const auto right = quadrature::integrate_semi_infinite(f);
      const auto left = quadrature::integrate_semi_infinite([&](double y) { return f(-y); });
      if (!right.converged || !left.converged)
        throw std::runtime_error("gram_matrix_S: quadrature failed, error estimate " +
                                 std::to_string(right.error + left.error));
      g[n][np] = g[np][n] = right.value + left.value;
    }
  }
  return g;
}

double bessel_parameter_a(const SystemParams& params) {
  // alpha = -beta^2 / (4 k^2 (a-2)^2) on the a < 2 branch
  const double a = 2.0 - coupling_ratio(params);
  if (a == 2.0) throw DomainError("bessel_parameter_a: a = 2 is excluded");
  return a;
}

double bessel_representation_check(const SystemParams& params, const SpectrumData& spec,
                                   int n, double s) {
  if (!(s > 0.0)) throw DomainError("bessel_representation_check: requires s > 0");
  const double a = bessel_parameter_a(params);
  auto rhs = [&](double sv) {
    return std::pow(sv, (a - 1.0) / 2.0) * std::exp(-1.0 / (2.0 * sv)) *
           specfun::bessel_poly(n, a, 1.0, sv);
  };
  const double s_ref = 1.0;
  const double lhs_ref = wavefunction_S(params, spec, n, 1.0 / s_ref);
  const double rhs_ref = rhs(s_ref);
  if (rhs_ref == 0.0)
    throw std::runtime_error("bessel_representation_check: reference point degenerate");
  const double c = lhs_ref / rhs_ref;
  const double lhs = wavefunction_S(params, spec, n, 1.0 / s);
  return std::abs(lhs - c * rhs(s)) / std::max(std::abs(lhs), 1e-300);
}

DegeneracyReport degeneracy_map_check(const SystemParams& params, const SpectrumData& spec,
                                      int m, int n) {
  const int p = params.k.p, q = params.k.q;
  DegeneracyReport rep;
  rep.m = m;
  rep.n = n;
  rep.m_partner = m + p;
  rep.n_partner = n + q;
  if (n < 0 || n > spec.N || rep.n_partner > spec.N || m < 0)
    throw std::out_of_range("degeneracy_map_check: partner level out of range");

  const double e0 = spec.energy(params, m, n);
  const double e1 = spec.energy(params, rep.m_partner, rep.n_partner);
  rep.energy_equal = e0 == e1;

  const double e_over = e0 / (4.0 * params.omega);
  const double lam = spec.sqrt_minus_A(params, n);
  const double mu = lam / params.kval();

  // p-fold K with -lambda raises m by p; each step lowers lambda by 2
  ExpPoly r = laguerre_mode(m, lam);
  for (int i = 0; i < p; ++i) r = ladder_step(false, lam - 2.0 * i, e_over, r);
  const ExpPoly r_target = laguerre_mode(rep.m_partner, spec.sqrt_minus_A(params, rep.n_partner));

  // q-fold J with -mu raises n by q
  const double j_const = params.beta / (4.0 * params.kval() * std::sqrt(-params.alpha));
  ExpPoly sfun = laguerre_mode(n, mu);
  for (int i = 0; i < q; ++i) sfun = ladder_step(false, mu - 2.0 * i, j_const, sfun);
  const ExpPoly s_target =
      laguerre_mode(rep.n_partner, spec.sqrt_minus_A(params, rep.n_partner) / params.kval());

  auto ratio_stats = [](const ExpPoly& got, const ExpPoly& want, double& ratio,
                        double& variation) {
    double lo = 0.0, hi = 0.0, sum = 0.0;
    int count = 0;
    for (int i = 0; i < 12; ++i) {
      const double x = 0.3 + 0.9 * i;
      const double w = want.eval(x);
      if (std::abs(w) < 1e-12) continue; // skip nodes of the target
      const double rr = got.eval(x) / w;
      if (count == 0) { lo = hi = rr; }
      lo = std::min(lo, rr);
      hi = std::max(hi, rr);
      sum += rr;
      ++count;
    }
    ratio = sum / count;
    variation = std::abs(hi - lo) / std::max(std::abs(ratio), 1e-300);
  };
  ratio_stats(r, r_target, rep.ratio_R, rep.ratio_variation_R);
  ratio_stats(sfun, s_target, rep.ratio_S, rep.ratio_variation_S);
  return rep;
}

} // namespace e11::quantum
