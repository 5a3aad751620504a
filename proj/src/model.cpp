#include "e11/model.hpp"

#include <cmath>
#include <numeric>

namespace e11 {

RationalK::RationalK(int p_, int q_) : p(p_), q(q_) {
  if (p <= 0 || q <= 0) throw std::invalid_argument("RationalK: p, q must be positive");
  const int g = std::gcd(p, q);
  p /= g;
  q /= g;
}

RationalK RationalK::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      size_t pos = 0;
      const int p = std::stoi(text, &pos);
      if (pos != text.size()) throw std::invalid_argument("");
      return RationalK(p, 1);
    }
    size_t pos = 0;
    const int p = std::stoi(text.substr(0, slash), &pos);
    if (pos != slash) throw std::invalid_argument("");
    const int q = std::stoi(text.substr(slash + 1), &pos);
    if (pos != text.size() - slash - 1) throw std::invalid_argument("");
    return RationalK(p, q);
  } catch (const std::exception&) {
    throw std::invalid_argument("RationalK: expected 'p/q' or integer, got '" + text + "'");
  }
}

PhasePoint to_modified_polar(const PhasePoint& cart) {
  if (cart.chart != Chart::Cartesian)
    throw std::invalid_argument("to_modified_polar: expected Cartesian point");
  const double u = cart.q1, v = cart.q2, pu = cart.p1, pv = cart.p2;
  if (u == v) throw DomainError("to_modified_polar: chart singular on u = v");
  const double d = u - v;
  const double rho = u * u - v * v;
  const double sigma = (u + v) / d;
  // p_u = 2u p_rho - (2v/d^2) p_sigma, p_v = -2v p_rho + (2u/d^2) p_sigma,
  // solved for (p_rho, p_sigma).
  const double a11 = 2.0 * u, a12 = -2.0 * v / (d * d);
  const double a21 = -2.0 * v, a22 = 2.0 * u / (d * d);
  const double dd = a11 * a22 - a12 * a21;
  if (dd == 0.0) throw DomainError("to_modified_polar: u + v = 0, momentum map singular");
  const double p_rho = (pu * a22 - pv * a12) / dd;
  const double p_sigma = (a11 * pv - a21 * pu) / dd;
  return PhasePoint::modified_polar(rho, sigma, p_rho, p_sigma);
}

PhasePoint to_cartesian(const PhasePoint& polar) {
  if (polar.chart != Chart::ModifiedPolar)
    throw std::invalid_argument("to_cartesian: expected ModifiedPolar point");
  const double rho = polar.q1, sigma = polar.q2;
  if (rho * sigma <= 0.0)
    throw DomainError("to_cartesian: requires rho*sigma > 0 (principal sheet)");
  const double root = std::sqrt(rho / sigma);
  const double u = 0.5 * (sigma + 1.0) * root;
  const double v = 0.5 * (sigma - 1.0) * root;
  const double d = u - v;
  const double pu = 2.0 * u * polar.p1 - (2.0 * v / (d * d)) * polar.p2;
  const double pv = -2.0 * v * polar.p1 + (2.0 * u / (d * d)) * polar.p2;
  return PhasePoint::cartesian(u, v, pu, pv);
}

double sigma_pow_k(const SystemParams& params, double sigma) {
  if (sigma <= 0.0) throw DomainError("sigma^k: requires sigma > 0");
  return std::exp(params.kval() * std::log(sigma));
}

double hamiltonian(const SystemParams& params, const PhasePoint& point) {
  const PhasePoint mp = point.chart == Chart::ModifiedPolar ? point : to_modified_polar(point);
  const double rho = mp.q1, sigma = mp.q2, prho = mp.p1, psigma = mp.p2;
  if (rho == 0.0) throw DomainError("hamiltonian: rho = 0");
  double potential = params.omega * params.omega * rho;
  if (params.alpha != 0.0 || params.beta != 0.0) {
    const double sk = sigma_pow_k(params, sigma);
    potential += (params.alpha * sk * sk + params.beta * sk) / rho;
  }
  return 4.0 * rho * prho * prho - 4.0 * (sigma * sigma / rho) * psigma * psigma + potential;
}

CcmResult ccm_map(const SystemParams& params, double E) {
  return CcmResult{-E / 2.0, params.alpha / 4.0, params.beta / 4.0};
}

SeparableSpec embed_parameter(const SeparableSpec& spec, double k) {
  if (k <= 0.0) throw std::invalid_argument("embed_parameter: k must be positive");
  SeparableSpec out = spec;
  auto f2 = spec.f2;
  out.f2 = [f2, k](double q2) { return k * k * f2(k * q2); };
  return out;
}

} // namespace e11
