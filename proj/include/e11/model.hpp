#ifndef E11_MODEL_HPP
#define E11_MODEL_HPP

#include <functional>
#include <stdexcept>
#include <string>

namespace e11 {

// Rational exponent k = p/q > 0, stored coprime.
struct RationalK {
  int p = 1;
  int q = 1;

  RationalK() = default;
  RationalK(int p_, int q_);

  double value() const { return static_cast<double>(p) / q; }

  // Parses "3/2" or a bare integer "2". Decimal input is rejected so the
  // Chebyshev degrees p, q stay exact.
  static RationalK parse(const std::string& text);
};

struct SystemParams {
  RationalK k;
  double alpha = 0.0;
  double beta = 0.0;
  double omega = 1.0;

  double kval() const { return k.value(); }
  // alpha < 0, beta > 0, omega > 0: the regime admitting bounded orbits and
  // bound states.
  bool bounded_regime() const { return alpha < 0.0 && beta > 0.0 && omega > 0.0; }
};

enum class Chart { Cartesian, ModifiedPolar };

// Phase-space point in a tagged chart: (u, v, p_u, p_v) or
// (rho, sigma, p_rho, p_sigma).
struct PhasePoint {
  Chart chart = Chart::ModifiedPolar;
  double q1 = 0.0;
  double q2 = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;

  static PhasePoint cartesian(double u, double v, double pu, double pv) {
    return {Chart::Cartesian, u, v, pu, pv};
  }
  static PhasePoint modified_polar(double rho, double sigma, double prho, double psigma) {
    return {Chart::ModifiedPolar, rho, sigma, prho, psigma};
  }
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Chart transforms on rho = u^2 - v^2, sigma = (u+v)/(u-v); momenta map
// canonically. to_modified_polar requires u != v, to_cartesian requires
// rho, sigma > 0 (principal sheet).
PhasePoint to_modified_polar(const PhasePoint& cart);
PhasePoint to_cartesian(const PhasePoint& polar);

// H = 4 rho p_rho^2 - 4 (sigma^2/rho) p_sigma^2 + omega^2 rho
//     + (alpha sigma^{2k} + beta sigma^k) / rho,
// evaluated in either chart (chart-invariant).
double hamiltonian(const SystemParams& params, const PhasePoint& point);

// sigma^k on the principal sheet sigma > 0 (exp(k ln sigma)).
double sigma_pow_k(const SystemParams& params, double sigma);

// Coupling constant metamorphosis: deformed oscillator at energy E maps to
// the deformed Coulomb system with strength K = -E/2, couplings scaled by
// 1/4, under rho = r^2/2, phi = 2 theta.
struct CcmResult {
  double K;
  double alpha;
  double beta;
  // substitution record
  const char* radial_substitution = "rho = r^2/2";
  const char* angular_substitution = "phi = 2*theta";
};
CcmResult ccm_map(const SystemParams& params, double E);

// A separable Hamiltonian H = p1^2 + f1(q1) + psi(q1) (p2^2 + f2(q2)),
// psi either 1 (Cartesian) or 1/q1^2 (polar).
enum class PsiKind { One, InverseSquare };

struct SeparableSpec {
  std::function<double(double)> f1;
  std::function<double(double)> f2;
  PsiKind psi = PsiKind::One;

  double psi_at(double q1) const {
    return psi == PsiKind::One ? 1.0 : 1.0 / (q1 * q1);
  }
  double hamiltonian(double q1, double q2, double p1, double p2) const {
    return p1 * p1 + f1(q1) + psi_at(q1) * (p2 * p2 + f2(q2));
  }
};

// Parameter embedding: X -> k^2 X followed by q2 -> k q2, p2 -> p2/k keeps
// the family separable with second potential q2 -> k^2 f2(k q2).
SeparableSpec embed_parameter(const SeparableSpec& spec, double k);

} // namespace e11

#endif
