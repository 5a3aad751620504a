#ifndef E11_QUANTUM_HPP
#define E11_QUANTUM_HPP

#include <vector>

#include "e11/model.hpp"

namespace e11::quantum {

struct QuantumLevel {
  int m = 0;
  int n = 0;
  double A_n = 0.0;
  double E_mn = 0.0;
  double lambda = 0.0; // sqrt(-A_n)
};

// Bound-state data: N is the largest n with sqrt(-A_n) > 0,
// B = beta/(2k sqrt(-alpha)) - 2N - 1 lies in (0, 2].
struct SpectrumData {
  int N = 0;
  double B = 0.0;
  double ratio = 0.0; // beta / (2 k sqrt(-alpha))
  std::vector<QuantumLevel> levels;

  double sqrt_minus_A(const SystemParams& params, int n) const;
  double energy(const SystemParams& params, int m, int n) const;
};

struct NoBoundStates : DomainError {
  using DomainError::DomainError;
};

// Closed-form spectrum for alpha < 0, beta > 0, omega > 0; levels for
// m <= m_max, n <= N. Throws NoBoundStates when beta/(2k sqrt(-alpha)) <= 1.
SpectrumData spectrum(const SystemParams& params, int m_max = 3);

// Energy via the explicit form 2w(2m - 2kn + 1 - k + beta/(2 sqrt(-alpha))).
double energy_explicit(const SystemParams& params, int m, int n);

// Radial factor e^{-xi/2} xi^{lambda/2} L_m^lambda(xi) for real lambda > 0;
// at physical levels lambda = sqrt(-A_n) and xi = omega rho.
double wavefunction_R(const SystemParams& params, int m, double lambda, double xi);

// Angular factor e^{-eta/2} eta^{B/2 + N - n} L_n^{B + 2(N-n)}(eta),
// eta = sqrt(-alpha) sigma^k / k.
double wavefunction_S(const SystemParams& params, const SpectrumData& spec, int n,
                      double eta);

// (H Psi - E Psi) / max(|Psi|, 1e-300) with all derivatives analytic.
double schrodinger_residual(const SystemParams& params, const SpectrumData& spec,
                            int m, int n, double rho, double sigma);
// Residual of the separated radial equation for R alone.
double radial_residual(const SystemParams& params, const SpectrumData& spec,
                       int m, int n, double rho);

// Overlap matrix G_{nn'} = int_0^inf S_n S_n' deta/eta by adaptive quadrature.
std::vector<std::vector<double>> gram_matrix_S(const SystemParams& params,
                                               const SpectrumData& spec);

// Relative difference between S_n(1/s) and the generalized-Bessel form
// c s^{(a-1)/2} e^{-1/(2s)} y_n(s, a, 1) with a = 2 - beta/(2k sqrt(-alpha))
// and c fixed by matching at s = 1.
double bessel_representation_check(const SystemParams& params, const SpectrumData& spec,
                                   int n, double s);
double bessel_parameter_a(const SystemParams& params);

// Functions of the form e^{-x/2} x^power sum_j coef[j] x^j. Closed under
// differentiation, which keeps ladder compositions exact.
struct ExpPoly {
  double power = 0.0;
  std::vector<double> coef;

  double eval(double x) const;
  ExpPoly deriv() const;
  ExpPoly scaled(double c) const;
  ExpPoly mul_x(int e) const; // multiply by x^e, e may be negative
  ExpPoly operator+(const ExpPoly& other) const;
};

// e^{-x/2} x^{a/2} L_n^a(x)
ExpPoly laguerre_mode(int n, double a);

enum class LadderKind {
  KPlusLambda,  // lowers m, raises lambda by 2
  KMinusLambda, // raises m, lowers lambda by 2
  JPlus,        // lowers n
  JMinus        // raises n
};

// First-order ladder operator [(1 +- lam) d/dx + c -+ lam(1 +- lam)/(2x)]
// applied to f; lam and the constant c are taken from the (m, n) level
// (c = E/(4w) for K, beta/(4k sqrt(-alpha)) for J).
ExpPoly ladder_apply(LadderKind kind, const SystemParams& params,
                     const SpectrumData& spec, int m, int n, const ExpPoly& f);
// Same operator with explicit lam (for mid-composition steps, where lam is
// no longer attached to an integer level).
ExpPoly ladder_step(bool plus_lambda, double lam, double c, const ExpPoly& f);

struct DegeneracyReport {
  int m = 0, n = 0;
  int m_partner = 0, n_partner = 0;
  bool energy_equal = false;
  double ratio_R = 0.0; // K^p R_{m,n} / R_{m+p, n+q}, pointwise constant
  double ratio_S = 0.0; // J^q S_n / S_{n+q}
  double ratio_variation_R = 0.0;
  double ratio_variation_S = 0.0;
};

// Checks E_{m,n} = E_{m+p,n+q} in closed form and that the p-fold K and
// q-fold J compositions land on scalar multiples of the partner
// wavefunctions (pointwise ratio sampled at >= 10 points).
DegeneracyReport degeneracy_map_check(const SystemParams& params, const SpectrumData& spec,
                                      int m, int n);

} // namespace e11::quantum

#endif
