#ifndef E11_VERIFY_HPP
#define E11_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "e11/classical.hpp"
#include "e11/model.hpp"

namespace e11::verify {

struct SuiteResult {
  std::string suite;
  int cases = 0;
  double max_error = 0.0;
  bool pass = true;
};

// One preset orbit from the published trajectory plots.
struct FigureCase {
  std::string name;
  SystemParams params;
  double E = 0.0;
  double A = 0.0;
  double delta2 = 0.0;
};
const std::vector<FigureCase>& figure_cases();

// Random phase point inside the bounded region of the given system,
// with E drawn from [e_lo, e_hi].
PhasePoint random_bounded_point(const SystemParams& params, std::mt19937_64& rng,
                                double& E_out, double e_lo = 10.0, double e_hi = 30.0);

SuiteResult run_specfun(std::uint64_t seed);
SuiteResult run_charts(std::uint64_t seed);
SuiteResult run_conservation();
SuiteResult run_curve();
SuiteResult run_period();
SuiteResult run_poisson(std::uint64_t seed);
SuiteResult run_quantum(std::uint64_t seed);
SuiteResult run_oscillator(std::uint64_t seed);

// suite = one of the above names or "all"; throws std::invalid_argument on
// an unknown name.
std::vector<SuiteResult> run(const std::string& suite, std::uint64_t seed);
const std::vector<std::string>& suite_names();

} // namespace e11::verify

#endif
