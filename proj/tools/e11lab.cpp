// e11lab: trajectories, spectra and verification suites for the deformed
// oscillator family on the pseudo-Euclidean plane.
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "e11/classical.hpp"
#include "e11/invariants.hpp"
#include "e11/model.hpp"
#include "e11/quantum.hpp"
#include "e11/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitRegime = 2;
constexpr int kExitDomainEscape = 3;
constexpr int kExitUsage = 64;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Temp-then-rename so readers never observe a partial file.
void atomic_write(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << content;
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, target);
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-")
    std::cout << content;
  else
    atomic_write(path, content);
}

struct Preset {
  const char* name;
  int p, q;
  double alpha, beta, omega, E, A, delta2;
};

const Preset kPresets[] = {
    {"fig1-k1", 1, 1, -2.0, 6.0, 3.0, 20.0, -1.0, std::numbers::pi / 32.0},
    {"fig1-k2", 2, 1, -2.0, 6.0, 3.0, 20.0, -1.0, std::numbers::pi / 32.0},
    {"fig1-k3", 3, 1, -2.0, 6.0, 3.0, 20.0, -1.0, std::numbers::pi / 32.0},
    {"fig2-k13", 1, 3, -1.0, 3.0, 4.0, 20.0, -1.5, std::numbers::pi / 4.0},
    {"fig2-k12", 1, 2, -1.0, 3.0, 4.0, 20.0, -1.5, std::numbers::pi / 6.0},
    {"fig2-k32", 3, 2, -1.0, 3.0, 4.0, 20.0, -1.5, std::numbers::pi / 12.0},
};

std::string trajectory_csv(const e11::classical::Trajectory& traj) {
  std::ostringstream csv;
  csv << "t,u,v,rho,sigma,p_rho,p_sigma,H,A_phase,L,curve_residual\n";
  for (const auto& s : traj.samples) {
    const auto cart = e11::to_cartesian(s.point);
    csv << fmt(s.t) << ',' << fmt(cart.q1) << ',' << fmt(cart.q2) << ','
        << fmt(s.point.q1) << ',' << fmt(s.point.q2) << ',' << fmt(s.point.p1) << ','
        << fmt(s.point.p2) << ',' << fmt(s.H) << ',' << fmt(s.A_phase) << ','
        << fmt(s.L) << ',' << fmt(s.curve_residual) << '\n';
  }
  return csv.str();
}

std::string trajectory_svg(const e11::classical::Trajectory& traj) {
  double ulo = 1e300, uhi = -1e300, vlo = 1e300, vhi = -1e300;
  std::vector<std::pair<double, double>> uv;
  for (const auto& s : traj.samples) {
    const auto cart = e11::to_cartesian(s.point);
    uv.emplace_back(cart.q1, cart.q2);
    ulo = std::min(ulo, cart.q1);
    uhi = std::max(uhi, cart.q1);
    vlo = std::min(vlo, cart.q2);
    vhi = std::max(vhi, cart.q2);
  }
  const double w = 640.0, h = 640.0, margin = 20.0;
  const double su = (w - 2.0 * margin) / std::max(uhi - ulo, 1e-12);
  const double sv = (h - 2.0 * margin) / std::max(vhi - vlo, 1e-12);
  const double sc = std::min(su, sv);
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
  for (const auto& [u, v] : uv) {
    svg << margin + (u - ulo) * sc << ',' << h - margin - (v - vlo) * sc << ' ';
  }
  svg << "\"/>\n</svg>\n";
  return svg.str();
}

struct TrajectoryConfig {
  std::string k_text = "1";
  double alpha = -2.0, beta = 6.0, omega = 3.0;
  double E = 20.0, A = -1.0, delta1 = 0.0, delta2 = 0.0;
  double t_max = 2.0, dt_out = 0.001, rel_tol = 1e-10;
  std::string out, svg, preset;
};

int cmd_trajectory(TrajectoryConfig cfg) {
  if (!cfg.preset.empty()) {
    const Preset* found = nullptr;
    for (const auto& p : kPresets)
      if (cfg.preset == p.name) found = &p;
    if (!found) {
      std::cerr << "unknown preset: " << cfg.preset << '\n';
      return kExitUsage;
    }
    cfg.k_text = std::to_string(found->p) + "/" + std::to_string(found->q);
    cfg.alpha = found->alpha;
    cfg.beta = found->beta;
    cfg.omega = found->omega;
    cfg.E = found->E;
    cfg.A = found->A;
    cfg.delta2 = found->delta2;
  }
  e11::SystemParams params;
  try {
    params.k = e11::RationalK::parse(cfg.k_text);
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }
  params.alpha = cfg.alpha;
  params.beta = cfg.beta;
  params.omega = cfg.omega;

  try {
    e11::classical::require_bounded_regime(params, cfg.E, cfg.A);
  } catch (const e11::DomainError& e) {
    std::cerr << "regime violation: " << e.what() << '\n';
    return kExitRegime;
  }

  const auto consts =
      e11::classical::curve_constants(params, cfg.E, cfg.A, cfg.delta1, cfg.delta2);
  const auto p0 = e11::classical::initial_state(params, consts);
  const auto traj = e11::classical::integrate(params, p0, cfg.t_max, cfg.rel_tol, cfg.dt_out);

  emit(cfg.out, trajectory_csv(traj));
  if (!cfg.svg.empty()) atomic_write(cfg.svg, trajectory_svg(traj));

  if (traj.escape) {
    std::cerr << "domain escape at t = " << fmt(traj.escape->t) << ": "
              << traj.escape->reason << '\n';
    return kExitDomainEscape;
  }
  return kExitOk;
}

struct SpectrumConfig {
  std::string k_text = "1";
  double alpha = -1.0, beta = 7.0, omega = 1.0;
  int m_max = 3;
  std::string out;
};

int cmd_spectrum(const SpectrumConfig& cfg) {
  e11::SystemParams params;
  try {
    params.k = e11::RationalK::parse(cfg.k_text);
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }
  params.alpha = cfg.alpha;
  params.beta = cfg.beta;
  params.omega = cfg.omega;

  e11::quantum::SpectrumData spec;
  try {
    spec = e11::quantum::spectrum(params, cfg.m_max);
  } catch (const e11::DomainError& e) {
    std::cerr << "no spectrum: " << e.what() << '\n';
    return kExitRegime;
  }

  // annotate degenerate partners: E_{m,n} = E_{m+p, n+q}
  const int p = params.k.p, q = params.k.q;
  std::ostringstream csv;
  csv << "n,m,A_n,sqrt_minus_A_n,E_mn,degenerate_with\n";
  for (const auto& lv : spec.levels) {
    csv << lv.n << ',' << lv.m << ',' << fmt(lv.A_n) << ',' << fmt(lv.lambda) << ','
        << fmt(lv.E_mn) << ',';
    if (lv.n + q <= spec.N)
      csv << "\"(m=" << lv.m + p << " n=" << lv.n + q << ")\"";
    else if (lv.n - q >= 0 && lv.m - p >= 0)
      csv << "\"(m=" << lv.m - p << " n=" << lv.n - q << ")\"";
    csv << '\n';
  }
  emit(cfg.out, csv.str());
  return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& json_path) {
  std::vector<e11::verify::SuiteResult> results;
  try {
    results = e11::verify::run(suite, seed);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }
  nlohmann::json report = nlohmann::json::array();
  bool all_pass = true;
  for (const auto& r : results) {
    report.push_back({{"suite", r.suite},
                      {"cases", r.cases},
                      {"max_error", r.max_error},
                      {"pass", r.pass}});
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.suite << "  cases=" << r.cases
              << "  max_error=" << fmt(r.max_error) << '\n';
    all_pass = all_pass && r.pass;
  }
  if (!json_path.empty()) atomic_write(json_path, report.dump(2) + "\n");
  return all_pass ? kExitOk : kExitVerifyFail;
}

struct OscillatorConfig {
  double a = 2.0, b = 1.0, omega = 1.0;
  double t_max = 3.2, dt_out = 0.01;
  std::string out;
};

int cmd_oscillator(const OscillatorConfig& cfg) {
  if (!(cfg.omega > 0.0)) {
    std::cerr << "regime violation: oscillator requires omega > 0\n";
    return kExitRegime;
  }
  std::ostringstream csv;
  csv << "t,u,v,p_u,p_v,rho,sigma,p_rho,p_sigma,E,A\n";
  for (double t = 0.0; t <= cfg.t_max + 1e-15; t += cfg.dt_out) {
    const auto s = e11::classical::oscillator_trajectory(cfg.a, cfg.b, cfg.omega, t);
    csv << fmt(s.t) << ',' << fmt(s.u) << ',' << fmt(s.v) << ',' << fmt(s.pu) << ','
        << fmt(s.pv) << ',' << fmt(s.rho) << ',' << fmt(s.sigma) << ',' << fmt(s.p_rho)
        << ',' << fmt(s.p_sigma) << ',' << fmt(s.E) << ',' << fmt(s.A) << '\n';
  }
  emit(cfg.out, csv.str());
  return kExitOk;
}

struct CurveConfig {
  std::string k_text = "1";
  double alpha = -2.0, beta = 6.0, omega = 3.0;
  double E = 20.0, A = -1.0, delta2 = 0.0;
  int grid = 64;
  std::string out;
};

// Residual of the implicit closure law on a (rho, sigma) product grid inside
// the classically allowed band, momenta taken on the positive sheet.
int cmd_curve(const CurveConfig& cfg) {
  e11::SystemParams params;
  try {
    params.k = e11::RationalK::parse(cfg.k_text);
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }
  params.alpha = cfg.alpha;
  params.beta = cfg.beta;
  params.omega = cfg.omega;
  try {
    e11::classical::require_bounded_regime(params, cfg.E, cfg.A);
  } catch (const e11::DomainError& e) {
    std::cerr << "regime violation: " << e.what() << '\n';
    return kExitRegime;
  }
  const auto consts = e11::classical::curve_constants(params, cfg.E, cfg.A, 0.0, cfg.delta2);
  std::ostringstream csv;
  csv << "rho,sigma,Z,W,residual_recurrence,residual_expanded\n";
  const double k = params.kval();
  for (int i = 1; i < cfg.grid; ++i) {
    const double rho =
        consts.rho1 + (consts.rho2 - consts.rho1) * i / static_cast<double>(cfg.grid);
    for (int j = 1; j < cfg.grid; ++j) {
      const double sig_inv_k = consts.sigma_lo + (consts.sigma_hi - consts.sigma_lo) * j /
                                                     static_cast<double>(cfg.grid);
      const double sigma = std::pow(sig_inv_k, -1.0 / k);
      const double sk = e11::sigma_pow_k(params, sigma);
      const double rad_r = cfg.E * rho + cfg.A - params.omega * params.omega * rho * rho;
      const double rad_s = cfg.A + params.alpha * sk * sk + params.beta * sk;
      const auto pt = e11::PhasePoint::modified_polar(
          rho, sigma, std::sqrt(std::max(rad_r, 0.0)) / (2.0 * rho),
          std::sqrt(std::max(rad_s, 0.0)) / (2.0 * sigma));
      const auto iv = e11::invariants::phase_invariants(params, pt);
      csv << fmt(rho) << ',' << fmt(sigma) << ',' << fmt(iv.Z) << ',' << fmt(iv.W) << ','
          << fmt(e11::classical::curve_residual(params, consts, iv.Z, iv.W, iv.sqrt_term))
          << ','
          << fmt(e11::classical::curve_residual_expanded(params, consts, iv.Z, iv.W,
                                                         iv.sqrt_term))
          << '\n';
    }
  }
  emit(cfg.out, csv.str());
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"deformed-oscillator laboratory on the pseudo-Euclidean plane"};
  app.require_subcommand(1);

  TrajectoryConfig tc;
  auto* traj = app.add_subcommand("trajectory", "integrate one bounded orbit to CSV/SVG");
  traj->add_option("--k", tc.k_text, "rational exponent p/q or integer");
  traj->add_option("--alpha", tc.alpha);
  traj->add_option("--beta", tc.beta);
  traj->add_option("--omega", tc.omega);
  traj->add_option("--E", tc.E, "energy");
  traj->add_option("--A", tc.A, "separation constant");
  traj->add_option("--delta1", tc.delta1, "radial phase (radians)");
  traj->add_option("--delta2", tc.delta2, "angular phase (radians)");
  traj->add_option("--t-max", tc.t_max)->check(CLI::PositiveNumber);
  traj->add_option("--dt-out", tc.dt_out)->check(CLI::PositiveNumber);
  traj->add_option("--rel-tol", tc.rel_tol);
  traj->add_option("--out", tc.out, "CSV path ('-' = stdout)");
  traj->add_option("--svg", tc.svg, "optional SVG polyline of (u, v)");
  traj->add_option("--preset", tc.preset, "fig1-k1 fig1-k2 fig1-k3 fig2-k13 fig2-k12 fig2-k32");

  SpectrumConfig sc;
  auto* spec = app.add_subcommand("spectrum", "bound-state table to CSV");
  spec->add_option("--k", sc.k_text);
  spec->add_option("--alpha", sc.alpha);
  spec->add_option("--beta", sc.beta);
  spec->add_option("--omega", sc.omega);
  spec->add_option("--m-max", sc.m_max)->check(CLI::NonNegativeNumber);
  spec->add_option("--out", sc.out);

  std::string vsuite = "all";
  std::uint64_t vseed = 42;
  std::string vjson;
  auto* ver = app.add_subcommand("verify", "run verification suites");
  ver->add_option("--suite", vsuite, "all or one of: specfun charts conservation curve period poisson quantum oscillator");
  ver->add_option("--seed", vseed);
  ver->add_option("--json", vjson, "JSON report path");

  OscillatorConfig oc;
  auto* osc = app.add_subcommand("oscillator", "closed-form harmonic oscillator samples");
  osc->add_option("--a", oc.a);
  osc->add_option("--b", oc.b);
  osc->add_option("--omega", oc.omega);
  osc->add_option("--t-max", oc.t_max)->check(CLI::PositiveNumber);
  osc->add_option("--dt-out", oc.dt_out)->check(CLI::PositiveNumber);
  osc->add_option("--out", oc.out);

  CurveConfig cc;
  auto* cur = app.add_subcommand("curve", "closure-law residual on a phase grid");
  cur->add_option("--k", cc.k_text);
  cur->add_option("--alpha", cc.alpha);
  cur->add_option("--beta", cc.beta);
  cur->add_option("--omega", cc.omega);
  cur->add_option("--E", cc.E);
  cur->add_option("--A", cc.A);
  cur->add_option("--delta2", cc.delta2);
  cur->add_option("--grid", cc.grid)->check(CLI::PositiveNumber);
  cur->add_option("--out", cc.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (traj->parsed()) return cmd_trajectory(tc);
    if (spec->parsed()) return cmd_spectrum(sc);
    if (ver->parsed()) return cmd_verify(vsuite, vseed, vjson);
    if (osc->parsed()) return cmd_oscillator(oc);
    if (cur->parsed()) return cmd_curve(cc);
  } catch (const e11::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitDomainEscape;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFail;
  }
  return kExitUsage;
}
