#ifndef E11_ODE_HPP
#define E11_ODE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace e11::ode {

// Dormand-Prince 5(4) with Hairer's dense output. State dimension is fixed
// at four (one orbit in a two-dimensional chart).

using Vec = std::array<double, 4>;

inline Vec axpy(double a, const Vec& x, const Vec& y) {
  return {a * x[0] + y[0], a * x[1] + y[1], a * x[2] + y[2], a * x[3] + y[3]};
}

struct DenseStep {
  double t = 0.0;  // left endpoint
  double h = 0.0;
  std::array<Vec, 5> cont{};

  Vec eval(double s) const {
    const double th = (s - t) / h;
    const double th1 = 1.0 - th;
    Vec y;
    for (int i = 0; i < 4; ++i)
      y[i] = cont[0][i] +
             th * (cont[1][i] + th1 * (cont[2][i] + th * (cont[3][i] + th1 * cont[4][i])));
    return y;
  }
};

struct StepFailure {
  double t = 0.0;
  std::string reason;
};

struct Solution {
  std::vector<DenseStep> steps;
  Vec y_end{};
  double t_end = 0.0;
  std::optional<StepFailure> failure;

  Vec eval(double s) const {
    // steps are time-ordered; binary search for the covering step
    std::size_t lo = 0, hi = steps.size() - 1;
    while (lo < hi) {
      const std::size_t mid = (lo + hi + 1) / 2;
      if (steps[mid].t <= s) lo = mid; else hi = mid - 1;
    }
    return steps[lo].eval(s);
  }
};

// rhs(t, y) -> dy/dt; valid(y) guards the chart domain. A step landing
// outside the domain is retried with a smaller h; underflow of h is
// reported as a failure at the current time.
template <class Rhs, class Valid>
Solution solve(Rhs&& rhs, Valid&& valid, Vec y0, double t0, double t1,
               double rel_tol, double abs_tol) {
  constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                   a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                   a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                   a75 = -2187.0 / 6784, a76 = 11.0 / 84;
  constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                   e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
  constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                   d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                   d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

  Solution sol;
  double t = t0;
  Vec y = y0;
  Vec k1 = rhs(t, y);
  double h = 1e-4 * std::max(1.0, std::abs(t1 - t0));

  auto finite = [](const Vec& v) {
    return std::isfinite(v[0]) && std::isfinite(v[1]) && std::isfinite(v[2]) &&
           std::isfinite(v[3]);
  };

  while (t < t1) {
    const double hmin = 1e-14 * std::max(1.0, std::abs(t));
    if (h < hmin) {
      sol.failure = StepFailure{t, "step-size underflow (domain boundary)"};
      break;
    }
    if (t + h > t1) h = t1 - t;

    Vec y2, y3, y4, y5, y6, ynew;
    for (int i = 0; i < 4; ++i) y2[i] = y[i] + h * a21 * k1[i];
    bool ok = valid(y2) && finite(y2);
    Vec k2{}, k3{}, k4{}, k5{}, k6{}, k7{};
    if (ok) {
      k2 = rhs(t + c2 * h, y2);
      for (int i = 0; i < 4; ++i) y3[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
      ok = valid(y3) && finite(y3);
    }
    if (ok) {
      k3 = rhs(t + c3 * h, y3);
      for (int i = 0; i < 4; ++i)
        y4[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
      ok = valid(y4) && finite(y4);
    }
    if (ok) {
      k4 = rhs(t + c4 * h, y4);
      for (int i = 0; i < 4; ++i)
        y5[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
      ok = valid(y5) && finite(y5);
    }
    if (ok) {
      k5 = rhs(t + c5 * h, y5);
      for (int i = 0; i < 4; ++i)
        y6[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                            a65 * k5[i]);
      ok = valid(y6) && finite(y6);
    }
    if (ok) {
      k6 = rhs(t + h, y6);
      for (int i = 0; i < 4; ++i)
        ynew[i] = y[i] + h * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] + a75 * k5[i] +
                              a76 * k6[i]);
      ok = valid(ynew) && finite(ynew);
    }
    if (!ok) {
      h *= 0.5;
      continue;
    }
    k7 = rhs(t + h, ynew);

    double err = 0.0;
    for (int i = 0; i < 4; ++i) {
      const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                             e6 * k6[i] + e7 * k7[i]);
      const double sk = abs_tol + rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      err += (ei / sk) * (ei / sk);
    }
    err = std::sqrt(err / 4.0);

    if (err <= 1.0) {
      DenseStep ds;
      ds.t = t;
      ds.h = h;
      for (int i = 0; i < 4; ++i) {
        const double ydiff = ynew[i] - y[i];
        const double bspl = h * k1[i] - ydiff;
        ds.cont[0][i] = y[i];
        ds.cont[1][i] = ydiff;
        ds.cont[2][i] = bspl;
        ds.cont[3][i] = ydiff - h * k7[i] - bspl;
        ds.cont[4][i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                             d6 * k6[i] + d7 * k7[i]);
      }
      sol.steps.push_back(ds);
      t += h;
      y = ynew;
      k1 = k7; // FSAL
    }
    const double fac = std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
    h *= fac;
  }
  sol.t_end = t;
  sol.y_end = y;
  return sol;
}

} // namespace e11::ode

#endif
