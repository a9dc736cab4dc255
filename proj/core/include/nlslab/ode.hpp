#ifndef NLSLAB_ODE_HPP
#define NLSLAB_ODE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>

#include "nlslab/types.hpp"

namespace nlslab {

struct OdeOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-10;
  double initial_step = 0.0;  // 0: pick from interval length
  double fixed_step = 0.0;    // > 0: plain 5th-order steps, no adaptivity
  int max_steps = 2'000'000;
};

// Dormand-Prince 5(4) embedded pair.  Integrates y' = f(x, y) from x0 to x1
// (either direction).  Accepted steps can fill a monotone report grid through
// cubic Hermite interpolation of (y, f) at the step ends; the grid values are
// 4th-order accurate, the endpoint state 5th.
template <int N, class Rhs>
class DormandPrince5 {
 public:
  using State = std::array<double, N>;

  explicit DormandPrince5(Rhs rhs, OdeOptions opt = {})
      : rhs_(std::move(rhs)), opt_(opt) {}

  /// ReportFn: void(std::size_t index, const State& y, const State& dy).
  /// report_x must be monotone in the direction of integration.
  template <class ReportFn>
  State integrate(double x0, double x1, State y,
                  std::span<const double> report_x, ReportFn&& report) {
    const double span = x1 - x0;
    const double dir = span >= 0.0 ? 1.0 : -1.0;
    double x = x0;
    double h = opt_.fixed_step > 0.0
                   ? dir * opt_.fixed_step
                   : (opt_.initial_step > 0.0 ? dir * opt_.initial_step
                                              : span / 128.0);
    std::size_t next_report = 0;
    // emit report points that coincide with x0
    while (next_report < report_x.size() &&
           dir * (report_x[next_report] - x0) <= 0.0) {
      State dy;
      rhs_(x0, y, dy);
      report(next_report, y, dy);
      ++next_report;
    }

    State k1;
    rhs_(x, y, k1);
    int steps = 0;
    while (dir * (x1 - x) > 0.0) {
      if (++steps > opt_.max_steps)
        throw SolverError("ode: step limit exceeded", x);
      const bool last = dir * (x + h - x1) >= 0.0;
      if (last) h = x1 - x;
      const double hmin =
          16.0 * std::numeric_limits<double>::epsilon() *
          std::max(std::abs(x), std::abs(span));
      if (std::abs(h) < hmin) {
        if (last) break;  // endpoint reached within roundoff
        throw SolverError("ode: step size underflow (stiff or blowing up)", x);
      }

      State y1, k7;
      const double err = step(x, y, k1, h, y1, k7);
      if (opt_.fixed_step > 0.0 || err <= 1.0) {
        // fill report points inside (x, x+h]
        while (next_report < report_x.size() &&
               dir * (report_x[next_report] - (x + h)) <= 1e-14 * std::abs(span)) {
          const double theta = (report_x[next_report] - x) / h;
          State yr, dyr;
          hermite(y, k1, y1, k7, h, theta, yr, dyr);
          report(next_report, yr, dyr);
          ++next_report;
        }
        x += h;
        y = y1;
        k1 = k7;  // FSAL
        if (opt_.fixed_step == 0.0) {
          const double fac =
              err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
          h *= std::clamp(fac, 0.2, 5.0);
        }
      } else {
        h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
      }
    }
    // tail: report points that sit on x1 within roundoff
    while (next_report < report_x.size()) {
      State dy;
      rhs_(x, y, dy);
      report(next_report, y, dy);
      ++next_report;
    }
    return y;
  }

 private:
  // One trial step; returns the scaled error norm, fills y1 and k7 = f(x+h, y1).
  double step(double x, const State& y, const State& k1, double h, State& y1,
              State& k7) {
    constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    constexpr double a21 = 1.0 / 5;
    constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                     a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                     a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                     a65 = -5103.0 / 18656;
    constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                     b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    constexpr double e1 = 35.0 / 384 - 5179.0 / 57600,
                     e3 = 500.0 / 1113 - 7571.0 / 16695,
                     e4 = 125.0 / 192 - 393.0 / 640,
                     e5 = -2187.0 / 6784 + 92097.0 / 339200,
                     e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

    State k2, k3, k4, k5, k6, t;
    for (int i = 0; i < N; ++i) t[i] = y[i] + h * a21 * k1[i];
    rhs_(x + c2 * h, t, k2);
    for (int i = 0; i < N; ++i) t[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    rhs_(x + c3 * h, t, k3);
    for (int i = 0; i < N; ++i)
      t[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    rhs_(x + c4 * h, t, k4);
    for (int i = 0; i < N; ++i)
      t[i] = y[i] +
             h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    rhs_(x + c5 * h, t, k5);
    for (int i = 0; i < N; ++i)
      t[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                         a64 * k4[i] + a65 * k5[i]);
    rhs_(x + h, t, k6);
    for (int i = 0; i < N; ++i)
      y1[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                          b6 * k6[i]);
    rhs_(x + h, y1, k7);

    double err2 = 0.0;
    for (int i = 0; i < N; ++i) {
      const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                            e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      const double sc =
          opt_.abs_tol +
          opt_.rel_tol * std::max(std::abs(y[i]), std::abs(y1[i]));
      const double r = e / sc;
      err2 += r * r;
    }
    const double err = std::sqrt(err2 / N);
    return std::isfinite(err) ? err : 1e10;
  }

  static void hermite(const State& y0, const State& f0, const State& y1,
                      const State& f1, double h, double theta, State& y,
                      State& dy) {
    const double t2 = theta * theta, t3 = t2 * theta;
    const double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + theta;
    const double h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
    const double g00 = (6 * t2 - 6 * theta) / h, g10 = 3 * t2 - 4 * theta + 1;
    const double g01 = (-6 * t2 + 6 * theta) / h, g11 = 3 * t2 - 2 * theta;
    for (int i = 0; i < N; ++i) {
      y[i] = h00 * y0[i] + h10 * h * f0[i] + h01 * y1[i] + h11 * h * f1[i];
      dy[i] = g00 * y0[i] + g10 * f0[i] + g01 * y1[i] + g11 * f1[i];
    }
  }

  Rhs rhs_;
  OdeOptions opt_;
};

}  // namespace nlslab

#endif
