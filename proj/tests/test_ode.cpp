#include <array>
#include <cmath>
#include <vector>

#include <doctest.h>

#include "nlslab/ode.hpp"
#include "test_util.hpp"

using namespace nlslab;
using nlslab::testing::kPi;

namespace {

// y'' = -w^2 y as a 2-dim system
struct Oscillator {
  double w2;
  void operator()(double, const std::array<double, 2>& y,
                  std::array<double, 2>& dy) const {
    dy[0] = y[1];
    dy[1] = -w2 * y[0];
  }
};

}  // namespace

TEST_CASE("adaptive integration of an oscillator hits the tolerance") {
  Oscillator osc{4.0};  // w = 2
  OdeOptions opt;
  opt.rel_tol = opt.abs_tol = 1e-11;
  DormandPrince5<2, Oscillator> solver(osc, opt);
  std::array<double, 2> y0{1.0, 0.0};
  const double X = 10.0;
  const auto yend = solver.integrate(0.0, X, y0, {}, [](size_t,
                                                        const std::array<double, 2>&,
                                                        const std::array<double, 2>&) {});
  CHECK(std::abs(yend[0] - std::cos(2.0 * X)) < 1e-8);
  CHECK(std::abs(yend[1] + 2.0 * std::sin(2.0 * X)) < 1e-8);
}

TEST_CASE("dense output is accurate on a report grid") {
  Oscillator osc{1.0};
  OdeOptions opt;
  opt.rel_tol = opt.abs_tol = 1e-10;
  DormandPrince5<2, Oscillator> solver(osc, opt);
  std::array<double, 2> y0{0.0, 1.0};  // sin(x)
  std::vector<double> grid(101);
  for (int j = 0; j <= 100; ++j) grid[static_cast<size_t>(j)] = 5.0 * j / 100.0;
  std::vector<double> got(101);
  solver.integrate(0.0, 5.0, y0, grid,
                   [&](size_t i, const std::array<double, 2>& y,
                       const std::array<double, 2>&) { got[i] = y[0]; });
  for (int j = 0; j <= 100; ++j)
    CHECK(std::abs(got[static_cast<size_t>(j)] - std::sin(grid[static_cast<size_t>(j)])) < 1e-8);
}

TEST_CASE("backward integration works") {
  Oscillator osc{1.0};
  DormandPrince5<2, Oscillator> solver(osc, {});
  std::array<double, 2> yL{std::sin(3.0), std::cos(3.0)};
  const auto y0 = solver.integrate(3.0, 0.0, yL, {}, [](size_t,
                                                        const std::array<double, 2>&,
                                                        const std::array<double, 2>&) {});
  CHECK(std::abs(y0[0]) < 1e-8);
  CHECK(std::abs(y0[1] - 1.0) < 1e-8);
}

TEST_CASE("fixed-step error shrinks by the 5th-order factor") {
  Oscillator osc{9.0};  // w = 3
  auto run = [&](double h) {
    OdeOptions opt;
    opt.fixed_step = h;
    DormandPrince5<2, Oscillator> solver(osc, opt);
    std::array<double, 2> y0{1.0, 0.0};
    const auto ye = solver.integrate(0.0, 2.0 * kPi, y0, {},
                                     [](size_t, const std::array<double, 2>&,
                                        const std::array<double, 2>&) {});
    return std::abs(ye[0] - 1.0);
  };
  const double e1 = run(2.0 * kPi / 200);
  const double e2 = run(2.0 * kPi / 400);
  CHECK(e1 / e2 > 8.0);   // >= 8x required, ~32x theoretical
  CHECK(e1 / e2 < 100.0); // sanity: not just roundoff noise
}

TEST_CASE("finite-time blow-up raises SolverError with the reached x") {
  // y' = y^2 from y(0) = 1 blows up at x = 1
  auto rhs = [](double, const std::array<double, 1>& y,
                std::array<double, 1>& dy) { dy[0] = y[0] * y[0]; };
  DormandPrince5<1, decltype(rhs)> solver(rhs, {});
  std::array<double, 1> y0{1.0};
  try {
    solver.integrate(0.0, 2.0, y0, {}, [](size_t, const std::array<double, 1>&,
                                          const std::array<double, 1>&) {});
    FAIL("expected SolverError");
  } catch (const SolverError& e) {
    CHECK(e.reached_x > 0.5);
    CHECK(e.reached_x < 1.5);
  }
}
