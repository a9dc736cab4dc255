#include <cmath>
#include <limits>

#include <doctest.h>

#include "nlslab/potential.hpp"
#include "test_util.hpp"

using namespace nlslab;
using nlslab::testing::kPi;

TEST_CASE("eval_f: single harmonic at the left edge") {
  const double L = 2.0;
  auto spec = PotentialSpec::fourier(L, kPi / L, 1.0, {{1, {1.0, 0.0}}});
  CHECK(std::abs(eval_f(spec, 0.0) - Complex{1.0, 0.0}) < 1e-15);
}

TEST_CASE("eval_f: three-harmonic example sums its coefficients at x = 0") {
  auto spec = testing::example_potential(1.0);
  CHECK(std::abs(eval_f(spec, 0.0) - Complex{0.70, 0.0}) < 1e-15);
}

TEST_CASE("eval_f vanishes outside the slab") {
  auto spec = testing::example_potential(1.0);
  CHECK(eval_f(spec, -spec.L / 2) == Complex{0.0, 0.0});
  CHECK(eval_f(spec, spec.L * 1.5) == Complex{0.0, 0.0});
}

TEST_CASE("eval_f rejects non-finite coordinates") {
  auto spec = testing::example_potential(1.0);
  CHECK_THROWS_AS(eval_f(spec, std::numeric_limits<double>::quiet_NaN()),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval_f(spec, std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
}

TEST_CASE("Fourier form is periodic inside the slab") {
  auto spec = testing::example_potential(1.0, 1e-2, 3);  // three periods
  const double ell = spec.period();
  for (double x : {0.1, 0.73, 1.9, 2.0 * kPi}) {
    CHECK(std::abs(eval_f(spec, x + ell) - eval_f(spec, x)) < 1e-12);
  }
}

TEST_CASE("sampled profiles interpolate linearly") {
  std::vector<Complex> nodes{{0.0, 0.0}, {1.0, 2.0}, {4.0, -2.0}};
  auto spec = PotentialSpec::from_samples(2.0, 1.0, 1.0, nodes);
  CHECK(std::abs(eval_f(spec, 0.5) - Complex{0.5, 1.0}) < 1e-15);
  CHECK(std::abs(eval_f(spec, 1.5) - Complex{2.5, 0.0}) < 1e-15);
  CHECK(std::abs(eval_f(spec, 2.0) - Complex{4.0, -2.0}) < 1e-15);
}

TEST_CASE("exactly one representation may be active") {
  PotentialSpec bad;
  bad.L = 1.0;
  bad.K = 1.0;
  bad.coefficients = {{1, {1.0, 0.0}}};
  bad.profile = {{0.0, 0.0}, {1.0, 0.0}};
  bad.sampled = true;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("permittivity conversion: vacuum gives zero potential") {
  std::vector<Complex> eps(33, Complex{1.0, 0.0});
  auto spec = potential_from_permittivity(eps, 2.0, 5.0);
  for (double x : {0.0, 0.7, 2.0})
    CHECK(std::abs(spec.strength * eval_f(spec, x)) < 1e-14);
}

TEST_CASE("permittivity conversion: constant slab") {
  std::vector<Complex> eps(17, Complex{2.0, 0.0});
  auto spec = potential_from_permittivity(eps, 1.0, 3.0);
  CHECK(std::abs(spec.strength * eval_f(spec, 0.4) - Complex{-9.0, 0.0}) <
        1e-12);
}

TEST_CASE("permittivity conversion: harmonic modulation round trip") {
  const double L = 2.0 * kPi, K = 1.0, k = 1.0;
  const int n = 256;
  std::vector<Complex> eps(n + 1);
  for (int j = 0; j <= n; ++j)
    eps[static_cast<size_t>(j)] =
        1.0 - 1e-2 * std::polar(1.0, K * (L * j / n));
  auto spec = potential_from_permittivity(eps, L, k);
  // node values reproduce eps to round-off, interior to interpolation error
  for (int j = 0; j <= n; ++j) {
    const double x = L * j / n;
    const Complex v = spec.strength * eval_f(spec, x);
    CHECK(std::abs((1.0 - v / (k * k)) - eps[static_cast<size_t>(j)]) < 1e-15);
  }
  for (double x : {0.123, 3.21})
    CHECK(std::abs(spec.strength * eval_f(spec, x) -
                   1e-2 * std::polar(1.0, K * x)) < 1e-4);
}

TEST_CASE("permittivity conversion rejects empty tabulations") {
  CHECK_THROWS_AS(potential_from_permittivity({}, 1.0, 1.0),
                  std::invalid_argument);
}

TEST_CASE("resonant grid: one period, s = 2 lands on K") {
  const double L = 3.0;
  auto spec = PotentialSpec::fourier(L, 2.0 * kPi / L, 1.0, {{1, {1.0, 0.0}}});
  const auto set = resonant_wavenumbers(spec, 2);
  CHECK(set.m == 1);
  REQUIRE(set.points.size() == 2);
  CHECK(set.points[1].first == 2);
  CHECK(set.points[1].second == doctest::Approx(2.0 * kPi / L).epsilon(1e-14));
  // 2k - sK = 0 exactly in exact arithmetic; here to one ulp
  CHECK(std::abs(2.0 * set.points[1].second - 2.0 * spec.K) <
        1e-15 * spec.K);
}

TEST_CASE("resonant grid: s = 8 on the unit-period slab is k = 4K") {
  auto spec = testing::example_potential(1.0);  // K L = 2 pi
  const auto set = resonant_wavenumbers(spec, 8);
  CHECK(set.m == 1);
  CHECK(set.points.back().second == doctest::Approx(4.0 * spec.K).epsilon(1e-14));
}

TEST_CASE("resonant grid: five periods, s = 1") {
  const double L = 2.0;
  auto spec = PotentialSpec::fourier(L, 10.0 * kPi / L, 1.0, {{1, {1.0, 0.0}}});
  const auto set = resonant_wavenumbers(spec, 1);
  CHECK(set.m == 5);
  CHECK(set.points[0].second == doctest::Approx(5.0 * kPi / L).epsilon(1e-14));
}

TEST_CASE("resonant grid rejects non-integer slabs") {
  auto spec = PotentialSpec::fourier(kPi, 1.0, 1.0, {{1, {1.0, 0.0}}});
  // L / (2 pi / K) = 1/2: not an integer number of periods
  CHECK_THROWS_AS(resonant_wavenumbers(spec, 3), std::invalid_argument);
  CHECK_THROWS_AS(resonant_wavenumbers(testing::example_potential(1.0), 0),
                  std::invalid_argument);
}

TEST_CASE("large profiles warn but do not fail") {
  auto loud = PotentialSpec::fourier(2.0 * kPi, 1.0, 1.0, {{1, {15.0, 0.0}}});
  CHECK(loud.warnings().size() == 1);
  CHECK(testing::example_potential(1.0).warnings().empty());
}
