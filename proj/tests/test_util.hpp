#ifndef NLSLAB_TEST_UTIL_HPP
#define NLSLAB_TEST_UTIL_HPP

#include <cmath>

#include "nlslab/nonlinearity.hpp"
#include "nlslab/potential.hpp"
#include "nlslab/types.hpp"

namespace nlslab::testing {

inline constexpr double kPi = 3.14159265358979323846;

// The worked three-harmonic slab used throughout: f has components at
// n = -6, -2, 4 with real weights 0.50, 0.35, -0.15 and K an integer
// multiple of 2 pi / L.
inline CoefficientMap example_coefficients() {
  return CoefficientMap{{-6, {-0.15, 0.0}}, {-2, {0.50, 0.0}}, {4, {0.35, 0.0}}};
}

/// Slab of m periods in units K = 1, with couplings fixed per wavenumber:
/// strength = zhat k^2, gamma = ghat k^2.
inline PotentialSpec example_potential(double k, double zhat = 1e-2, int m = 1) {
  return PotentialSpec::fourier(2.0 * kPi * m, 1.0, zhat * k * k,
                                example_coefficients());
}

inline NonlinearitySpec example_kerr(double k, double ghat = 1e-3) {
  return NonlinearitySpec::kerr(ghat * k * k);
}

/// Single-harmonic slab f = e^{iKx} with K = pi / L (half period).
inline PotentialSpec exp_potential(double k, double zhat, double L = kPi) {
  return PotentialSpec::fourier(L, kPi / L, zhat * k * k,
                                CoefficientMap{{1, {1.0, 0.0}}});
}

inline double amp_distance(const Amplitudes& a, const Amplitudes& b) {
  return std::max(std::max(std::abs(a.Rr - b.Rr), std::abs(a.Rl - b.Rl)),
                  std::max(std::abs(a.Tr - b.Tr), std::abs(a.Tl - b.Tl)));
}

}  // namespace nlslab::testing

#endif
