#ifndef NLSLAB_POTENTIAL_HPP
#define NLSLAB_POTENTIAL_HPP

#include <utility>
#include <vector>

#include "nlslab/types.hpp"

namespace nlslab {

/// Finite-range potential v(x) = strength * f(x) supported on [0, L].
/// f is either a finite Fourier sum  f(x) = sum_n c_n e^{i n K x}  or a
/// tabulated profile on uniform nodes over [0, L] (piecewise-linear in
/// between).  Exactly one representation is active.
struct PotentialSpec {
  double L = 0.0;         // slab thickness, support is [0, L]
  double K = 1.0;         // lattice wavenumber of the Fourier representation
  double strength = 0.0;  // real coupling (dimension of k^2)
  CoefficientMap coefficients;
  std::vector<Complex> profile;  // uniform samples on [0, L] when sampled
  bool sampled = false;

  static PotentialSpec fourier(double L, double K, double strength,
                               CoefficientMap coefficients);
  static PotentialSpec from_samples(double L, double K, double strength,
                                    std::vector<Complex> profile);

  void validate() const;

  /// Non-fatal diagnostics.  |f| of order one is the regime the perturbative
  /// formulas are meant for; larger profiles still evaluate fine.
  std::vector<std::string> warnings() const;

  double period() const { return 2.0 * 3.14159265358979323846 / K; }
};

/// f(x) for x in [0, L], 0 outside; v(x) = strength * eval_f(spec, x).
/// Throws std::invalid_argument for non-finite x.
Complex eval_f(const PotentialSpec& spec, double x);

/// Optical potential of a tabulated relative permittivity:
/// v(x) = k^2 [1 - eps(x)], returned as a sampled spec with strength 1.
PotentialSpec potential_from_permittivity(const std::vector<Complex>& eps,
                                          double L, double k);

struct ResonantSet {
  int m = 0;  // L = m * (2 pi / K)
  std::vector<std::pair<int, double>> points;  // (s, k = s K / 2)
};

/// Wavenumbers k = s K / 2 = m s pi / L for s = 1 .. s_max.  Requires L to be
/// an integer multiple of the period to relative tolerance 1e-9.
ResonantSet resonant_wavenumbers(const PotentialSpec& spec, int s_max);

}  // namespace nlslab

#endif
