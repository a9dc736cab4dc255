#ifndef NLSLAB_CONFIG_HPP
#define NLSLAB_CONFIG_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "nlslab/nonlinearity.hpp"
#include "nlslab/potential.hpp"
#include "nlslab/types.hpp"

namespace nlslab {

/// Run configuration, read from a sectioned key = value text file.
/// All numbers are dimensionless in units K = 1 (thickness L = 2 pi m / K).
/// Couplings may be given per wavenumber ("hat" variants: value / k^2,
/// resolved at each evaluated k) or as absolute constants; exactly one of
/// each pair.
///
///   [potential]
///   K = 1.0
///   m = 1                    # or: L = <value>
///   strength_hat = 0.01      # or: strength = <value>
///   coefficient = -2  0.50 0.0     # n  Re(c_n)  Im(c_n), repeated
///   # or: profile = samples.csv    # rows: x,Re f,Im f on uniform nodes
///
///   [nonlinearity]
///   kind = kerr
///   gamma_hat = 0.001        # or: gamma = <value>
///
///   [incidence]
///   amplitude_right = 1.0 0.0      # N-  (right-incident field)
///   amplitude_left  = 1.0 0.0      # N+  (left-incident field)
///
///   [numerics]
///   grid_size = 4096
///   solver_tol = 1e-10
///   classify_tol = 1e-6
struct ScatteringConfig {
  double K = 1.0;
  double L = 0.0;  // resolved from m when m given
  int m = 0;       // 0 when L was given directly
  double strength = 0.0;
  bool strength_is_hat = false;
  CoefficientMap coefficients;
  std::vector<Complex> profile;
  bool sampled = false;
  double gamma = 0.0;
  bool gamma_is_hat = false;
  Complex amplitude_right{1.0, 0.0};  // N-
  Complex amplitude_left{1.0, 0.0};   // N+
  int grid_size = 4096;
  double solver_tol = 1e-10;
  double classify_tol = 1e-6;

  /// Potential with couplings resolved at wavenumber k (hat variants scale
  /// with k^2).  With slab_m > 0 the thickness is overridden to 2 pi m / K.
  PotentialSpec potential_at(double k, int slab_m = 0) const;
  NonlinearitySpec nonlinearity_at(double k) const;
};

/// Throws ConfigError with file/line diagnostics.
ScatteringConfig load_config(const std::string& path);
ScatteringConfig parse_config(std::istream& in, const std::string& name);

}  // namespace nlslab

#endif
