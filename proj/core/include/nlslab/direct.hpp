#ifndef NLSLAB_DIRECT_HPP
#define NLSLAB_DIRECT_HPP

#include <map>
#include <vector>

#include "nlslab/nonlinearity.hpp"
#include "nlslab/potential.hpp"
#include "nlslab/types.hpp"

namespace nlslab {

enum class FieldKind { Xi, Zeta };

/// psi and psi' of one scattering field on a uniform grid over [0, L].
/// Xi is integrated forward from x = 0 with psi(0) = N-, psi'(0) = -ik N-;
/// Zeta backward from x = L with psi(L) = N+, psi'(L) = +ik N+.
struct FieldSolution {
  std::vector<double> x;
  std::vector<Complex> psi, dpsi;
  FieldKind which = FieldKind::Xi;
  Incidence incidence;
  double L = 0.0;

  double k() const { return incidence.k; }
};

/// Confined source whose transforms determine the amplitudes, sampled on the
/// field grid, with the transform values the caller asked for.
struct SourceTerm {
  std::vector<double> x;
  std::vector<Complex> values;
  std::map<double, Complex> transform_at;
};

struct SolveOptions {
  int grid_size = 4096;   // report intervals over [0, L]; even, >= 64
  double tol = 1e-10;     // local error per step
  double fixed_step = 0.0;  // > 0: disable adaptivity (convergence studies)
};

/// Integrates -psi'' + strength f(x) psi + gamma F(|psi|) psi = k^2 psi as a
/// first-order system in (Re psi, Im psi, Re psi', Im psi').  The incoherent
/// nonlinearity is a state-dependent coefficient, so this is a plain IVP.
/// Throws SolverError on step-size underflow.
FieldSolution solve_field(const PotentialSpec& pot, const NonlinearitySpec& nl,
                          const Incidence& inc, int grid_size, double tol);
FieldSolution solve_field(const PotentialSpec& pot, const NonlinearitySpec& nl,
                          const Incidence& inc, const SolveOptions& opt);

struct JostPair {
  Complex plus, minus;  // F+- (Xi) or G-+ (Zeta): value' +- i k value
};

/// F+- = xi'(L) +- ik xi(L)  or  G+- = zeta'(0) +- ik zeta(0).
JostPair jost_functions(const FieldSolution& sol);

/// Amplitudes from the boundary data of both fields:
///   Rr = -e^{-2ikL} F+/F-,  Tr = -2ik e^{-ikL} N- / F-,
///   Rl = -G-/G+,            Tl = +2ik e^{-ikL} N+ / G+.
/// Throws SpectralSingularityError when |F-| or |G+| < 1e-12 * 2k.
Amplitudes amplitudes_jost(const FieldSolution& xi, const FieldSolution& zeta);

/// Builds X(x) = [gamma F(|xi|) + strength f] e^{ikx} xi / N-  and the zeta
/// analogue, with transforms at q in {0, 2k} (X) and {0, -2k} (Y).
std::pair<SourceTerm, SourceTerm> source_terms(const FieldSolution& xi,
                                               const FieldSolution& zeta,
                                               const PotentialSpec& pot,
                                               const NonlinearitySpec& nl);

/// Amplitudes from the transform route:
///   Rr = X~(2k) / (2ik - X~(0)),   Tr = 2ik / (2ik - X~(0)),
///   Rl = Y~(-2k) / (2ik - Y~(0)),  Tl = 2ik / (2ik - Y~(0)).
Amplitudes amplitudes_fourier(const SourceTerm& srcX, const SourceTerm& srcY,
                              double k);

/// One nonperturbative scattering computation: both fields, both amplitude
/// routes, transforms attached to each result.
struct DirectResult {
  Amplitudes jost;     // boundary-data route (the reported values)
  Amplitudes fourier;  // transform route (consistency check)
  FieldSolution xi, zeta;
  TransformSet transforms;
};

DirectResult direct_scattering(const PotentialSpec& pot,
                               const NonlinearitySpec& nl, double k,
                               Complex amplitude_right, Complex amplitude_left,
                               const SolveOptions& opt = {});

}  // namespace nlslab

#endif
