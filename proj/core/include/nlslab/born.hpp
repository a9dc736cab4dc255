#ifndef NLSLAB_BORN_HPP
#define NLSLAB_BORN_HPP

#include "nlslab/direct.hpp"
#include "nlslab/nonlinearity.hpp"
#include "nlslab/potential.hpp"
#include "nlslab/types.hpp"

namespace nlslab {

/// Dimensionless couplings and geometry for the closed-form expansions.
struct PerturbativeInputs {
  double zhat = 0.0;  // strength / k^2
  double ghat = 0.0;  // gamma / k^2
  double Nm2 = 1.0;   // |N-|^2
  double Np2 = 1.0;   // |N+|^2
  double k = 1.0, K = 1.0, L = 0.0;
  int m = 0, s = 0;   // resonance labels; 0 when not on the resonant grid
  CoefficientMap coefficients;
};

/// Inputs at an arbitrary wavenumber (resonance labels unset).
PerturbativeInputs perturbative_inputs(const PotentialSpec& pot,
                                       const NonlinearitySpec& nl,
                                       Complex amplitude_right,
                                       Complex amplitude_left, double k);

/// Inputs pinned to the resonance k = s K / 2 with L = m * 2 pi / K; the
/// integer conditions are checked to relative tolerance 1e-9.
PerturbativeInputs resonance_inputs(const PotentialSpec& pot,
                                    const NonlinearitySpec& nl,
                                    Complex amplitude_right,
                                    Complex amplitude_left, int s);

/// First-order field xihat^(1) (Right) or zetahat^(1) (Left): the integral
/// kernel splits into two cumulative integrals via
/// sin(th) e^{+-i th} = +-(e^{+-2i th} - 1)/(2i), one O(N) sweep each.
/// The nonlinearity enters only through F(|N|).
FieldSolution first_order_field(const PotentialSpec& pot,
                                const NonlinearitySpec& nl, Direction dir,
                                Complex amplitude, double k, int grid_size);

/// First Born approximation from sampled sources
/// X1 = gamma F(|N-|) + strength f, Y1 = gamma F(|N+|) + strength f,
/// transforms by quadrature.  Works for sampled and Fourier potentials.
Amplitudes born1_general(const PotentialSpec& pot, const NonlinearitySpec& nl,
                         Complex amplitude_right, Complex amplitude_left,
                         double k, int grid_size);

/// First Born approximation in closed form for Fourier potentials; every
/// removable 2k = nK (and n = 0) singularity is evaluated by its limit.
Amplitudes born1_fourier(const PerturbativeInputs& in);

/// Second-order closed forms on the resonant grid k = sK/2, L = m 2pi/K:
///   R = zhat R_z + ghat zhat R_gz + zhat^2 R_zz
///   T = 1 + zhat T_z + ghat T_g + zhat ghat T_gz + zhat^2 T_zz
/// with the coefficient algebra over the finite Fourier support.  Kerr only.
Amplitudes born2_resonance(const PerturbativeInputs& in);

/// Numerical second order valid at any k: builds
/// X2 = [gamma F(|N- xihat1|) + strength f] xihat1 (and the zeta analogue)
/// from the first-order fields and combines transform values as
///   Rr = X2~(2k)/(2ik) - X1~(2k) X1~(0)/(4k^2),
///   Tr = 1 + X2~(0)/(2ik) - X1~(0)^2/(4k^2),  left side mirrored.
/// Kerr only.
Amplitudes born2_general(const PotentialSpec& pot, const NonlinearitySpec& nl,
                         Complex amplitude_right, Complex amplitude_left,
                         double k, int grid_size);

}  // namespace nlslab

#endif
