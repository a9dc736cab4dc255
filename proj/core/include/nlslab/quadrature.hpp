#ifndef NLSLAB_QUADRATURE_HPP
#define NLSLAB_QUADRATURE_HPP

#include <span>
#include <vector>

#include "nlslab/types.hpp"

namespace nlslab {

/// Composite Simpson rule on uniform samples.  Requires an even number of
/// intervals (odd number of nodes >= 3).
Complex simpson(std::span<const Complex> values, double h);

/// Finite Fourier transform int e^{-i q x} v(x) dx over the sample support,
/// nodes x_j = x0 + j h, by composite Simpson.
Complex fourier_at(std::span<const Complex> values, double x0, double h,
                   double q);

/// Cumulative integral I_j = int_{x_0}^{x_j} v dx on uniform nodes, O(h^4).
/// Even nodes chain Simpson panels from I_0 = 0; odd nodes chain from I_1,
/// seeded with the three-point (5,8,-1)/12 rule.
std::vector<Complex> cumulative_integral(std::span<const Complex> values,
                                         double h);

/// int_0^L e^{i theta x} dx evaluated as e^{i theta L/2} L sinc(theta L/2),
/// which is exact and stays accurate through the removable singularity at
/// theta = 0 (sinc switches to its series below |u| = 1e-4).
Complex phase_integral(double theta, double L);

}  // namespace nlslab

#endif
