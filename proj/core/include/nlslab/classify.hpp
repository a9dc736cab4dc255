#ifndef NLSLAB_CLASSIFY_HPP
#define NLSLAB_CLASSIFY_HPP

#include "nlslab/types.hpp"

namespace nlslab {

enum class Unidirectional { None, LeftInvisible, RightInvisible };

inline const char* unidirectional_name(Unidirectional u) {
  switch (u) {
    case Unidirectional::None: return "none";
    case Unidirectional::LeftInvisible: return "left_invisible";
    case Unidirectional::RightInvisible: return "right_invisible";
  }
  return "?";
}

/// Thresholded predicates; residuals are exposed so callers can judge
/// margins themselves.  No "approximately invisible" gradations.
struct Classification {
  bool reflectionless_right = false, reflectionless_left = false;
  bool transparent_right = false, transparent_left = false;
  bool invisible_right = false, invisible_left = false;
  Unidirectional unidirectional = Unidirectional::None;
  // Tested magnitudes: from transforms these are |.|/(2k); from amplitudes
  // they are |R| and |T - 1|, already dimensionless.
  double residual_reflection_right = 0.0, residual_reflection_left = 0.0;
  double residual_transparency_right = 0.0, residual_transparency_left = 0.0;
  double tol = 1e-6;
};

/// Reflectionless: X~(2k) = 0 (right), Y~(-2k) = 0 (left).
/// Transparent:    X~(0) = 0 (right),  Y~(0) = 0 (left).
/// Invisible from a side: both; unidirectional when exactly one side.
Classification classify_transforms(Complex tX0, Complex tX2k, Complex tYm2k,
                                   Complex tY0, double k, double tol);

/// Same flags from amplitudes: reflectionless iff |R| < tol, transparent iff
/// |T - 1| < tol.
Classification classify_amplitudes(const Amplitudes& amps, double tol);

}  // namespace nlslab

#endif
