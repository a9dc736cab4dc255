#include "nlslab/classify.hpp"

#include <cmath>
#include <stdexcept>

namespace nlslab {

namespace {

void derive_flags(Classification& c) {
  c.invisible_right = c.reflectionless_right && c.transparent_right;
  c.invisible_left = c.reflectionless_left && c.transparent_left;
  if (c.invisible_left && !c.invisible_right)
    c.unidirectional = Unidirectional::LeftInvisible;
  else if (c.invisible_right && !c.invisible_left)
    c.unidirectional = Unidirectional::RightInvisible;
  else
    c.unidirectional = Unidirectional::None;
}

}  // namespace

Classification classify_transforms(Complex tX0, Complex tX2k, Complex tYm2k,
                                   Complex tY0, double k, double tol) {
  if (!(tol > 0.0))
    throw std::invalid_argument("classify_transforms: tol must be > 0");
  if (!(k > 0.0))
    throw std::invalid_argument("classify_transforms: k must be > 0");
  const double scale = 2.0 * k;
  Classification c;
  c.tol = tol;
  c.residual_reflection_right = std::abs(tX2k) / scale;
  c.residual_reflection_left = std::abs(tYm2k) / scale;
  c.residual_transparency_right = std::abs(tX0) / scale;
  c.residual_transparency_left = std::abs(tY0) / scale;
  c.reflectionless_right = c.residual_reflection_right < tol;
  c.reflectionless_left = c.residual_reflection_left < tol;
  c.transparent_right = c.residual_transparency_right < tol;
  c.transparent_left = c.residual_transparency_left < tol;
  derive_flags(c);
  return c;
}

Classification classify_amplitudes(const Amplitudes& amps, double tol) {
  if (!(tol > 0.0))
    throw std::invalid_argument("classify_amplitudes: tol must be > 0");
  Classification c;
  c.tol = tol;
  c.residual_reflection_right = std::abs(amps.Rr);
  c.residual_reflection_left = std::abs(amps.Rl);
  c.residual_transparency_right = std::abs(amps.Tr - 1.0);
  c.residual_transparency_left = std::abs(amps.Tl - 1.0);
  c.reflectionless_right = c.residual_reflection_right < tol;
  c.reflectionless_left = c.residual_reflection_left < tol;
  c.transparent_right = c.residual_transparency_right < tol;
  c.transparent_left = c.residual_transparency_left < tol;
  derive_flags(c);
  return c;
}

}  // namespace nlslab
