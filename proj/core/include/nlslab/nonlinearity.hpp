#ifndef NLSLAB_NONLINEARITY_HPP
#define NLSLAB_NONLINEARITY_HPP

#include <functional>

#include "nlslab/types.hpp"

namespace nlslab {

/// Incoherent nonlinearity gamma * F(|psi|) confined to the slab.  The term
/// depends on the field only through its modulus, never its phase.
struct NonlinearitySpec {
  enum class Kind { Kerr, Custom };

  double gamma = 0.0;
  Kind kind = Kind::Kerr;
  std::function<Complex(double)> custom;  // F(|psi|) for Kind::Custom

  /// F(a), a = |psi| >= 0.  Kerr is exactly a^2, no hidden scaling.
  Complex F(double a) const {
    return kind == Kind::Kerr ? Complex{a * a, 0.0} : custom(a);
  }

  bool linear() const { return gamma == 0.0; }

  static NonlinearitySpec kerr(double gamma) {
    return NonlinearitySpec{gamma, Kind::Kerr, {}};
  }
  static NonlinearitySpec none() { return kerr(0.0); }
};

}  // namespace nlslab

#endif
