#ifndef NLSLAB_TYPES_HPP
#define NLSLAB_TYPES_HPP

#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace nlslab {

using Complex = std::complex<double>;

// Sparse Fourier representation: n -> c_n.  std::map keeps iteration order
// deterministic, which the bit-reproducibility guarantees rely on.
using CoefficientMap = std::map<int, Complex>;

inline constexpr Complex iunit{0.0, 1.0};

/// Side the incident plane wave comes from.  Right-incident waves are carried
/// by the field integrated from x = 0 (xi), left-incident by the field
/// integrated from x = L (zeta).
enum class Direction { Left, Right };

enum class Method { Direct, Born1, Born2, Born2Resonance };

inline const char* method_name(Method m) {
  switch (m) {
    case Method::Direct: return "direct";
    case Method::Born1: return "born1";
    case Method::Born2: return "born2";
    case Method::Born2Resonance: return "born2res";
  }
  return "?";
}

struct Incidence {
  double k = 1.0;                 // wavenumber, > 0
  Direction direction = Direction::Right;
  Complex amplitude{1.0, 0.0};    // N_- (Right) or N_+ (Left), nonzero

  void validate() const {
    if (!(k > 0.0)) throw std::invalid_argument("Incidence: k must be > 0");
    if (amplitude == Complex{0.0, 0.0})
      throw std::invalid_argument("Incidence: amplitude must be nonzero");
  }
};

/// The four transform values that determine the scattering amplitudes:
/// X0 = X~(0), X2k = X~(2k), Y0 = Y~(0), Ym2k = Y~(-2k).
struct TransformSet {
  Complex X0{}, X2k{}, Y0{}, Ym2k{};
};

struct Amplitudes {
  Complex Rr{}, Rl{}, Tr{}, Tl{};
  Method method = Method::Direct;
  // Populated on the direct path, where both the boundary-data route and the
  // transform route have been evaluated.
  std::optional<TransformSet> aux;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integration failure (step-size underflow from a stiff or blowing-up
/// field); carries the coordinate that was reached.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double reached)
      : std::runtime_error(what), reached_x(reached) {}
  double reached_x;
};

/// Transmission denominator vanished (real-k transmission pole).
class SpectralSingularityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nlslab

#endif
