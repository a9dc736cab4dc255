#include "nlslab/potential.hpp"

#include <cmath>
#include <sstream>

namespace nlslab {

PotentialSpec PotentialSpec::fourier(double L, double K, double strength,
                                     CoefficientMap coefficients) {
  PotentialSpec s;
  s.L = L;
  s.K = K;
  s.strength = strength;
  s.coefficients = std::move(coefficients);
  s.sampled = false;
  s.validate();
  return s;
}

PotentialSpec PotentialSpec::from_samples(double L, double K, double strength,
                                          std::vector<Complex> profile) {
  PotentialSpec s;
  s.L = L;
  s.K = K;
  s.strength = strength;
  s.profile = std::move(profile);
  s.sampled = true;
  s.validate();
  return s;
}

void PotentialSpec::validate() const {
  if (!(L > 0.0)) throw std::invalid_argument("PotentialSpec: L must be > 0");
  if (!(K > 0.0)) throw std::invalid_argument("PotentialSpec: K must be > 0");
  if (!std::isfinite(strength))
    throw std::invalid_argument("PotentialSpec: non-finite strength");
  if (sampled) {
    if (profile.size() < 2)
      throw std::invalid_argument(
          "PotentialSpec: sampled profile needs >= 2 nodes");
    if (!coefficients.empty())
      throw std::invalid_argument(
          "PotentialSpec: exactly one of coefficients/profile may be active");
  } else if (!profile.empty()) {
    throw std::invalid_argument(
        "PotentialSpec: exactly one of coefficients/profile may be active");
  }
}

std::vector<std::string> PotentialSpec::warnings() const {
  std::vector<std::string> out;
  double fmax = 0.0;
  if (sampled) {
    for (const Complex& v : profile) fmax = std::max(fmax, std::abs(v));
  } else {
    for (const auto& [n, c] : coefficients) fmax += std::abs(c);
  }
  if (fmax > 10.0) {
    std::ostringstream os;
    os << "potential profile reaches |f| ~ " << fmax
       << "; the perturbative formulas assume |f| of order 1";
    out.push_back(os.str());
  }
  return out;
}

Complex eval_f(const PotentialSpec& spec, double x) {
  if (!std::isfinite(x))
    throw std::invalid_argument("eval_f: non-finite coordinate");
  if (x < 0.0 || x > spec.L) return Complex{0.0, 0.0};
  if (spec.sampled) {
    const size_t n = spec.profile.size();
    const double h = spec.L / static_cast<double>(n - 1);
    const double u = x / h;
    size_t j = static_cast<size_t>(u);
    if (j >= n - 1) j = n - 2;
    const double t = u - static_cast<double>(j);
    return (1.0 - t) * spec.profile[j] + t * spec.profile[j + 1];
  }
  Complex sum{0.0, 0.0};
  for (const auto& [n, c] : spec.coefficients)
    sum += c * std::polar(1.0, n * spec.K * x);
  return sum;
}

PotentialSpec potential_from_permittivity(const std::vector<Complex>& eps,
                                          double L, double k) {
  if (eps.empty())
    throw std::invalid_argument("potential_from_permittivity: empty tabulation");
  if (eps.size() < 2)
    throw std::invalid_argument(
        "potential_from_permittivity: need >= 2 samples");
  if (!(k > 0.0))
    throw std::invalid_argument("potential_from_permittivity: k must be > 0");
  std::vector<Complex> v(eps.size());
  for (size_t j = 0; j < eps.size(); ++j)
    v[j] = k * k * (Complex{1.0, 0.0} - eps[j]);
  // default K is irrelevant for a sampled profile; keep a positive value
  return PotentialSpec::from_samples(L, 2.0 * 3.14159265358979323846 / L, 1.0,
                                     std::move(v));
}

ResonantSet resonant_wavenumbers(const PotentialSpec& spec, int s_max) {
  if (s_max < 1)
    throw std::invalid_argument("resonant_wavenumbers: s_max must be >= 1");
  const double ratio = spec.L / spec.period();
  const double rounded = std::round(ratio);
  if (rounded < 1.0 ||
      std::abs(ratio - rounded) > 1e-9 * std::max(1.0, std::abs(ratio)))
    throw std::invalid_argument(
        "resonant_wavenumbers: L is not an integer multiple of the period "
        "2*pi/K");
  ResonantSet set;
  set.m = static_cast<int>(rounded);
  set.points.reserve(static_cast<size_t>(s_max));
  for (int s = 1; s <= s_max; ++s)
    set.points.emplace_back(s, 0.5 * static_cast<double>(s) * spec.K);
  return set;
}

}  // namespace nlslab
