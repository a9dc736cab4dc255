#include "nlslab/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace nlslab {

Complex simpson(std::span<const Complex> v, double h) {
  const size_t n = v.size();
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument(
        "simpson: need an odd number of nodes (even interval count)");
  Complex odd{}, even{};
  for (size_t j = 1; j + 1 < n; j += 2) odd += v[j];
  for (size_t j = 2; j + 1 < n; j += 2) even += v[j];
  return h / 3.0 * (v.front() + v.back() + 4.0 * odd + 2.0 * even);
}

Complex fourier_at(std::span<const Complex> v, double x0, double h, double q) {
  const size_t n = v.size();
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument(
        "fourier_at: need an odd number of nodes (even interval count)");
  Complex odd{}, even{};
  for (size_t j = 1; j + 1 < n; j += 2)
    odd += v[j] * std::polar(1.0, -q * (x0 + h * static_cast<double>(j)));
  for (size_t j = 2; j + 1 < n; j += 2)
    even += v[j] * std::polar(1.0, -q * (x0 + h * static_cast<double>(j)));
  const Complex first = v.front() * std::polar(1.0, -q * x0);
  const Complex last =
      v.back() * std::polar(1.0, -q * (x0 + h * static_cast<double>(n - 1)));
  return h / 3.0 * (first + last + 4.0 * odd + 2.0 * even);
}

std::vector<Complex> cumulative_integral(std::span<const Complex> v, double h) {
  const size_t n = v.size();
  if (n < 3)
    throw std::invalid_argument("cumulative_integral: need >= 3 nodes");
  std::vector<Complex> out(n);
  out[0] = Complex{0.0, 0.0};
  out[1] = h * (5.0 * v[0] + 8.0 * v[1] - v[2]) / 12.0;
  for (size_t j = 2; j < n; ++j)
    out[j] = out[j - 2] + h / 3.0 * (v[j - 2] + 4.0 * v[j - 1] + v[j]);
  return out;
}

Complex phase_integral(double theta, double L) {
  const double u = 0.5 * theta * L;
  double sinc;
  if (std::abs(u) < 1e-4) {
    const double u2 = u * u;
    sinc = 1.0 - u2 / 6.0 * (1.0 - u2 / 20.0);
  } else {
    sinc = std::sin(u) / u;
  }
  return L * sinc * Complex{std::cos(u), std::sin(u)};
}

}  // namespace nlslab
