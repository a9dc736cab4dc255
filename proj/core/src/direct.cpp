#include "nlslab/direct.hpp"

#include <cmath>

#include "nlslab/ode.hpp"
#include "nlslab/quadrature.hpp"

namespace nlslab {

namespace {

std::vector<double> uniform_grid(double L, int intervals) {
  std::vector<double> x(static_cast<size_t>(intervals) + 1);
  for (int j = 0; j <= intervals; ++j)
    x[static_cast<size_t>(j)] = L * static_cast<double>(j) /
                                static_cast<double>(intervals);
  x.back() = L;
  return x;
}

}  // namespace

FieldSolution solve_field(const PotentialSpec& pot, const NonlinearitySpec& nl,
                          const Incidence& inc, int grid_size, double tol) {
  SolveOptions opt;
  opt.grid_size = grid_size;
  opt.tol = tol;
  return solve_field(pot, nl, inc, opt);
}

FieldSolution solve_field(const PotentialSpec& pot, const NonlinearitySpec& nl,
                          const Incidence& inc, const SolveOptions& opt) {
  pot.validate();
  inc.validate();
  if (opt.grid_size < 64)
    throw std::invalid_argument("solve_field: grid_size must be >= 64");
  if (opt.grid_size % 2 != 0)
    throw std::invalid_argument("solve_field: grid_size must be even");
  if (!(opt.tol > 0.0)) throw std::invalid_argument("solve_field: tol must be > 0");

  const double k = inc.k;
  const double k2 = k * k;
  const double zeta = pot.strength;
  const double gamma = nl.gamma;

  // state = (Re psi, Im psi, Re psi', Im psi'); psi'' = w(x, |psi|) psi with
  // w = strength f + gamma F(|psi|) - k^2 (complex for complex f).
  auto rhs = [&](double x, const std::array<double, 4>& y,
                 std::array<double, 4>& dy) {
    const Complex psi{y[0], y[1]};
    Complex w = -k2;
    if (zeta != 0.0) w += zeta * eval_f(pot, x);
    if (gamma != 0.0) w += gamma * nl.F(std::abs(psi));
    const Complex dd = w * psi;
    dy[0] = y[2];
    dy[1] = y[3];
    dy[2] = dd.real();
    dy[3] = dd.imag();
  };

  FieldSolution sol;
  sol.L = pot.L;
  sol.incidence = inc;
  sol.which = inc.direction == Direction::Right ? FieldKind::Xi : FieldKind::Zeta;
  sol.x = uniform_grid(pot.L, opt.grid_size);
  sol.psi.resize(sol.x.size());
  sol.dpsi.resize(sol.x.size());

  OdeOptions oo;
  oo.rel_tol = oo.abs_tol = opt.tol;
  oo.fixed_step = opt.fixed_step;
  DormandPrince5<4, decltype(rhs)> solver(rhs, oo);

  auto record = [&](size_t idx, const std::array<double, 4>& y,
                    const std::array<double, 4>&) {
    sol.psi[idx] = Complex{y[0], y[1]};
    sol.dpsi[idx] = Complex{y[2], y[3]};
  };

  const Complex N = inc.amplitude;
  if (sol.which == FieldKind::Xi) {
    const Complex dpsi0 = -iunit * k * N;
    std::array<double, 4> y0{N.real(), N.imag(), dpsi0.real(), dpsi0.imag()};
    solver.integrate(0.0, pot.L, y0, sol.x, record);
  } else {
    const Complex dpsiL = iunit * k * N;
    std::array<double, 4> y0{N.real(), N.imag(), dpsiL.real(), dpsiL.imag()};
    // integrate L -> 0; report grid must be monotone in that direction
    std::vector<double> rev(sol.x.rbegin(), sol.x.rend());
    const size_t last = sol.x.size() - 1;
    solver.integrate(pot.L, 0.0, y0, rev,
                     [&](size_t idx, const std::array<double, 4>& y,
                         const std::array<double, 4>& dy) {
                       record(last - idx, y, dy);
                     });
  }
  return sol;
}

JostPair jost_functions(const FieldSolution& sol) {
  const double k = sol.k();
  const size_t edge = sol.which == FieldKind::Xi ? sol.psi.size() - 1 : 0;
  const Complex v = sol.psi[edge];
  const Complex dv = sol.dpsi[edge];
  return JostPair{dv + iunit * k * v, dv - iunit * k * v};
}

Amplitudes amplitudes_jost(const FieldSolution& xi, const FieldSolution& zeta) {
  if (xi.which != FieldKind::Xi || zeta.which != FieldKind::Zeta)
    throw std::invalid_argument("amplitudes_jost: need one Xi and one Zeta field");
  const double k = xi.k();
  if (std::abs(k - zeta.k()) > 1e-12 * std::max(1.0, k))
    throw std::invalid_argument("amplitudes_jost: fields have different k");
  const double L = xi.L;
  const JostPair F = jost_functions(xi);
  const JostPair G = jost_functions(zeta);
  const double floor = 1e-12 * 2.0 * k;
  if (std::abs(F.minus) < floor || std::abs(G.plus) < floor)
    throw SpectralSingularityError(
        "amplitudes_jost: transmission pole (spectral singularity)");
  const Complex Nm = xi.incidence.amplitude;
  const Complex Np = zeta.incidence.amplitude;
  const Complex phase = std::polar(1.0, -k * L);
  Amplitudes a;
  a.method = Method::Direct;
  a.Rr = -phase * phase * F.plus / F.minus;
  a.Tr = -2.0 * iunit * k * phase * Nm / F.minus;
  a.Rl = -G.minus / G.plus;
  a.Tl = 2.0 * iunit * k * phase * Np / G.plus;
  return a;
}

std::pair<SourceTerm, SourceTerm> source_terms(const FieldSolution& xi,
                                               const FieldSolution& zeta,
                                               const PotentialSpec& pot,
                                               const NonlinearitySpec& nl) {
  const double k = xi.k();
  const double L = xi.L;
  const size_t n = xi.x.size();
  SourceTerm X, Y;
  X.x = xi.x;
  Y.x = zeta.x;
  X.values.resize(n);
  Y.values.resize(n);
  const Complex Nm = xi.incidence.amplitude;
  const Complex Np = zeta.incidence.amplitude;
  for (size_t j = 0; j < n; ++j) {
    const double x = xi.x[j];
    const Complex f = eval_f(pot, x);
    // |N- xihat| = |xi| and |N+ zetahat| = |zeta|: the phase factors are
    // unimodular, so the nonlinearity sees the raw field modulus.
    const Complex xihat = std::polar(1.0, k * x) * xi.psi[j] / Nm;
    const Complex zetahat = std::polar(1.0, k * (L - x)) * zeta.psi[j] / Np;
    X.values[j] =
        (nl.gamma * nl.F(std::abs(xi.psi[j])) + pot.strength * f) * xihat;
    Y.values[j] =
        (nl.gamma * nl.F(std::abs(zeta.psi[j])) + pot.strength * f) * zetahat;
  }
  const double h = xi.x[1] - xi.x[0];
  X.transform_at[0.0] = fourier_at(X.values, 0.0, h, 0.0);
  X.transform_at[2.0 * k] = fourier_at(X.values, 0.0, h, 2.0 * k);
  Y.transform_at[0.0] = fourier_at(Y.values, 0.0, h, 0.0);
  Y.transform_at[-2.0 * k] = fourier_at(Y.values, 0.0, h, -2.0 * k);
  return {std::move(X), std::move(Y)};
}

Amplitudes amplitudes_fourier(const SourceTerm& srcX, const SourceTerm& srcY,
                              double k) {
  const Complex twoik = 2.0 * iunit * k;
  const Complex X0 = srcX.transform_at.at(0.0);
  const Complex X2k = srcX.transform_at.at(2.0 * k);
  const Complex Y0 = srcY.transform_at.at(0.0);
  const Complex Ym2k = srcY.transform_at.at(-2.0 * k);
  const double floor = 1e-12 * 2.0 * k;
  if (std::abs(twoik - X0) < floor || std::abs(twoik - Y0) < floor)
    throw SpectralSingularityError(
        "amplitudes_fourier: transmission pole (spectral singularity)");
  Amplitudes a;
  a.method = Method::Direct;
  a.Rr = X2k / (twoik - X0);
  a.Tr = twoik / (twoik - X0);
  a.Rl = Ym2k / (twoik - Y0);
  a.Tl = twoik / (twoik - Y0);
  a.aux = TransformSet{X0, X2k, Y0, Ym2k};
  return a;
}

DirectResult direct_scattering(const PotentialSpec& pot,
                               const NonlinearitySpec& nl, double k,
                               Complex amplitude_right, Complex amplitude_left,
                               const SolveOptions& opt) {
  DirectResult r;
  r.xi = solve_field(pot, nl, {k, Direction::Right, amplitude_right}, opt);
  r.zeta = solve_field(pot, nl, {k, Direction::Left, amplitude_left}, opt);
  auto [X, Y] = source_terms(r.xi, r.zeta, pot, nl);
  r.transforms = TransformSet{X.transform_at.at(0.0), X.transform_at.at(2.0 * k),
                              Y.transform_at.at(0.0),
                              Y.transform_at.at(-2.0 * k)};
  r.fourier = amplitudes_fourier(X, Y, k);
  r.jost = amplitudes_jost(r.xi, r.zeta);
  r.jost.aux = r.transforms;
  return r;
}

}  // namespace nlslab
