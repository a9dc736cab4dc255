#include "nlslab/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

#include "nlslab/born.hpp"
#include "nlslab/direct.hpp"

namespace nlslab {

namespace {

int effective_grid(const ScatteringConfig& cfg, int slab_m) {
  // keep the per-wavelength resolution when the slab is lengthened
  const int mult = std::max(1, slab_m > 0 ? slab_m : cfg.m);
  return cfg.grid_size * mult;
}

}  // namespace

Amplitudes evaluate_method(const ScatteringConfig& cfg, Method method,
                           double k_over_K, int slab_m) {
  const double k = k_over_K * cfg.K;
  const PotentialSpec pot = cfg.potential_at(k, slab_m);
  const NonlinearitySpec nl = cfg.nonlinearity_at(k);
  const int grid = effective_grid(cfg, slab_m);
  switch (method) {
    case Method::Direct: {
      SolveOptions opt;
      opt.grid_size = grid;
      opt.tol = cfg.solver_tol;
      return direct_scattering(pot, nl, k, cfg.amplitude_right,
                               cfg.amplitude_left, opt)
          .jost;
    }
    case Method::Born1:
      if (pot.sampled)
        return born1_general(pot, nl, cfg.amplitude_right, cfg.amplitude_left,
                             k, grid);
      return born1_fourier(perturbative_inputs(pot, nl, cfg.amplitude_right,
                                               cfg.amplitude_left, k));
    case Method::Born2:
      return born2_general(pot, nl, cfg.amplitude_right, cfg.amplitude_left, k,
                           grid);
    case Method::Born2Resonance: {
      const double s_real = 2.0 * k / pot.K;
      const int s = static_cast<int>(std::lround(s_real));
      if (s < 1 || std::abs(s_real - s) > 1e-9 * std::max(1.0, s_real))
        throw std::invalid_argument(
            "born2res needs a resonant wavenumber k = s K / 2");
      return born2_resonance(resonance_inputs(pot, nl, cfg.amplitude_right,
                                              cfg.amplitude_left, s));
    }
  }
  throw std::logic_error("evaluate_method: unknown method");
}

std::vector<SweepRow> run_sweep(const ScatteringConfig& cfg,
                                const SweepRequest& req) {
  if (!(req.k_over_K_lo > 0.0))
    throw std::invalid_argument("run_sweep: k range must start above 0");
  if (req.points < 2) throw std::invalid_argument("run_sweep: need >= 2 points");
  if (!(req.k_over_K_hi > req.k_over_K_lo))
    throw std::invalid_argument("run_sweep: empty k range");

  std::vector<double> ks;
  if (req.method == Method::Born2Resonance) {
    // resonant grid only: k/K = s/2 inside [lo, hi]
    const PotentialSpec probe = cfg.potential_at(cfg.K, req.slab_m);
    const int s_hi = static_cast<int>(std::floor(2.0 * req.k_over_K_hi + 1e-9));
    const ResonantSet set = resonant_wavenumbers(probe, std::max(1, s_hi));
    for (const auto& [s, k] : set.points) {
      const double kk = k / cfg.K;
      if (kk >= req.k_over_K_lo - 1e-12 && kk <= req.k_over_K_hi + 1e-12)
        ks.push_back(kk);
    }
    if (ks.empty())
      throw std::invalid_argument("run_sweep: no resonant k in range");
  } else {
    ks.resize(static_cast<size_t>(req.points));
    for (int j = 0; j < req.points; ++j)
      ks[static_cast<size_t>(j)] =
          req.k_over_K_lo + (req.k_over_K_hi - req.k_over_K_lo) *
                                static_cast<double>(j) /
                                static_cast<double>(req.points - 1);
  }

  std::vector<SweepRow> rows(ks.size());
  std::exception_ptr first_error;
  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};

  auto work = [&]() {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= ks.size() || failed.load()) return;
      try {
        rows[i].k_over_K = ks[i];
        rows[i].amps = evaluate_method(cfg, req.method, ks[i], req.slab_m);
      } catch (...) {
        bool expected = false;
        if (failed.compare_exchange_strong(expected, true))
          first_error = std::current_exception();
        return;
      }
    }
  };

  const int workers = std::max(1, req.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failed.load()) std::rethrow_exception(first_error);
  return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "k_over_K,Re_Rr,Im_Rr,Re_Rl,Im_Rl,Re_Tr,Im_Tr,Re_Tl,Im_Tl,"
        "abs_Rr,abs_Rl,abs_Tr_minus_1,abs_Tl_minus_1,abs_Tr_minus_Tl\n";
  char buf[32];
  auto put = [&](double v, char sep) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << buf << sep;
  };
  for (const SweepRow& r : rows) {
    const Amplitudes& a = r.amps;
    put(r.k_over_K, ',');
    put(a.Rr.real(), ',');
    put(a.Rr.imag(), ',');
    put(a.Rl.real(), ',');
    put(a.Rl.imag(), ',');
    put(a.Tr.real(), ',');
    put(a.Tr.imag(), ',');
    put(a.Tl.real(), ',');
    put(a.Tl.imag(), ',');
    put(std::abs(a.Rr), ',');
    put(std::abs(a.Rl), ',');
    put(std::abs(a.Tr - 1.0), ',');
    put(std::abs(a.Tl - 1.0), ',');
    put(std::abs(a.Tr - a.Tl), '\n');
  }
}

}  // namespace nlslab
