#ifndef NLSLAB_SWEEP_HPP
#define NLSLAB_SWEEP_HPP

#include <iosfwd>
#include <vector>

#include "nlslab/config.hpp"
#include "nlslab/types.hpp"

namespace nlslab {

struct SweepRequest {
  Method method = Method::Born2;
  double k_over_K_lo = 0.5, k_over_K_hi = 4.5;
  int points = 801;
  int workers = 1;
  int slab_m = 0;  // override thickness to 2 pi m / K; grid scales with m
};

struct SweepRow {
  double k_over_K = 0.0;
  Amplitudes amps;
};

/// Rows in ascending k, computed by a worker pool over the k grid (rows are
/// independent; output is identical for any worker count).  For the
/// resonance method the grid is the resonant set inside [lo, hi] instead of
/// the uniform grid.
std::vector<SweepRow> run_sweep(const ScatteringConfig& cfg,
                                const SweepRequest& req);

/// CSV with the fixed header
/// k_over_K,Re_Rr,Im_Rr,Re_Rl,Im_Rl,Re_Tr,Im_Tr,Re_Tl,Im_Tl,
/// abs_Rr,abs_Rl,abs_Tr_minus_1,abs_Tl_minus_1,abs_Tr_minus_Tl
/// and 17-significant-digit values; byte-identical across runs.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

/// One amplitude computation at k (in k/K units) with the requested method.
Amplitudes evaluate_method(const ScatteringConfig& cfg, Method method,
                           double k_over_K, int slab_m = 0);

}  // namespace nlslab

#endif
