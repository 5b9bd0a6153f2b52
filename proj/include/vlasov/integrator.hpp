#pragma once

#include "vlasov/diagnostics.hpp"
#include "vlasov/distribution.hpp"
#include "vlasov/fields.hpp"
#include "vlasov/sldg.hpp"

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace vlasov {

enum class AdvectionBackend { sldg, spline };

struct StepConfig {
  double tau = 0.1;
  AdvectionBackend backend = AdvectionBackend::sldg;
  bool limiter_enabled = false;
};

// Stencil caches and line buffers shared across sweeps. The x stencils are
// keyed by the shift value and persist across steps (tau and the velocity
// nodes are fixed, so the first step fills the cache); v stencils depend on
// the field and are rebuilt every step.
class AdvectionWorkspace {
 public:
  const TranslationStencil& x_stencil(double delta, double cell_width, const DgBasis& basis);
  const TranslationStencil& v_stencil(double delta, double cell_width, const DgBasis& basis);
  void begin_v_sweep() { v_cache_.clear(); }

  LineWorkspace line_ws;
  std::vector<double> line;
  LimiterStats limiter_stats;

 private:
  std::unordered_map<std::uint64_t, TranslationStencil> x_cache_, v_cache_;
};

// Split sub-flow of v * df/dx: every velocity row is translated by v * dt.
void advect_x(DistributionFunction& f, double dt, const StepConfig& cfg, AdvectionWorkspace& ws);

// Split sub-flow of E * df/dv: every spatial column is translated by
// E(x_node) * dt; with the limiter enabled (sldg only) each cell is limited
// after the sweep.
void advect_v(DistributionFunction& f, const FieldState& field, double dt, const StepConfig& cfg,
              AdvectionWorkspace& ws);

// One Strang step: half x-advection, field solve, full v-advection, half
// x-advection. Returns the mid-step field (used for the energy diagnostics of
// this step). field_solve = false freezes E at zero (free streaming).
FieldState strang_step(DistributionFunction& f, const StepConfig& cfg, AdvectionWorkspace& ws,
                       bool field_solve = true);

struct BlowUpError : std::runtime_error {
  explicit BlowUpError(long long step_index);
  long long step = 0;
};

struct RunOptions {
  StepConfig step;
  double t_end = 1.0;
  double diag_interval = 0.0;  // 0 means every step; otherwise a positive multiple of tau
  std::vector<double> snapshot_times;
  bool field_solve = true;
  bool nodal_snapshots = false;
};

struct Snapshot {
  double time = 0.0;
  long long step_index = 0;
  int n_x = 0, n_v = 0;
  std::vector<double> cell_averages;  // [iv * n_x + ix]
  std::vector<double> nodal;          // full copy of f.values when requested
};

struct RunResult {
  std::vector<InvariantRecord> records;
  std::vector<Snapshot> snapshots;
  DistributionFunction f;
  LimiterStats limiter;
};

// Time loop: round(t_end / tau) Strang steps with diagnostics every
// diag-interval step and at the final step; aborts with BlowUpError on the
// first non-finite value. Deterministic for a fixed configuration.
RunResult run(DistributionFunction f0, const RunOptions& options);

Snapshot take_snapshot(const DistributionFunction& f, double time, long long step_index, bool with_nodal);

}  // namespace vlasov
