#include "vlasov/integrator.hpp"

#include "vlasov/spline.hpp"

#include <bit>
#include <cmath>
#include <set>
#include <string>

namespace vlasov {

namespace {

const TranslationStencil& cached_stencil(std::unordered_map<std::uint64_t, TranslationStencil>& cache,
                                         double delta, double cell_width, const DgBasis& basis) {
  const std::uint64_t key = std::bit_cast<std::uint64_t>(delta);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_translation_stencil(delta, cell_width, basis)).first;
  return it->second;
}

}  // namespace

const TranslationStencil& AdvectionWorkspace::x_stencil(double delta, double cell_width, const DgBasis& basis) {
  return cached_stencil(x_cache_, delta, cell_width, basis);
}

const TranslationStencil& AdvectionWorkspace::v_stencil(double delta, double cell_width, const DgBasis& basis) {
  return cached_stencil(v_cache_, delta, cell_width, basis);
}

namespace {

void limit_line(std::span<double> line, const DgBasis& basis, LimiterStats& stats) {
  const int p = basis.p();
  const int n = static_cast<int>(line.size()) / p;
  for (int i = 0; i < n; ++i) {
    auto cell = line.subspan(static_cast<std::size_t>(i) * p, p);
    limit_positivity(cell, cell_average(cell, basis), stats);
  }
}

}  // namespace

void advect_x(DistributionFunction& f, double dt, const StepConfig& cfg, AdvectionWorkspace& ws) {
  if (dt == 0.0) return;
  const PhaseSpaceGrid& g = f.grid;
  const int p = g.p();
  const int nx = g.x.n_cells;
  const double hx = g.x.cell_width();

  if (cfg.backend == AdvectionBackend::sldg) {
    ws.line.resize(static_cast<std::size_t>(nx) * p);
    for (int iv = 0; iv < g.v.n_cells; ++iv)
      for (int b = 0; b < p; ++b) {
        const double vq = g.v.node_coord(iv, b, g.basis);
        const TranslationStencil& st = ws.x_stencil(vq * dt, hx, g.basis);
        for (int ix = 0; ix < nx; ++ix)
          for (int a = 0; a < p; ++a) ws.line[static_cast<std::size_t>(ix) * p + a] = f.at(ix, iv, a, b);
        apply_sldg_translation(ws.line, st, g.basis, ws.line_ws);
        if (cfg.limiter_enabled) limit_line(ws.line, g.basis, ws.limiter_stats);
        for (int ix = 0; ix < nx; ++ix)
          for (int a = 0; a < p; ++a) f.at(ix, iv, a, b) = ws.line[static_cast<std::size_t>(ix) * p + a];
      }
  } else {
    // spline backend: one mid-cell sample per cell (order 1)
    ws.line.resize(nx);
    for (int iv = 0; iv < g.v.n_cells; ++iv) {
      const double vq = g.v.node_coord(iv, 0, g.basis);
      for (int ix = 0; ix < nx; ++ix) ws.line[ix] = f.at(ix, iv, 0, 0);
      apply_spline_translation(ws.line, vq * dt, hx);
      for (int ix = 0; ix < nx; ++ix) f.at(ix, iv, 0, 0) = ws.line[ix];
    }
  }
}

void advect_v(DistributionFunction& f, const FieldState& field, double dt, const StepConfig& cfg,
              AdvectionWorkspace& ws) {
  if (dt == 0.0) return;
  const PhaseSpaceGrid& g = f.grid;
  const int p = g.p();
  const int nv = g.v.n_cells;
  const double hv = g.v.cell_width();
  ws.begin_v_sweep();

  if (cfg.backend == AdvectionBackend::sldg) {
    ws.line.resize(static_cast<std::size_t>(nv) * p);
    for (int ix = 0; ix < g.x.n_cells; ++ix)
      for (int a = 0; a < p; ++a) {
        const double eq = field.e_nodal[static_cast<std::size_t>(ix) * p + a];
        const double delta = eq * dt;
        if (delta == 0.0) continue;
        const TranslationStencil& st = ws.v_stencil(delta, hv, g.basis);
        for (int iv = 0; iv < nv; ++iv)
          for (int b = 0; b < p; ++b) ws.line[static_cast<std::size_t>(iv) * p + b] = f.at(ix, iv, a, b);
        apply_sldg_translation(ws.line, st, g.basis, ws.line_ws);
        if (cfg.limiter_enabled) limit_line(ws.line, g.basis, ws.limiter_stats);
        for (int iv = 0; iv < nv; ++iv)
          for (int b = 0; b < p; ++b) f.at(ix, iv, a, b) = ws.line[static_cast<std::size_t>(iv) * p + b];
      }
  } else {
    ws.line.resize(nv);
    for (int ix = 0; ix < g.x.n_cells; ++ix) {
      const double delta = field.e_nodal[ix] * dt;
      if (delta == 0.0) continue;
      for (int iv = 0; iv < nv; ++iv) ws.line[iv] = f.at(ix, iv, 0, 0);
      apply_spline_translation(ws.line, delta, hv);
      for (int iv = 0; iv < nv; ++iv) f.at(ix, iv, 0, 0) = ws.line[iv];
    }
  }
}

FieldState strang_step(DistributionFunction& f, const StepConfig& cfg, AdvectionWorkspace& ws,
                       bool field_solve) {
  advect_x(f, 0.5 * cfg.tau, cfg, ws);
  FieldState field = field_solve ? solve_poisson(compute_density(f), f.grid.x, f.grid.basis)
                                 : zero_field(f.grid.x.n_cells, f.grid.p());
  advect_v(f, field, cfg.tau, cfg, ws);
  advect_x(f, 0.5 * cfg.tau, cfg, ws);
  return field;
}

BlowUpError::BlowUpError(long long step_index)
    : std::runtime_error("non-finite values in f after step " + std::to_string(step_index)),
      step(step_index) {}

Snapshot take_snapshot(const DistributionFunction& f, double time, long long step_index, bool with_nodal) {
  const PhaseSpaceGrid& g = f.grid;
  const int p = g.p();
  Snapshot snap;
  snap.time = time;
  snap.step_index = step_index;
  snap.n_x = g.x.n_cells;
  snap.n_v = g.v.n_cells;
  snap.cell_averages.assign(static_cast<std::size_t>(g.x.n_cells) * g.v.n_cells, 0.0);
  for (int ix = 0; ix < g.x.n_cells; ++ix)
    for (int iv = 0; iv < g.v.n_cells; ++iv) {
      double s = 0.0;
      for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) s += g.basis.weights[a] * g.basis.weights[b] * f.at(ix, iv, a, b);
      snap.cell_averages[static_cast<std::size_t>(iv) * g.x.n_cells + ix] = 0.25 * s;
    }
  if (with_nodal) snap.nodal = f.values;
  return snap;
}

RunResult run(DistributionFunction f0, const RunOptions& options) {
  const StepConfig& cfg = options.step;
  if (!(cfg.tau > 0.0)) throw std::invalid_argument("run: tau must be positive");
  if (!(options.t_end > 0.0)) throw std::invalid_argument("run: t_end must be positive");
  const long long n_steps = std::max(1LL, std::llround(options.t_end / cfg.tau));

  long long record_stride = 1;
  if (options.diag_interval > 0.0) {
    const double ratio = options.diag_interval / cfg.tau;
    record_stride = std::llround(ratio);
    if (record_stride < 1 || std::abs(ratio - static_cast<double>(record_stride)) > 1e-9)
      throw std::invalid_argument("run: diag_interval must be a positive multiple of tau");
  }

  std::set<long long> snap_steps;
  for (double ts : options.snapshot_times) {
    long long s = std::llround(ts / cfg.tau);
    if (s < 0) s = 0;
    if (s > n_steps) s = n_steps;
    snap_steps.insert(s);
  }

  RunResult result{{}, {}, std::move(f0), {}};
  for (double v : result.f.values)
    if (!std::isfinite(v)) throw BlowUpError(0);
  AdvectionWorkspace ws;

  FieldState field = options.field_solve
                         ? solve_poisson(compute_density(result.f), result.f.grid.x, result.f.grid.basis)
                         : zero_field(result.f.grid.x.n_cells, result.f.grid.p());
  result.records.push_back(compute_invariants(result.f, field, 0.0));
  if (snap_steps.count(0))
    result.snapshots.push_back(take_snapshot(result.f, 0.0, 0, options.nodal_snapshots));

  for (long long s = 1; s <= n_steps; ++s) {
    field = strang_step(result.f, cfg, ws, options.field_solve);
    for (double v : result.f.values)
      if (!std::isfinite(v)) throw BlowUpError(s);
    const double t = static_cast<double>(s) * cfg.tau;
    if (s % record_stride == 0 || s == n_steps)
      result.records.push_back(compute_invariants(result.f, field, t));
    if (snap_steps.count(s))
      result.snapshots.push_back(take_snapshot(result.f, t, s, options.nodal_snapshots));
  }
  result.limiter = ws.limiter_stats;
  return result;
}

}  // namespace vlasov
