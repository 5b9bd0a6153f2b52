#include "vlasov/integrator.hpp"

#include "vlasov/scenario.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <limits>

using namespace vlasov;

namespace {

double maxwellian(double v) { return std::exp(-0.5 * v * v) / std::sqrt(2.0 * M_PI); }

double l2_diff(const DistributionFunction& a, const DistributionFunction& b) {
  double s = 0.0;
  const int p = a.grid.p();
  for (int ix = 0; ix < a.grid.x.n_cells; ++ix)
    for (int iv = 0; iv < a.grid.v.n_cells; ++iv)
      for (int an = 0; an < p; ++an)
        for (int bn = 0; bn < p; ++bn) {
          const double d = a.at(ix, iv, an, bn) - b.at(ix, iv, an, bn);
          s += a.grid.basis.weights[an] * a.grid.basis.weights[bn] * d * d;
        }
  return std::sqrt(0.25 * a.grid.x.cell_width() * a.grid.v.cell_width() * s);
}

FieldState constant_field(int n_cells, int p, double e0) {
  FieldState f = zero_field(n_cells, p);
  for (int i = 0; i < n_cells; ++i) f.e_modal[static_cast<std::size_t>(i) * (p + 1)] = e0;
  for (double& e : f.e_nodal) e = e0;
  return f;
}

}  // namespace

TEST_CASE("advect_x leaves x-independent data unchanged") {
  auto grid = make_phase_space_grid(12, 3.0, 0.0, 12, -4.0, 4.0, 2);
  auto f = sample_initial_condition([](double, double v) { return maxwellian(v); }, grid);
  auto before = f.values;
  AdvectionWorkspace ws;
  StepConfig cfg;
  advect_x(f, 0.37, cfg, ws);
  for (std::size_t i = 0; i < before.size(); ++i) CHECK(std::abs(f.values[i] - before[i]) < 1e-13);
}

TEST_CASE("advect_x with dt=0 and advect_v with E=0 are identities") {
  auto grid = make_phase_space_grid(8, 2.0, 0.0, 8, -3.0, 3.0, 1);
  auto f = sample_initial_condition([](double x, double v) { return std::exp(-v * v) * (1.0 + 0.2 * x); }, grid);
  auto before = f.values;
  AdvectionWorkspace ws;
  StepConfig cfg;
  advect_x(f, 0.0, cfg, ws);
  CHECK(f.values == before);
  advect_v(f, zero_field(8, 2), 0.5, cfg, ws);
  CHECK(f.values == before);
}

TEST_CASE("free streaming matches the analytic characteristic solution") {
  const double L = 2.0 * M_PI;
  auto f0 = [&](double x, double v) { return (1.0 + 0.5 * std::sin(x)) * maxwellian(v); };
  double errs[2];
  int idx = 0;
  for (int n : {16, 32}) {
    auto grid = make_phase_space_grid(n, L, 0.0, n, -5.0, 5.0, 2);
    auto f = sample_initial_condition(f0, grid);
    AdvectionWorkspace ws;
    StepConfig cfg;
    const double t = 1.0;
    advect_x(f, t, cfg, ws);
    auto exact = sample_initial_condition([&](double x, double v) { return f0(x - v * t, v); }, grid);
    errs[idx++] = l2_diff(f, exact);
  }
  const double order = std::log2(errs[0] / errs[1]);
  CHECK(order > 2.6);  // k+1 = 3
  CHECK(order < 3.8);
}

TEST_CASE("constant field shifts momentum by exactly e0 dt mass") {
  auto grid = make_phase_space_grid(6, 2.0, 0.0, 32, -8.0, 8.0, 2);
  auto f = sample_initial_condition([](double, double v) { return maxwellian(v); }, grid);
  auto before = compute_invariants(f, zero_field(6, 3), 0.0);

  const double e0 = 0.35, dt = 0.2;
  AdvectionWorkspace ws;
  StepConfig cfg;
  advect_v(f, constant_field(6, 3, e0), dt, cfg, ws);
  auto after = compute_invariants(f, zero_field(6, 3), dt);

  CHECK(std::abs(after.mass - before.mass) <= 1e-12 * before.mass);
  const double dp = after.momentum - before.momentum;
  CHECK(std::abs(dp - e0 * dt * before.mass) <= 1e-11 * before.mass);

  // kinetic energy of a translated profile: delta^2/2 * mass + delta * momentum
  const double dke = after.kinetic_energy - before.kinetic_energy;
  const double expected = 0.5 * e0 * dt * e0 * dt * before.mass + e0 * dt * before.momentum;
  CHECK(std::abs(dke - expected) <= 1e-9 * before.kinetic_energy);
}

TEST_CASE("spatially uniform data is a strang_step fixed point") {
  auto sc = make_scenario("uniform");
  auto grid = make_phase_space_grid(10, sc.domain_length, 0.0, 20, -6.0, 6.0, 2);
  auto f = sample_scenario(sc, grid);
  auto before = f.values;
  AdvectionWorkspace ws;
  StepConfig cfg;
  auto field = strang_step(f, cfg, ws);
  for (std::size_t i = 0; i < before.size(); ++i) CHECK(std::abs(f.values[i] - before[i]) <= 1e-12 * before[i]);
  for (double e : field.e_nodal) CHECK(std::abs(e) < 1e-11);
}

TEST_CASE("one strang step conserves mass and momentum on landau data") {
  auto sc = make_scenario("landau_weak");
  auto grid = make_phase_space_grid(16, sc.domain_length, 0.0, 16, -8.0, 8.0, 2);
  auto f = sample_scenario(sc, grid);
  auto r0 = compute_invariants(f, zero_field(16, 3), 0.0);
  AdvectionWorkspace ws;
  StepConfig cfg;
  strang_step(f, cfg, ws);
  auto r1 = compute_invariants(f, zero_field(16, 3), cfg.tau);
  CHECK(std::abs(r1.mass - r0.mass) <= 1e-12 * r0.mass);
  // momentum per step against the thermal scale mass * v_thermal; exact via
  // the discrete Gauss law as long as the boundary tails vanish
  CHECK(std::abs(r1.momentum - r0.momentum) <= 1e-10 * r0.mass);
}

TEST_CASE("run produces one post-initial record for t_end = tau") {
  auto sc = make_scenario("uniform");
  auto grid = make_phase_space_grid(6, sc.domain_length, 0.0, 8, -6.0, 6.0, 1);
  RunOptions opt;
  opt.step.tau = 0.25;
  opt.t_end = 0.25;
  auto result = run(sample_scenario(sc, grid), opt);
  CHECK(result.records.size() == 2);
  CHECK(result.records[1].t == 0.25);
}

TEST_CASE("uniform run keeps every invariant fixed over 100 steps") {
  auto sc = make_scenario("uniform");
  auto grid = make_phase_space_grid(8, sc.domain_length, 0.0, 12, -6.0, 6.0, 2);
  RunOptions opt;
  opt.step.tau = 0.1;
  opt.t_end = 10.0;
  auto result = run(sample_scenario(sc, grid), opt);
  REQUIRE(result.records.size() == 101);
  auto series = relative_error_series(result.records);
  for (std::size_t i = 0; i < series.t.size(); ++i) {
    CHECK(std::abs(series.mass[i]) <= 1e-11);
    CHECK(std::abs(series.momentum[i]) <= 1e-11);
    CHECK(std::abs(series.total_energy[i]) <= 1e-11);
    CHECK(std::abs(series.l2_norm[i]) <= 1e-11);
    CHECK(std::abs(series.entropy[i]) <= 1e-11);
  }
}

TEST_CASE("blow-up detection aborts with the step index") {
  auto sc = make_scenario("uniform");
  auto grid = make_phase_space_grid(6, sc.domain_length, 0.0, 8, -6.0, 6.0, 1);
  auto f = sample_scenario(sc, grid);
  f.values[3] = std::numeric_limits<double>::infinity();
  RunOptions opt;
  opt.step.tau = 0.1;
  opt.t_end = 1.0;
  try {
    run(std::move(f), opt);
    FAIL("expected BlowUpError");
  } catch (const BlowUpError& e) {
    CHECK(e.step == 0);
    CHECK(doctest::Contains("step 0").checkWith(e.what()));
  }
}

TEST_CASE("snapshots land on the requested steps") {
  auto sc = make_scenario("uniform");
  auto grid = make_phase_space_grid(6, sc.domain_length, 0.0, 8, -6.0, 6.0, 1);
  RunOptions opt;
  opt.step.tau = 0.1;
  opt.t_end = 1.0;
  opt.snapshot_times = {0.0, 0.5, 1.0};
  auto result = run(sample_scenario(sc, grid), opt);
  REQUIRE(result.snapshots.size() == 3);
  CHECK(result.snapshots[0].step_index == 0);
  CHECK(result.snapshots[1].step_index == 5);
  CHECK(result.snapshots[2].step_index == 10);
  CHECK(result.snapshots[1].n_x == 6);
  CHECK(result.snapshots[1].n_v == 8);
  // uniform scenario: all cell averages equal the Maxwellian cell means, so
  // rows far from v=0 are smaller
  CHECK(result.snapshots[1].cell_averages[0] < result.snapshots[1].cell_averages[3 * 6]);
}

TEST_CASE("limiter keeps sweeps nonnegative and mass-conserving") {
  // a sub-cell cosine rings under projection, so the unlimited sweeps dip
  // negative and the limiter genuinely fires
  auto grid = make_phase_space_grid(16, 4.0 * M_PI, 0.0, 8, -5.0, 5.0, 2);
  auto f0 = [](double x, double v) {
    return std::exp(-0.5 * v * v) * (1.0 + 0.98 * std::cos(7.5 * x)) + 1e-9;
  };
  auto nodal_min = [](const DistributionFunction& f) {
    double mn = f.values[0];
    for (double v : f.values) mn = std::min(mn, v);
    return mn;
  };

  StepConfig cfg;
  AdvectionWorkspace ws;
  auto plain = sample_initial_condition(f0, grid);
  double plain_min = 0.0;
  for (int s = 0; s < 10; ++s) {
    advect_x(plain, 0.13, cfg, ws);
    plain_min = std::min(plain_min, nodal_min(plain));
  }
  REQUIRE(plain_min < -1e-9);  // the profile genuinely overshoots mid-run

  cfg.limiter_enabled = true;
  AdvectionWorkspace ws2;
  auto limited = sample_initial_condition(f0, grid);
  const double mass0 = compute_invariants(limited, zero_field(16, 3), 0.0).mass;
  for (int s = 0; s < 10; ++s) {
    advect_x(limited, 0.13, cfg, ws2);
    CHECK(nodal_min(limited) >= -1e-12);
  }
  CHECK(ws2.limiter_stats.limited_cells > 0);
  CHECK(ws2.limiter_stats.clamped_cells == 0);
  const double mass1 = compute_invariants(limited, zero_field(16, 3), 1.0).mass;
  CHECK(std::abs(mass1 - mass0) <= 1e-12 * mass0);
}

TEST_CASE("limiter applies after v sweeps as well") {
  auto grid = make_phase_space_grid(8, 2.0, 0.0, 14, -6.0, 6.0, 2);
  auto rough = sample_initial_condition(
      [](double, double v) { return std::exp(-0.5 * v * v) * (1.0 + 0.95 * std::cos(3.0 * v)) + 1e-8; }, grid);
  auto field = constant_field(8, 3, 0.45);

  StepConfig cfg;
  cfg.limiter_enabled = true;
  AdvectionWorkspace ws;
  const double mass0 = compute_invariants(rough, zero_field(8, 3), 0.0).mass;
  for (int s = 0; s < 10; ++s) {
    advect_v(rough, field, 0.1, cfg, ws);
    double mn = rough.values[0];
    for (double v : rough.values) mn = std::min(mn, v);
    CHECK(mn >= -1e-12);
  }
  CHECK(ws.limiter_stats.limited_cells > 0);
  CHECK(ws.limiter_stats.clamped_cells == 0);
  const double mass1 = compute_invariants(rough, zero_field(8, 3), 1.0).mass;
  CHECK(std::abs(mass1 - mass0) <= 1e-12 * mass0);
}

TEST_CASE("spline free streaming at CFL 5 stays within 1% L2 growth") {
  auto sc = make_scenario("free_streaming");
  const int n = 64;
  auto grid = make_phase_space_grid(n, sc.domain_length, 0.0, n, -6.0, 6.0, 0);
  const double h = sc.domain_length / n;
  RunOptions opt;
  opt.step.tau = 5.0 * h / 6.0;
  opt.step.backend = AdvectionBackend::spline;
  opt.t_end = 500.0 * opt.step.tau;
  opt.field_solve = false;
  auto result = run(sample_scenario(sc, grid), opt);
  REQUIRE(result.records.size() == 501);
  const double l20 = result.records.front().l2_norm;
  for (const auto& r : result.records) CHECK(r.l2_norm <= l20 * 1.01);
}

TEST_CASE("diag_interval must be a multiple of tau") {
  auto sc = make_scenario("uniform");
  auto grid = make_phase_space_grid(6, sc.domain_length, 0.0, 8, -6.0, 6.0, 1);
  RunOptions opt;
  opt.step.tau = 0.1;
  opt.t_end = 1.0;
  opt.diag_interval = 0.25;
  CHECK_THROWS_AS(run(sample_scenario(sc, grid), opt), std::invalid_argument);
  opt.diag_interval = 0.5;
  auto result = run(sample_scenario(sc, grid), opt);
  CHECK(result.records.size() == 3);  // t = 0, 0.5, 1.0
}
