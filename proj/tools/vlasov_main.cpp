// Command-line front end: run a configured scenario, list the catalog, or run
// the fast invariant self-test battery.
#include "vlasov/config.hpp"
#include "vlasov/output.hpp"
#include "vlasov/scenario.hpp"
#include "vlasov/simd/kernels.hpp"
#include "vlasov/spline.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace {

int do_run(const std::string& config_path, const std::string& output_override) {
  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "error: cannot read config file '" << config_path << "'\n";
    return 1;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  vlasov::RunConfig cfg = vlasov::parse_config(buf.str());
  if (!output_override.empty()) cfg.output_dir = output_override;

  vlasov::Scenario sc = vlasov::make_scenario(cfg.scenario);
  const double v_max = cfg.v_max_set ? cfg.v_max : sc.v_max;
  const int n = cfg.n_cells();
  auto grid = vlasov::make_phase_space_grid(n, sc.domain_length, 0.0, n, -v_max, v_max, cfg.order - 1);

  vlasov::RunOptions opt;
  opt.step.tau = cfg.tau;
  opt.step.backend = cfg.backend;
  opt.step.limiter_enabled = cfg.limiter;
  opt.t_end = cfg.t_end;
  opt.snapshot_times = cfg.snapshot_times;
  opt.field_solve = sc.field_solve;
  opt.nodal_snapshots = cfg.snapshot_nodal;

  vlasov::RunResult result = vlasov::run(vlasov::sample_scenario(sc, grid), opt);

  vlasov::RunInfo info;
  info.v_max_resolved = v_max;
  info.domain_length = sc.domain_length;
  info.simd_backend = vlasov::simd::active().name;
  info.limited_cells = result.limiter.limited_cells;
  info.clamped_cells = result.limiter.clamped_cells;
  auto written = vlasov::write_outputs(result.records, result.snapshots, cfg, info, cfg.output_dir);

  std::cout << "scenario " << cfg.scenario << ": " << result.records.size() << " records, "
            << result.snapshots.size() << " snapshots -> " << cfg.output_dir << "\n";
  for (const auto& p : written) std::cout << "  " << p.string() << "\n";
  return 0;
}

int do_scenarios() {
  for (const auto& name : vlasov::scenario_names()) {
    const auto sc = vlasov::make_scenario(name);
    std::cout << name << "\t" << sc.description << "\n";
  }
  return 0;
}

// Fast structural self-tests: quadrature exactness, transform round trips,
// stencil conservation, spline interpolation and the uniform fixed point.
int do_check() {
  using namespace vlasov;
  int failures = 0;
  auto report = [&](const char* name, bool ok, double measured) {
    std::cout << (ok ? "ok      " : "FAILED  ") << name << "  (|err| = " << measured << ")\n";
    if (!ok) ++failures;
  };

  {
    double worst = 0.0;
    for (int k = 0; k <= 9; ++k) {
      const auto basis = build_basis(k);
      for (int deg = 0; deg <= 2 * k + 1; ++deg) {
        double q = 0.0;
        for (int i = 0; i <= k; ++i) q += basis.weights[i] * std::pow(basis.nodes[i], deg);
        const double exact = (deg % 2 == 0) ? 2.0 / (deg + 1) : 0.0;
        worst = std::max(worst, std::abs(q - exact));
      }
    }
    report("quadrature exactness (k <= 9, deg <= 2k+1)", worst < 1e-12, worst);
  }
  {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    for (int k = 0; k <= 9; ++k) {
      const auto basis = build_basis(k);
      const int p = k + 1;
      std::vector<double> x(p), m(p, 0.0), y(p, 0.0);
      for (auto& v : x) v = u(rng);
      for (int j = 0; j < p; ++j)
        for (int i = 0; i < p; ++i) m[j] += basis.nodal_to_modal[j * p + i] * x[i];
      for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) y[i] += basis.modal_to_nodal[i * p + j] * m[j];
      for (int i = 0; i < p; ++i) worst = std::max(worst, std::abs(y[i] - x[i]));
    }
    report("nodal<->modal round trip", worst < 1e-12, worst);
  }
  {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int k = 0; k <= 4; ++k) {
      const auto basis = build_basis(k);
      const int p = k + 1;
      for (int trial = 0; trial < 8; ++trial) {
        const auto st = build_translation_stencil((u(rng) * 4.0 - 2.0), 1.0, basis);
        for (int b = 0; b < p; ++b) {
          const double row0 = st.left(0, b) + st.right(0, b);
          worst = std::max(worst, std::abs(row0 - (b == 0 ? 1.0 : 0.0)));
        }
      }
    }
    report("stencil mass row", worst < 1e-13, worst);
  }
  {
    std::mt19937 rng(13);
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<double> samples(64);
    for (auto& s : samples) s = g(rng);
    const auto sp = build_periodic_spline(samples);
    double worst = 0.0;
    for (int i = 0; i < 64; ++i) worst = std::max(worst, std::abs(sp.eval(i) - samples[i]));
    report("periodic spline interpolation", worst < 1e-11, worst);
  }
  {
    const auto sc = make_scenario("uniform");
    auto grid = make_phase_space_grid(8, sc.domain_length, 0.0, 16, -6.0, 6.0, 2);
    auto f = sample_scenario(sc, grid);
    const auto before = f.values;
    RunOptions opt;
    opt.step.tau = 0.1;
    opt.t_end = 0.5;
    auto result = run(std::move(f), opt);
    double worst = 0.0;
    for (std::size_t i = 0; i < before.size(); ++i)
      worst = std::max(worst, std::abs(result.f.values[i] - before[i]));
    report("uniform scenario fixed point (5 steps)", worst < 1e-12, worst);
  }

  std::cout << (failures == 0 ? "all checks passed" : "SELF-TEST FAILURES") << "\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structure-preserving semi-Lagrangian dG solver for the 1x1v Vlasov-Poisson system"};
  app.require_subcommand(1);

  std::string config_path, output_override;
  auto* run_cmd = app.add_subcommand("run", "run a scenario from a config file");
  run_cmd->add_option("--config", config_path, "path to a key = value config file")->required();
  run_cmd->add_option("--output", output_override, "output directory (overrides the config)");

  auto* scenarios_cmd = app.add_subcommand("scenarios", "list the scenario catalog");
  auto* check_cmd = app.add_subcommand("check", "run the fast invariant self-test suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) return do_run(config_path, output_override);
    if (scenarios_cmd->parsed()) return do_scenarios();
    if (check_cmd->parsed()) return do_check();
  } catch (const vlasov::BlowUpError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const vlasov::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
