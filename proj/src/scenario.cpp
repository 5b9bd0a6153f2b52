#include "vlasov/scenario.hpp"

#include <cmath>
#include <stdexcept>

namespace vlasov {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double maxwellian(double v) { return std::exp(-0.5 * v * v) / std::sqrt(kTwoPi); }

}  // namespace

Scenario make_scenario(const std::string& name) {
  Scenario sc;
  sc.name = name;
  if (name == "landau_weak") {
    const double alpha = 0.01, kx = 0.5;
    sc.domain_length = kTwoPi / kx;  // 4 pi
    sc.description = "weak Landau damping: Maxwellian with a 1% cosine density perturbation (k=0.5)";
    sc.f0 = [=](double x, double v) { return maxwellian(v) * (1.0 + alpha * std::cos(kx * x)); };
  } else if (name == "two_stream") {
    const double vbar = 2.4, alpha = 1e-3, kx = 0.2;
    sc.domain_length = kTwoPi / kx;  // 10 pi
    sc.description = "two-stream instability: counter-streaming beams at +-2.4 with a 0.1% seed (k=0.2)";
    sc.f0 = [=](double x, double v) {
      const double beams = 0.5 * (std::exp(-0.5 * (v - vbar) * (v - vbar)) + std::exp(-0.5 * (v + vbar) * (v + vbar)));
      return beams / std::sqrt(kTwoPi) * (1.0 + alpha * std::cos(kx * x));
    };
  } else if (name == "free_streaming") {
    const double alpha = 0.01, kx = 0.5;
    sc.domain_length = kTwoPi / kx;
    sc.field_solve = false;
    sc.description = "landau_weak profile with the field solve disabled (pure transport)";
    sc.f0 = [=](double x, double v) { return maxwellian(v) * (1.0 + alpha * std::cos(kx * x)); };
  } else if (name == "uniform") {
    sc.domain_length = kTwoPi / 0.5;
    sc.description = "spatially uniform Maxwellian; every step is a fixed point";
    sc.f0 = [](double, double v) { return maxwellian(v); };
  } else {
    throw std::invalid_argument("unknown scenario '" + name + "'");
  }
  return sc;
}

std::vector<std::string> scenario_names() { return {"landau_weak", "two_stream", "free_streaming", "uniform"}; }

DistributionFunction sample_scenario(const Scenario& scenario, const PhaseSpaceGrid& grid) {
  DistributionFunction f = sample_initial_condition(scenario.f0, grid);
  const int p = grid.p();
  double mass = 0.0;
  for (int ix = 0; ix < grid.x.n_cells; ++ix)
    for (int iv = 0; iv < grid.v.n_cells; ++iv)
      for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
          mass += grid.basis.weights[a] * grid.basis.weights[b] * f.at(ix, iv, a, b);
  mass *= 0.25 * grid.x.cell_width() * grid.v.cell_width();
  if (!(mass > 0.0)) throw std::invalid_argument("sample_scenario: initial data has non-positive mass");
  const double scale = grid.x.length / mass;
  for (double& v : f.values) v *= scale;
  return f;
}

}  // namespace vlasov
