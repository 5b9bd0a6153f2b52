#include "vlasov/distribution.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

using namespace vlasov;

namespace {

double maxwellian(double v) { return std::exp(-0.5 * v * v) / std::sqrt(2.0 * M_PI); }

double discrete_mass(const DistributionFunction& f) {
  const auto& g = f.grid;
  const int p = g.p();
  double s = 0.0;
  for (int ix = 0; ix < g.x.n_cells; ++ix)
    for (int iv = 0; iv < g.v.n_cells; ++iv)
      for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) s += g.basis.weights[a] * g.basis.weights[b] * f.at(ix, iv, a, b);
  return 0.25 * g.x.cell_width() * g.v.cell_width() * s;
}

}  // namespace

TEST_CASE("constant initial data samples to constant values") {
  auto grid = make_phase_space_grid(4, 1.0, 0.0, 4, -2.0, 2.0, 2);
  auto f = sample_initial_condition([](double, double) { return 1.0; }, grid);
  for (double v : f.values) CHECK(v == 1.0);
}

TEST_CASE("linear initial data is reproduced exactly") {
  auto grid = make_phase_space_grid(5, 2.0, 0.0, 4, -1.0, 1.0, 1);
  auto f = sample_initial_condition([](double x, double) { return x; }, grid);
  const int p = 2;
  for (int ix = 0; ix < 5; ++ix) {
    double avg = 0.0;
    for (int a = 0; a < p; ++a) {
      const double x = grid.x.node_coord(ix, a, grid.basis);
      CHECK(f.at(ix, 0, a, 0) == doctest::Approx(x).epsilon(1e-14));
      avg += 0.5 * grid.basis.weights[a] * f.at(ix, 0, a, 0);
    }
    const double mid = grid.x.cell_left(ix) + 0.5 * grid.x.cell_width();
    CHECK(avg == doctest::Approx(mid).epsilon(1e-13));
  }
}

TEST_CASE("Maxwellian mass matches the quadrature oracle") {
  const double L = 4.0 * M_PI;
  auto grid = make_phase_space_grid(16, L, 0.0, 64, -6.0, 6.0, 2);
  auto f = sample_initial_condition([](double, double v) { return maxwellian(v); }, grid);
  const double mass = discrete_mass(f);
  // oracle: scalar adaptive quadrature including the tail truncation
  const double vint = oracles::integrate(maxwellian, -6.0, 6.0, 1e-14);
  CHECK(mass == doctest::Approx(L * vint).epsilon(1e-10));
  CHECK(std::abs(mass - L) / L < 1e-8);
}

TEST_CASE("non-finite samples are rejected with location info") {
  auto grid = make_phase_space_grid(4, 1.0, 0.0, 4, -1.0, 1.0, 1);
  auto bad = [](double x, double v) { return (x > 0.5 && v > 0.0) ? std::nan("") : 1.0; };
  CHECK_THROWS_WITH_AS(sample_initial_condition(bad, grid),
                       doctest::Contains("non-finite value at x="), std::invalid_argument);
}

TEST_CASE("evaluate returns constants everywhere and nodal values at nodes") {
  auto grid = make_phase_space_grid(6, 3.0, 0.0, 5, -2.0, 2.0, 3);
  auto f = sample_initial_condition([](double, double) { return 4.25; }, grid);
  for (double x : {-1.0, 0.0, 0.4, 2.999, 17.0}) CHECK(evaluate(f, x, 0.3) == doctest::Approx(4.25).epsilon(1e-13));

  auto g2 = sample_initial_condition([](double x, double v) { return std::sin(x) * std::exp(-v * v); }, grid);
  for (int ix : {0, 3})
    for (int iv : {1, 4})
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          const double x = grid.x.node_coord(ix, a, grid.basis);
          const double v = grid.v.node_coord(iv, b, grid.basis);
          CHECK(evaluate(g2, x, v) == doctest::Approx(g2.at(ix, iv, a, b)).epsilon(1e-13));
        }
}

TEST_CASE("evaluate rejects v outside the velocity domain") {
  auto grid = make_phase_space_grid(4, 1.0, 0.0, 4, -2.0, 2.0, 1);
  auto f = sample_initial_condition([](double, double) { return 1.0; }, grid);
  CHECK_THROWS_AS(evaluate(f, 0.5, 2.5), std::domain_error);
  CHECK_THROWS_AS(evaluate(f, 0.5, -2.0000001), std::domain_error);
  CHECK_NOTHROW(evaluate(f, 0.5, 2.0));  // boundary belongs to the last cell
}

TEST_CASE("tensor polynomials of degree <= k are reproduced exactly") {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto grid = make_phase_space_grid(3, 1.5, 0.0, 3, -1.0, 2.0, 2);
  auto poly = [](double x, double v) { return (1.0 + 2.0 * x + 0.5 * x * x) * (0.3 - v + v * v); };
  auto f = sample_initial_condition(poly, grid);
  for (int trial = 0; trial < 50; ++trial) {
    const double x = 1.5 * u(rng);
    const double v = -1.0 + 3.0 * u(rng);
    CHECK(evaluate(f, x, v) == doctest::Approx(poly(x, v)).epsilon(1e-12));
  }
}

TEST_CASE("smooth data is reproduced at order k+1") {
  const double L = 2.0 * M_PI;
  auto f0 = [&](double x, double v) { return std::sin(2.0 * M_PI * x / L) * std::exp(-0.5 * v * v); };
  double errs[2];
  int idx = 0;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n : {8, 16}) {
    auto grid = make_phase_space_grid(n, L, 0.0, n, -4.0, 4.0, 2);
    auto f = sample_initial_condition(f0, grid);
    double worst = 0.0;
    std::mt19937 rng_local(13);
    for (int trial = 0; trial < 200; ++trial) {
      const double x = L * u(rng_local);
      const double v = -4.0 + 8.0 * u(rng_local);
      worst = std::max(worst, std::abs(evaluate(f, x, v) - f0(x, v)));
    }
    errs[idx++] = worst;
  }
  const double order = std::log2(errs[0] / errs[1]);
  CHECK(order > 2.2);  // ~3 for k=2
}
