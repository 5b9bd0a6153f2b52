#include "vlasov/scenario.hpp"

#include "vlasov/diagnostics.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>

using namespace vlasov;

TEST_CASE("unknown scenarios are rejected") {
  CHECK_THROWS_AS(make_scenario("bump_on_tail"), std::invalid_argument);
}

TEST_CASE("catalog scenarios are nonnegative with unit mean density") {
  for (const auto& name : scenario_names()) {
    auto sc = make_scenario(name);
    // analytic normalization: integral over one period and all of v equals L
    const double mass = oracles::integrate(
        [&](double x) {
          return oracles::integrate([&](double v) { return sc.f0(x, v); }, -40.0, 40.0, 1e-11);
        },
        0.0, sc.domain_length, 1e-9);
    CHECK(std::abs(mass - sc.domain_length) <= 1e-6 * sc.domain_length);

    double min_val = 1e300;
    for (int i = 0; i < 40; ++i)
      for (int j = 0; j < 40; ++j)
        min_val = std::min(min_val, sc.f0(sc.domain_length * i / 40.0, -8.0 + 16.0 * j / 39.0));
    CHECK(min_val >= 0.0);
  }
}

TEST_CASE("uniform scenario mass over one period is the domain length") {
  auto sc = make_scenario("uniform");
  auto grid = make_phase_space_grid(8, sc.domain_length, 0.0, 64, -6.0, 6.0, 2);
  auto f = sample_initial_condition(sc.f0, grid);
  auto rec = compute_invariants(f, zero_field(8, 3), 0.0);
  CHECK(std::abs(rec.mass - sc.domain_length) / sc.domain_length < 1e-8);
}

TEST_CASE("two_stream closed-form value at the origin") {
  auto sc = make_scenario("two_stream");
  const double vbar = 2.4, alpha = 1e-3;
  const double expected = std::exp(-0.5 * vbar * vbar) / std::sqrt(2.0 * M_PI) * (1.0 + alpha);
  CHECK(sc.f0(0.0, 0.0) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(sc.domain_length == doctest::Approx(10.0 * M_PI).epsilon(1e-15));
}

TEST_CASE("landau_weak is even in v, so its momentum vanishes") {
  auto sc = make_scenario("landau_weak");
  auto grid = make_phase_space_grid(12, sc.domain_length, 0.0, 24, -6.0, 6.0, 2);
  auto f = sample_scenario(sc, grid);
  auto rec = compute_invariants(f, zero_field(12, 3), 0.0);
  CHECK(std::abs(rec.momentum) <= 1e-12 * rec.mass * 6.0);
}

TEST_CASE("sample_scenario pins the discrete mass to the domain length") {
  for (const char* name : {"landau_weak", "two_stream"}) {
    auto sc = make_scenario(name);
    auto grid = make_phase_space_grid(21, sc.domain_length, 0.0, 21, -6.0, 6.0, 2);
    auto f = sample_scenario(sc, grid);
    auto rec = compute_invariants(f, zero_field(21, 3), 0.0);
    CHECK(std::abs(rec.mass - sc.domain_length) <= 1e-12 * sc.domain_length);
  }
}

TEST_CASE("free_streaming disables the field solve") {
  auto sc = make_scenario("free_streaming");
  CHECK_FALSE(sc.field_solve);
  CHECK(make_scenario("landau_weak").field_solve);
}
