#pragma once

#include "vlasov/distribution.hpp"

#include <stdexcept>
#include <vector>

namespace vlasov {

// rho(x) = integral of f over v, as nodal values on the x grid.
struct DensityLine {
  int n_cells = 0;
  int p = 0;
  std::vector<double> nodal;
};

// Signals that rho - 1 has a nonzero domain integral, i.e. a mass
// normalization bug upstream.
struct IncompatibleDensityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Electric field from the periodic Poisson problem: E is the exact piecewise
// antiderivative of rho - 1 (degree k+1 per cell), continuous across cell
// interfaces, with zero domain mean. phi is the antiderivative of E, kept for
// reporting only.
struct FieldState {
  int n_cells = 0;
  int p = 0;                      // k+1
  std::vector<double> e_modal;    // n_cells x (p+1)
  std::vector<double> e_nodal;    // n_cells x p, values at the Gauss nodes
  std::vector<double> phi_modal;  // n_cells x (p+2)
  double e_mean = 0.0;            // residual domain mean after the zero-mean fix
};

DensityLine compute_density(const DistributionFunction& f);

FieldState solve_poisson(const DensityLine& rho, const PeriodicGrid1D& x_grid, const DgBasis& basis);

FieldState zero_field(int n_cells, int p);

// E at an arbitrary point (x wraps periodically); for tests and reporting.
double field_value(const FieldState& field, const PeriodicGrid1D& x_grid, double x);
double potential_value(const FieldState& field, const PeriodicGrid1D& x_grid, double x);

// 1/2 integral of E^2 over the domain; per-cell quadrature with k+2 points,
// exact for the degree 2k+2 integrand.
double electric_energy(const FieldState& field, const PeriodicGrid1D& x_grid);

}  // namespace vlasov
