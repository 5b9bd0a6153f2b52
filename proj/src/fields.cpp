#include "vlasov/fields.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace vlasov {

DensityLine compute_density(const DistributionFunction& f) {
  const PhaseSpaceGrid& g = f.grid;
  const int p = g.p();
  DensityLine rho;
  rho.n_cells = g.x.n_cells;
  rho.p = p;
  rho.nodal.assign(static_cast<std::size_t>(g.x.n_cells) * p, 0.0);
  const double hv2 = 0.5 * g.v.cell_width();
  for (int ix = 0; ix < g.x.n_cells; ++ix)
    for (int a = 0; a < p; ++a) {
      double s = 0.0;
      for (int iv = 0; iv < g.v.n_cells; ++iv)
        for (int b = 0; b < p; ++b) s += g.basis.weights[b] * f.at(ix, iv, a, b);
      rho.nodal[static_cast<std::size_t>(ix) * p + a] = hv2 * s;
    }
  return rho;
}

namespace {

// modal coefficients of the antiderivative G(r) = int_{-1}^r g, for g of
// degree k given modally: uses int P_b = (P_{b+1} - P_{b-1})/(2b+1) and
// int P_0 = P_0 + P_1.
void antiderivative_modal(const double* d, int p, double* g) {
  for (int a = 0; a <= p; ++a) g[a] = 0.0;
  g[0] += d[0];
  g[1] += d[0];
  for (int b = 1; b < p; ++b) {
    g[b + 1] += d[b] / (2 * b + 1);
    g[b - 1] -= d[b] / (2 * b + 1);
  }
}

}  // namespace

FieldState solve_poisson(const DensityLine& rho, const PeriodicGrid1D& x_grid, const DgBasis& basis) {
  const int n = rho.n_cells;
  const int p = basis.p();
  const double h = x_grid.cell_width();
  const double length = x_grid.length;

  // modal coefficients of rho - 1 per cell
  std::vector<double> d(static_cast<std::size_t>(n) * p, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int m = 0; m < p; ++m) {
      double c = 0.0;
      for (int a = 0; a < p; ++a) c += basis.nodal_to_modal[m * p + a] * rho.nodal[static_cast<std::size_t>(i) * p + a];
      d[static_cast<std::size_t>(i) * p + m] = c;
    }
    d[static_cast<std::size_t>(i) * p] -= 1.0;
  }

  // compatibility: the domain integral of rho - 1 must vanish or E cannot be
  // periodic
  double compat = 0.0;
  double scale = 0.0;
  for (int i = 0; i < n; ++i) {
    compat += h * d[static_cast<std::size_t>(i) * p];
    scale += h * std::abs(d[static_cast<std::size_t>(i) * p] + 1.0);
  }
  if (std::abs(compat) > 1e-9 * std::max(1.0, scale)) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "solve_poisson: integral of rho-1 is %.3e; density is not compatible with the periodic problem",
                  compat);
    throw IncompatibleDensityError(buf);
  }

  FieldState field;
  field.n_cells = n;
  field.p = p;
  field.e_modal.assign(static_cast<std::size_t>(n) * (p + 1), 0.0);
  field.e_nodal.assign(static_cast<std::size_t>(n) * p, 0.0);
  field.phi_modal.assign(static_cast<std::size_t>(n) * (p + 2), 0.0);

  // E within cell i: C_i + (h/2) G_i(r); interface constants accumulate cell
  // integrals of rho - 1
  std::vector<double> g(p + 1);
  double c_left = 0.0;
  for (int i = 0; i < n; ++i) {
    antiderivative_modal(&d[static_cast<std::size_t>(i) * p], p, g.data());
    double* em = &field.e_modal[static_cast<std::size_t>(i) * (p + 1)];
    for (int a = 0; a <= p; ++a) em[a] = 0.5 * h * g[a];
    em[0] += c_left;
    c_left += h * d[static_cast<std::size_t>(i) * p];
  }

  // zero domain mean
  double mean = 0.0;
  for (int i = 0; i < n; ++i) mean += h * field.e_modal[static_cast<std::size_t>(i) * (p + 1)];
  mean /= length;
  for (int i = 0; i < n; ++i) field.e_modal[static_cast<std::size_t>(i) * (p + 1)] -= mean;

  double residual = 0.0;
  for (int i = 0; i < n; ++i) residual += h * field.e_modal[static_cast<std::size_t>(i) * (p + 1)];
  field.e_mean = residual / length;

  // nodal values of E (degree k+1 needs P up to k+1 at the k+1 nodes)
  std::vector<double> leg(p + 1);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < p; ++a) {
      legendre_values(p, basis.nodes[a], leg.data());
      double e = 0.0;
      for (int m = 0; m <= p; ++m) e += field.e_modal[static_cast<std::size_t>(i) * (p + 1) + m] * leg[m];
      field.e_nodal[static_cast<std::size_t>(i) * p + a] = e;
    }

  // phi: antiderivative of E, reported only; zero mean for determinism
  std::vector<double> gp(p + 2);
  double phi_left = 0.0;
  for (int i = 0; i < n; ++i) {
    antiderivative_modal(&field.e_modal[static_cast<std::size_t>(i) * (p + 1)], p + 1, gp.data());
    double* pm = &field.phi_modal[static_cast<std::size_t>(i) * (p + 2)];
    for (int a = 0; a <= p + 1; ++a) pm[a] = 0.5 * h * gp[a];
    pm[0] += phi_left;
    phi_left += h * field.e_modal[static_cast<std::size_t>(i) * (p + 1)];
  }
  double phi_mean = 0.0;
  for (int i = 0; i < n; ++i) phi_mean += h * field.phi_modal[static_cast<std::size_t>(i) * (p + 2)];
  phi_mean /= length;
  for (int i = 0; i < n; ++i) field.phi_modal[static_cast<std::size_t>(i) * (p + 2)] -= phi_mean;

  return field;
}

FieldState zero_field(int n_cells, int p) {
  FieldState field;
  field.n_cells = n_cells;
  field.p = p;
  field.e_modal.assign(static_cast<std::size_t>(n_cells) * (p + 1), 0.0);
  field.e_nodal.assign(static_cast<std::size_t>(n_cells) * p, 0.0);
  field.phi_modal.assign(static_cast<std::size_t>(n_cells) * (p + 2), 0.0);
  return field;
}

namespace {

double eval_piecewise(const std::vector<double>& modal, int n_cells, int stride,
                      const PeriodicGrid1D& x_grid, double x) {
  double u = (x - x_grid.origin) / x_grid.cell_width();
  u -= n_cells * std::floor(u / n_cells);
  int i = static_cast<int>(u);
  if (i >= n_cells) i = 0;
  const double r = 2.0 * (u - i) - 1.0;
  std::vector<double> leg(stride);
  legendre_values(stride - 1, r, leg.data());
  double s = 0.0;
  for (int m = 0; m < stride; ++m) s += modal[static_cast<std::size_t>(i) * stride + m] * leg[m];
  return s;
}

}  // namespace

double field_value(const FieldState& field, const PeriodicGrid1D& x_grid, double x) {
  return eval_piecewise(field.e_modal, field.n_cells, field.p + 1, x_grid, x);
}

double potential_value(const FieldState& field, const PeriodicGrid1D& x_grid, double x) {
  return eval_piecewise(field.phi_modal, field.n_cells, field.p + 2, x_grid, x);
}

double electric_energy(const FieldState& field, const PeriodicGrid1D& x_grid) {
  const int p = field.p;
  const auto rule = gauss_legendre_rule(p + 1);
  std::vector<double> leg(p + 1);
  double total = 0.0;
  for (int i = 0; i < field.n_cells; ++i) {
    double cell = 0.0;
    for (int q = 0; q <= p; ++q) {
      legendre_values(p, rule.nodes[q], leg.data());
      double e = 0.0;
      for (int m = 0; m <= p; ++m) e += field.e_modal[static_cast<std::size_t>(i) * (p + 1) + m] * leg[m];
      cell += rule.weights[q] * e * e;
    }
    total += cell;
  }
  return 0.25 * x_grid.cell_width() * total;
}

}  // namespace vlasov
