#include "vlasov/distribution.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace vlasov {

DistributionFunction sample_initial_condition(const PhaseSpaceFunction& f0, const PhaseSpaceGrid& grid) {
  DistributionFunction f;
  f.grid = grid;
  const int p = grid.p();
  f.values.resize(static_cast<std::size_t>(grid.x.n_cells) * grid.v.n_cells * p * p);
  for (int ix = 0; ix < grid.x.n_cells; ++ix)
    for (int iv = 0; iv < grid.v.n_cells; ++iv)
      for (int a = 0; a < p; ++a) {
        const double x = grid.x.node_coord(ix, a, grid.basis);
        for (int b = 0; b < p; ++b) {
          const double v = grid.v.node_coord(iv, b, grid.basis);
          const double val = f0(x, v);
          if (!std::isfinite(val))
            throw std::invalid_argument("sample_initial_condition: non-finite value at x=" + std::to_string(x) +
                                        ", v=" + std::to_string(v) + " (cell " + std::to_string(ix) + "," +
                                        std::to_string(iv) + " node " + std::to_string(a) + "," +
                                        std::to_string(b) + ")");
          f.at(ix, iv, a, b) = val;
        }
      }
  return f;
}

double evaluate(const DistributionFunction& f, double x, double v) {
  const PhaseSpaceGrid& g = f.grid;
  const int p = g.p();
  if (v < g.v_min() || v > g.v_max())
    throw std::domain_error("evaluate: v=" + std::to_string(v) + " outside [" + std::to_string(g.v_min()) +
                            ", " + std::to_string(g.v_max()) + "]");

  double ux = (x - g.x.origin) / g.x.cell_width();
  ux -= g.x.n_cells * std::floor(ux / g.x.n_cells);
  int ix = static_cast<int>(ux);
  if (ix >= g.x.n_cells) ix = 0;
  const double rx = 2.0 * (ux - ix) - 1.0;

  double uv = (v - g.v.origin) / g.v.cell_width();
  int iv = static_cast<int>(uv);
  if (iv >= g.v.n_cells) iv = g.v.n_cells - 1;  // v = v_max belongs to the last cell
  const double rv = 2.0 * (uv - iv) - 1.0;

  // modal coefficients of the (ix, iv) cell on demand
  std::vector<double> leg_x(p), leg_v(p);
  legendre_values(p - 1, rx, leg_x.data());
  legendre_values(p - 1, rv, leg_v.data());
  double result = 0.0;
  const double* n2m = f.grid.basis.nodal_to_modal.data();
  for (int ma = 0; ma < p; ++ma) {
    for (int mb = 0; mb < p; ++mb) {
      double c = 0.0;
      for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
          c += n2m[ma * p + a] * n2m[mb * p + b] * f.at(ix, iv, a, b);
      result += c * leg_x[ma] * leg_v[mb];
    }
  }
  return result;
}

}  // namespace vlasov
