#pragma once

#include "vlasov/grid.hpp"

#include <functional>
#include <vector>

namespace vlasov {

using PhaseSpaceFunction = std::function<double(double, double)>;

// Nodal values of f on the tensor Gauss grid, layout [x_cell][v_cell][x_node][v_node].
struct DistributionFunction {
  PhaseSpaceGrid grid;
  std::vector<double> values;

  std::size_t idx(int ix, int iv, int a, int b) const {
    const int p = grid.basis.degree + 1;
    return ((static_cast<std::size_t>(ix) * grid.v.n_cells + iv) * p + a) * p + b;
  }
  double& at(int ix, int iv, int a, int b) { return values[idx(ix, iv, a, b)]; }
  double at(int ix, int iv, int a, int b) const { return values[idx(ix, iv, a, b)]; }
};

// Nodal sampling of f0 at the tensor Gauss points. Rejects non-finite samples
// with the offending location in the message.
DistributionFunction sample_initial_condition(const PhaseSpaceFunction& f0, const PhaseSpaceGrid& grid);

// Piecewise tensor polynomial evaluation via modal coefficients; x wraps
// periodically, v outside [v_min, v_max] is out of domain.
double evaluate(const DistributionFunction& f, double x, double v);

}  // namespace vlasov
