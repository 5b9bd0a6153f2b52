#pragma once

#include "vlasov/basis.hpp"

namespace vlasov {

// Uniform partition of a 1d interval into cells. Used both for the periodic
// spatial domain and for the truncated velocity domain (the translation
// operator wraps both periodically).
struct PeriodicGrid1D {
  int n_cells = 0;
  double origin = 0.0;
  double length = 0.0;

  double cell_width() const { return length / n_cells; }
  double cell_left(int i) const { return origin + i * cell_width(); }
  double node_coord(int cell, int node, const DgBasis& basis) const {
    return origin + (cell + 0.5 * (1.0 + basis.nodes[node])) * cell_width();
  }
};

// Tensor-product phase-space grid; one basis shared by both dimensions.
struct PhaseSpaceGrid {
  PeriodicGrid1D x;
  PeriodicGrid1D v;  // origin = v_min, origin + length = v_max
  DgBasis basis;

  double v_min() const { return v.origin; }
  double v_max() const { return v.origin + v.length; }
  int p() const { return basis.p(); }
};

PhaseSpaceGrid make_phase_space_grid(int n_x, double x_length, double x_origin,
                                     int n_v, double v_min, double v_max, int degree);

}  // namespace vlasov
