#include "vlasov/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace vlasov {

PhaseSpaceGrid make_phase_space_grid(int n_x, double x_length, double x_origin,
                                     int n_v, double v_min, double v_max, int degree) {
  if (n_x < 2 || n_v < 2) throw std::invalid_argument("phase-space grid needs at least 2 cells per dimension");
  if (!(x_length > 0.0) || !std::isfinite(x_length)) throw std::invalid_argument("domain length must be positive");
  if (!(v_min < 0.0 && 0.0 < v_max)) throw std::invalid_argument("velocity domain must contain 0 in its interior");
  PhaseSpaceGrid grid;
  grid.x = {n_x, x_origin, x_length};
  grid.v = {n_v, v_min, v_max - v_min};
  grid.basis = build_basis(degree);
  return grid;
}

}  // namespace vlasov
