#pragma once

#include "vlasov/basis.hpp"

#include <vector>

namespace vlasov {

// Two-cell update matrices realizing exact translation by delta followed by
// L2 projection back onto the broken polynomial space. With m = floor(delta/h)
// and alpha = delta/h - m, the modal coefficients of cell i after the update
// are  left * c[i-m-1] + right * c[i-m]  (indices periodic).
//
// The sweep kernels consume the equivalent nodal-space pair
// M2N * left * N2M, M2N * right * N2M (column-major, rows padded to p4, one
// matvec per cell instead of three). The nodal pair carries an exact-mass
// correction: its w-weighted column sums are pinned to the quadrature weights
// so a sweep conserves the line mass to a rounding random walk instead of a
// systematic per-step bias.
struct TranslationStencil {
  long long cell_offset = 0;  // m
  double frac = 0.0;          // alpha in [0,1)
  int p = 0;
  int p4 = 0;
  std::vector<double> left_modal;       // row-major p x p
  std::vector<double> right_modal;
  std::vector<double> left_nodal_cols;  // column-major, padded
  std::vector<double> right_nodal_cols;

  double left(int row, int col) const { return left_modal[static_cast<std::size_t>(row) * p + col]; }
  double right(int row, int col) const { return right_modal[static_cast<std::size_t>(row) * p + col]; }
};

TranslationStencil build_translation_stencil(double delta, double cell_width, const DgBasis& basis);

}  // namespace vlasov
