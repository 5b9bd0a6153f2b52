#pragma once

#include "vlasov/basis.hpp"
#include "vlasov/stencil.hpp"

#include <span>
#include <vector>

namespace vlasov {

struct LimiterStats {
  long long limited_cells = 0;  // compressed toward the cell average
  long long clamped_cells = 0;  // negative average, floor-clamped to zero
};

// Scratch buffers for one line sweep, reused across calls.
struct LineWorkspace {
  std::vector<double> nodal_in, nodal_out;
  void resize(int n_cells, int p4);
};

// In-place sLdG translation of a periodic line of n_cells * (k+1) nodal
// values: nodal->modal per cell, two-cell stencil update, modal->nodal.
// Preserves the weighted line mass and cannot grow the discrete L2 norm
// beyond roundoff (exact translation followed by orthogonal projection).
void apply_sldg_translation(std::span<double> line, const TranslationStencil& stencil,
                            const DgBasis& basis, LineWorkspace& ws);
void apply_sldg_translation(std::span<double> line, const TranslationStencil& stencil,
                            const DgBasis& basis);

// Cell average of nodal values on the reference cell, sum(w_a u_a) / 2.
double cell_average(std::span<const double> cell_values, const DgBasis& basis);

// Average-preserving linear scaling limiter: if any nodal value is negative,
// values are compressed toward the cell average by theta = min(1, m/(m - min))
// so the average is kept exactly. A negative average flags the cell (counted
// in stats) and clamps it to zero uniformly.
void limit_positivity(std::span<double> cell_values, double average, LimiterStats& stats);

}  // namespace vlasov
