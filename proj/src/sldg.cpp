#include "vlasov/sldg.hpp"

#include "vlasov/simd/kernels.hpp"

#include <cstring>
#include <stdexcept>

namespace vlasov {

void LineWorkspace::resize(int n_cells, int p4) {
  const std::size_t need = static_cast<std::size_t>(n_cells) * p4;
  if (nodal_in.size() != need) {
    nodal_in.assign(need, 0.0);
    nodal_out.assign(need, 0.0);
  }
}

void apply_sldg_translation(std::span<double> line, const TranslationStencil& stencil,
                            const DgBasis& basis, LineWorkspace& ws) {
  const int p = basis.p();
  const int p4 = basis.padded();
  if (stencil.p != p) throw std::invalid_argument("apply_sldg_translation: stencil built for a different basis");
  if (line.size() % static_cast<std::size_t>(p) != 0)
    throw std::invalid_argument("apply_sldg_translation: line length is not a multiple of the block size");
  const int n = static_cast<int>(line.size() / p);
  if (n < 2) throw std::invalid_argument("apply_sldg_translation: line must span at least two cells");

  ws.resize(n, p4);
  for (int i = 0; i < n; ++i)
    std::memcpy(&ws.nodal_in[static_cast<std::size_t>(i) * p4], &line[static_cast<std::size_t>(i) * p],
                p * sizeof(double));

  const int shift = static_cast<int>(((stencil.cell_offset % n) + n) % n);
  simd::active().two_cell_update(ws.nodal_in.data(), ws.nodal_out.data(), n, p, p4,
                                 stencil.left_nodal_cols.data(), stencil.right_nodal_cols.data(), shift);

  for (int i = 0; i < n; ++i)
    std::memcpy(&line[static_cast<std::size_t>(i) * p], &ws.nodal_out[static_cast<std::size_t>(i) * p4],
                p * sizeof(double));
}

void apply_sldg_translation(std::span<double> line, const TranslationStencil& stencil,
                            const DgBasis& basis) {
  LineWorkspace ws;
  apply_sldg_translation(line, stencil, basis, ws);
}

double cell_average(std::span<const double> cell_values, const DgBasis& basis) {
  double s = 0.0;
  for (int a = 0; a < basis.p(); ++a) s += basis.weights[a] * cell_values[a];
  return 0.5 * s;
}

void limit_positivity(std::span<double> cell_values, double average, LimiterStats& stats) {
  double mn = cell_values[0];
  for (double v : cell_values)
    if (v < mn) mn = v;
  if (mn >= 0.0) return;
  if (average < 0.0) {
    for (double& v : cell_values) v = 0.0;
    ++stats.clamped_cells;
    return;
  }
  const double theta = (average - mn > 0.0) ? average / (average - mn) : 0.0;
  const double t = theta < 1.0 ? theta : 1.0;
  for (double& v : cell_values) v = average + t * (v - average);
  ++stats.limited_cells;
}

}  // namespace vlasov
