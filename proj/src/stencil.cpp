#include "vlasov/stencil.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace vlasov {

namespace {

// nodal = M2N * modal * N2M, written column-major with padded rows
void to_nodal_cols(const std::vector<double>& modal, const DgBasis& basis, std::vector<double>& cols) {
  const int p = basis.p();
  const int p4 = basis.padded();
  std::vector<double> tmp(static_cast<std::size_t>(p) * p, 0.0);
  for (int r = 0; r < p; ++r)
    for (int c = 0; c < p; ++c) {
      double s = 0.0;
      for (int j = 0; j < p; ++j) s += modal[static_cast<std::size_t>(r) * p + j] * basis.nodal_to_modal[j * p + c];
      tmp[static_cast<std::size_t>(r) * p + c] = s;
    }
  cols.assign(static_cast<std::size_t>(p) * p4, 0.0);
  for (int r = 0; r < p; ++r)
    for (int c = 0; c < p; ++c) {
      double s = 0.0;
      for (int j = 0; j < p; ++j) s += basis.modal_to_nodal[r * p + j] * tmp[static_cast<std::size_t>(j) * p + c];
      cols[static_cast<std::size_t>(c) * p4 + r] = s;
    }
}

// Pin the w-weighted column sums of the nodal pair to the quadrature weights
// (the discrete statement of the mass row): distribute each column defect
// over the right matrix in proportion to w.
void pin_mass_sums(std::vector<double>& left_cols, std::vector<double>& right_cols, const DgBasis& basis) {
  const int p = basis.p();
  const int p4 = basis.padded();
  double w2 = 0.0;
  for (int a = 0; a < p; ++a) w2 += basis.weights[a] * basis.weights[a];
  for (int b = 0; b < p; ++b) {
    double sum = 0.0;
    for (int a = 0; a < p; ++a)
      sum += basis.weights[a] * (left_cols[static_cast<std::size_t>(b) * p4 + a] +
                                 right_cols[static_cast<std::size_t>(b) * p4 + a]);
    const double defect = basis.weights[b] - sum;
    for (int a = 0; a < p; ++a)
      right_cols[static_cast<std::size_t>(b) * p4 + a] += defect * basis.weights[a] / w2;
  }
}

}  // namespace

// A point of the updated cell i at reference coordinate r pulls back to
// r - 2*alpha in source cell i-m (right segment, r >= 2*alpha - 1) or to
// r + 2*(1-alpha) in source cell i-m-1 (left segment). Projecting against
// P_a over each segment gives
//   left[a][b]  = (2a+1)/2 * int_{-1}^{2*alpha-1} P_b(r + 2 - 2*alpha) P_a(r) dr
//   right[a][b] = (2a+1)/2 * int_{2*alpha-1}^{1}  P_b(r - 2*alpha)     P_a(r) dr
// The integrands have degree <= 2k, so the k+1 point rule per segment is
// exact and the matrices are the projection to machine precision.
TranslationStencil build_translation_stencil(double delta, double cell_width, const DgBasis& basis) {
  if (!std::isfinite(delta)) throw std::invalid_argument("build_translation_stencil: shift must be finite");
  if (!(cell_width > 0.0) || !std::isfinite(cell_width))
    throw std::invalid_argument("build_translation_stencil: cell width must be positive");
  const double ratio = delta / cell_width;
  if (std::abs(ratio) >= 9e15)
    throw std::invalid_argument("build_translation_stencil: |shift/cell_width| too large to resolve the cell offset");

  double mf = std::floor(ratio);
  double alpha = ratio - mf;
  if (alpha >= 1.0) {  // rounding guard when ratio sits just below an integer
    mf += 1.0;
    alpha = 0.0;
  }

  const int p = basis.p();
  TranslationStencil st;
  st.cell_offset = static_cast<long long>(mf);
  st.frac = alpha;
  st.p = p;
  st.p4 = basis.padded();
  st.left_modal.assign(static_cast<std::size_t>(p) * p, 0.0);
  st.right_modal.assign(static_cast<std::size_t>(p) * p, 0.0);

  if (alpha == 0.0) {
    // whole-cell shift: the update is a pure relabeling, keep it bit-exact
    st.left_nodal_cols.assign(static_cast<std::size_t>(p) * st.p4, 0.0);
    st.right_nodal_cols.assign(static_cast<std::size_t>(p) * st.p4, 0.0);
    for (int a = 0; a < p; ++a) {
      st.right_modal[static_cast<std::size_t>(a) * p + a] = 1.0;
      st.right_nodal_cols[static_cast<std::size_t>(a) * st.p4 + a] = 1.0;
    }
    return st;
  }

  std::vector<double> pa(p), pb(p);
  for (int q = 0; q < p; ++q) {
    const double g = basis.nodes[q];
    const double wq = basis.weights[q];
    if (alpha > 0.0) {
      const double r = -1.0 + alpha * (1.0 + g);
      const double w = alpha * wq;
      legendre_values(p - 1, r, pa.data());
      legendre_values(p - 1, r + 2.0 * (1.0 - alpha), pb.data());
      for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
          st.left_modal[static_cast<std::size_t>(a) * p + b] += 0.5 * (2 * a + 1) * w * pb[b] * pa[a];
    }
    {
      const double r = (2.0 * alpha - 1.0) + (1.0 - alpha) * (1.0 + g);
      const double w = (1.0 - alpha) * wq;
      legendre_values(p - 1, r, pa.data());
      legendre_values(p - 1, r - 2.0 * alpha, pb.data());
      for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
          st.right_modal[static_cast<std::size_t>(a) * p + b] += 0.5 * (2 * a + 1) * w * pb[b] * pa[a];
    }
  }

  to_nodal_cols(st.left_modal, basis, st.left_nodal_cols);
  to_nodal_cols(st.right_modal, basis, st.right_nodal_cols);
  pin_mass_sums(st.left_nodal_cols, st.right_nodal_cols, basis);
  return st;
}

}  // namespace vlasov
