#include "vlasov/simd/kernels.hpp"

namespace vlasov::simd {

namespace {

void two_cell_update_scalar(const double* in, double* out, int n_cells, int p,
                            int p4, const double* a_cols, const double* b_cols,
                            int shift) {
  for (int i = 0; i < n_cells; ++i) {
    int jr = i - shift;
    if (jr < 0) jr += n_cells;
    int jl = jr - 1;
    if (jl < 0) jl += n_cells;
    const double* ul = in + static_cast<long>(jl) * p4;
    const double* ur = in + static_cast<long>(jr) * p4;
    double* o = out + static_cast<long>(i) * p4;
    for (int a = 0; a < p4; ++a) o[a] = 0.0;
    for (int b = 0; b < p; ++b) {
      const double lb = ul[b];
      const double rb = ur[b];
      const double* ca = a_cols + static_cast<long>(b) * p4;
      const double* cb = b_cols + static_cast<long>(b) * p4;
      for (int a = 0; a < p4; ++a) o[a] += lb * ca[a];
      for (int a = 0; a < p4; ++a) o[a] += rb * cb[a];
    }
  }
}

void shifted_combine4_scalar(const double* y, const double* m2, double* out,
                             int n, int offset, const double* w) {
  for (int i = 0; i < n; ++i) {
    int j = i + offset;
    if (j >= n) j -= n;
    int j1 = j + 1;
    if (j1 >= n) j1 -= n;
    out[i] = w[0] * y[j] + w[1] * y[j1] + w[2] * m2[j] + w[3] * m2[j1];
  }
}

}  // namespace

const Kernels& scalar() {
  static const Kernels k{"scalar", two_cell_update_scalar, shifted_combine4_scalar};
  return k;
}

}  // namespace vlasov::simd
