#pragma once

namespace vlasov::simd {

// Line kernels behind the advection sweeps. Data layout: n_cells blocks of p
// doubles padded to p4 (a multiple of four); padding entries are zero and
// every kernel keeps them zero. Matrices are column-major with padded
// columns: column b of an operator lives at cols[b*p4 .. b*p4+p4).
//
// Scalar and AVX2 variants accumulate in the same order (columns ascending),
// so they agree to a few ulps; the equivalence suite pins that down.
struct Kernels {
  const char* name;

  // out[i] = A * in[i-shift-1] + B * in[i-shift], cell indices mod n_cells.
  // shift must already be reduced into [0, n_cells).
  void (*two_cell_update)(const double* in, double* out, int n_cells, int p,
                          int p4, const double* a_cols, const double* b_cols,
                          int shift);

  // out[i] = w[0]*y[j] + w[1]*y[j+1] + w[2]*m2[j] + w[3]*m2[j+1] with
  // j = (i + offset) mod n; offset must be reduced into [0, n).
  void (*shifted_combine4)(const double* y, const double* m2, double* out,
                           int n, int offset, const double* w);
};

const Kernels& scalar();

// Null when the AVX2 variant was not compiled in or the CPU lacks AVX2/FMA.
const Kernels* avx2();

// The selected kernel set. Resolution order: set_active() override, then the
// VLASOV_SIMD environment variable ("auto", "scalar", "avx2"), then runtime
// CPU detection.
const Kernels& active();
void set_active(const char* name);

}  // namespace vlasov::simd
