// AVX2+FMA variants of the line kernels. This translation unit is compiled
// with -mavx2 -mfma; dispatch.cpp only hands it out when the CPU agrees.
#include "vlasov/simd/kernels.hpp"

#include <immintrin.h>

namespace vlasov::simd {

namespace {

void two_cell_update_avx2(const double* in, double* out, int n_cells, int p,
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
    for (int c = 0; c < p4; c += 4) {
      __m256d acc = _mm256_setzero_pd();
      for (int b = 0; b < p; ++b) {
        acc = _mm256_fmadd_pd(_mm256_set1_pd(ul[b]), _mm256_loadu_pd(a_cols + static_cast<long>(b) * p4 + c), acc);
        acc = _mm256_fmadd_pd(_mm256_set1_pd(ur[b]), _mm256_loadu_pd(b_cols + static_cast<long>(b) * p4 + c), acc);
      }
      _mm256_storeu_pd(o + c, acc);
    }
  }
}

inline double combine_one(const double* y, const double* m2, int j, int j1, const double* w) {
  return w[0] * y[j] + w[1] * y[j1] + w[2] * m2[j] + w[3] * m2[j1];
}

void shifted_combine4_avx2(const double* y, const double* m2, double* out,
                           int n, int offset, const double* w) {
  const __m256d w0 = _mm256_set1_pd(w[0]);
  const __m256d w1 = _mm256_set1_pd(w[1]);
  const __m256d w2 = _mm256_set1_pd(w[2]);
  const __m256d w3 = _mm256_set1_pd(w[3]);
  // segment with j = i + offset, no wrap for j or j+1
  auto run = [&](int begin, int end, int base) {
    int i = begin;
    for (; i + 4 <= end; i += 4) {
      const double* ya = y + base + i;
      const double* ma = m2 + base + i;
      __m256d acc = _mm256_mul_pd(w0, _mm256_loadu_pd(ya));
      acc = _mm256_fmadd_pd(w1, _mm256_loadu_pd(ya + 1), acc);
      acc = _mm256_fmadd_pd(w2, _mm256_loadu_pd(ma), acc);
      acc = _mm256_fmadd_pd(w3, _mm256_loadu_pd(ma + 1), acc);
      _mm256_storeu_pd(out + i, acc);
    }
    for (; i < end; ++i) out[i] = combine_one(y, m2, base + i, base + i + 1, w);
  };
  // i in [0, n-offset-1): j = i+offset, j+1 <= n-1
  run(0, n - offset - 1, offset);
  // i = n-offset-1 wraps j1
  {
    int i = n - offset - 1;
    if (i >= 0 && i < n) out[i] = combine_one(y, m2, n - 1, 0, w);
  }
  // i in [n-offset, n): j = i+offset-n
  run(n - offset, n, offset - n);
}

}  // namespace

const Kernels& avx2_impl() {
  static const Kernels k{"avx2", two_cell_update_avx2, shifted_combine4_avx2};
  return k;
}

}  // namespace vlasov::simd
