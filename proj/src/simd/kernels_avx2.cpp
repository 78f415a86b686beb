// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#include <immintrin.h>

#include "augabex/simd.hpp"

namespace augabex::simd::avx2 {

double dot(const double* a, const double* b, std::size_t n) {
  __m256d sums = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    sums = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), sums);
  }
  // lanes: s0 s1 s2 s3 -> (s0+s2) (s1+s3)
  __m128d lo = _mm256_castpd256_pd128(sums);
  __m128d hi = _mm256_extractf128_pd(sums, 1);
  __m128d pair = _mm_add_pd(lo, hi);
  double total = _mm_cvtsd_f64(pair) + _mm_cvtsd_f64(_mm_unpackhi_pd(pair, pair));
  double tail = 0.0;
  for (; i < n; ++i) tail += a[i] * b[i];
  return total + tail;
}

double squared_norm(const double* a, std::size_t n) { return dot(a, a, n); }

void accumulate(double* acc, const double* x, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(acc + i,
                     _mm256_add_pd(_mm256_loadu_pd(acc + i), _mm256_loadu_pd(x + i)));
  }
  for (; i < n; ++i) acc[i] += x[i];
}

}  // namespace augabex::simd::avx2
