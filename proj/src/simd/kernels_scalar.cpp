// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#include "augabex/simd.hpp"

namespace augabex::simd::scalar {

// Four independent partial sums, combined pairwise at the end. The AVX2
// kernel keeps the same lane layout, so both round identically whenever no
// FMA is involved.
double dot(const double* a, const double* b, std::size_t n) {
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    s0 += a[i] * b[i];
    s1 += a[i + 1] * b[i + 1];
    s2 += a[i + 2] * b[i + 2];
    s3 += a[i + 3] * b[i + 3];
  }
  double tail = 0.0;
  for (; i < n; ++i) tail += a[i] * b[i];
  return ((s0 + s2) + (s1 + s3)) + tail;
}

double squared_norm(const double* a, std::size_t n) { return dot(a, a, n); }

void accumulate(double* acc, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += x[i];
}

}  // namespace augabex::simd::scalar
