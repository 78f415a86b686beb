// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#pragma once

#include <span>
#include <string_view>

// Dense double-precision kernels behind every cosine in the toolkit (MMR
// sentence vectors, LSA topic vectors, provider embeddings).
//
// Each kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant. The variant is picked once at first use from the CPU feature bits;
// AUGABEX_SIMD=scalar|avx2 in the environment overrides the choice. On
// integer-valued inputs (term-frequency vectors) both variants are exact, so
// results do not depend on which one ran.

namespace augabex::simd {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

/// True when this binary carries the AVX2 variants and the CPU can run them.
bool avx2_available();

/// The variant currently used by the dispatching entry points below.
Isa active_isa();

/// Overrides the dispatch choice. Requesting kAvx2 when it is unavailable
/// falls back to kScalar; the returned value is what was actually selected.
Isa select_isa(Isa requested);

// Dispatching entry points. Lengths of paired spans must match.
double dot(std::span<const double> a, std::span<const double> b);
double squared_norm(std::span<const double> a);
/// acc[i] += x[i]
void accumulate(std::span<double> acc, std::span<const double> x);

/// dot(a,b) / sqrt(|a|^2 |b|^2); 0 when either vector is zero.
double cosine(std::span<const double> a, std::span<const double> b);

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
double squared_norm(const double* a, std::size_t n);
void accumulate(double* acc, const double* x, std::size_t n);
}  // namespace scalar

#if defined(AUGABEX_HAVE_AVX2) || defined(AUGABEX_DECLARE_AVX2)
namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
double squared_norm(const double* a, std::size_t n);
void accumulate(double* acc, const double* x, std::size_t n);
}  // namespace avx2
#endif

}  // namespace augabex::simd
