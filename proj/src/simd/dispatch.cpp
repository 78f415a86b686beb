// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#include <atomic>
#include <cassert>
#include <cmath>
#include <cstdlib>
#include <string>

#include "augabex/simd.hpp"

namespace augabex::simd {
namespace {

struct KernelTable {
  double (*dot)(const double*, const double*, std::size_t);
  double (*squared_norm)(const double*, std::size_t);
  void (*accumulate)(double*, const double*, std::size_t);
};

constexpr KernelTable kScalarTable{&scalar::dot, &scalar::squared_norm, &scalar::accumulate};
#ifdef AUGABEX_HAVE_AVX2
constexpr KernelTable kAvx2Table{&avx2::dot, &avx2::squared_norm, &avx2::accumulate};
#endif

Isa initial_isa() {
  Isa wanted = avx2_available() ? Isa::kAvx2 : Isa::kScalar;
  if (const char* env = std::getenv("AUGABEX_SIMD")) {
    std::string v(env);
    if (v == "scalar") wanted = Isa::kScalar;
    else if (v == "avx2") wanted = Isa::kAvx2;
  }
  return wanted;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{[] {
    Isa w = initial_isa();
    return (w == Isa::kAvx2 && !avx2_available()) ? Isa::kScalar : w;
  }()};
  return isa;
}

const KernelTable& table() {
#ifdef AUGABEX_HAVE_AVX2
  if (current().load(std::memory_order_relaxed) == Isa::kAvx2) return kAvx2Table;
#endif
  return kScalarTable;
}

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::kAvx2 ? "avx2" : "scalar"; }

bool avx2_available() {
#if defined(AUGABEX_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok;
#else
  return false;
#endif
}

Isa active_isa() { return current().load(); }

Isa select_isa(Isa requested) {
  Isa chosen = (requested == Isa::kAvx2 && !avx2_available()) ? Isa::kScalar : requested;
  current().store(chosen);
  return chosen;
}

double dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  return table().dot(a.data(), b.data(), a.size());
}

double squared_norm(std::span<const double> a) {
  return table().squared_norm(a.data(), a.size());
}

void accumulate(std::span<double> acc, std::span<const double> x) {
  assert(acc.size() == x.size());
  table().accumulate(acc.data(), x.data(), acc.size());
}

double cosine(std::span<const double> a, std::span<const double> b) {
  const double na = squared_norm(a);
  const double nb = squared_norm(b);
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot(a, b) / std::sqrt(na * nb);
}

}  // namespace augabex::simd
