// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The Augabex Authors

#include <gtest/gtest.h>

#include <cmath>

#include "augabex/simd.hpp"
#include "generators.hpp"

namespace augabex {
namespace {

TEST(Simd, CosineBasics) {
  const std::vector<double> a = {1, 1}, b = {1, 0}, z = {0, 0};
  EXPECT_NEAR(simd::cosine(a, b), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_EQ(simd::cosine(a, z), 0.0);
  EXPECT_EQ(simd::dot(a, b), 1.0);
  EXPECT_EQ(simd::squared_norm(a), 2.0);
}

TEST(Simd, SelectIsaFallsBackWithoutHardware) {
  const simd::Isa before = simd::active_isa();
  EXPECT_EQ(simd::select_isa(simd::Isa::kScalar), simd::Isa::kScalar);
  EXPECT_EQ(simd::active_isa(), simd::Isa::kScalar);
  const simd::Isa got = simd::select_isa(simd::Isa::kAvx2);
  EXPECT_EQ(got, simd::avx2_available() ? simd::Isa::kAvx2 : simd::Isa::kScalar);
  simd::select_isa(before);
}

#if defined(AUGABEX_HAVE_AVX2)

class SimdEquivalence : public ::testing::Test {
 protected:
  void SetUp() override {
    if (!simd::avx2_available()) GTEST_SKIP() << "CPU lacks AVX2/FMA";
  }
};

TEST_F(SimdEquivalence, ExactOnIntegerVectors) {
  testing::Gen gen(101);
  for (int iter = 0; iter < 2000; ++iter) {
    const std::size_t n = gen.size(0, 67);
    const auto a = gen.counts(n, 9), b = gen.counts(n, 9);
    ASSERT_EQ(simd::scalar::dot(a.data(), b.data(), n), simd::avx2::dot(a.data(), b.data(), n)) << n;
    ASSERT_EQ(simd::scalar::squared_norm(a.data(), n), simd::avx2::squared_norm(a.data(), n)) << n;
    auto acc_s = b, acc_v = b;
    simd::scalar::accumulate(acc_s.data(), a.data(), n);
    simd::avx2::accumulate(acc_v.data(), a.data(), n);
    ASSERT_EQ(acc_s, acc_v);
  }
}

TEST_F(SimdEquivalence, CloseOnRealVectors) {
  testing::Gen gen(202);
  for (int iter = 0; iter < 2000; ++iter) {
    const std::size_t n = gen.size(1, 300);
    std::vector<double> a(n), b(n);
    for (auto& x : a) x = gen.real(-10, 10);
    for (auto& x : b) x = gen.real(-10, 10);
    double mag = 0;
    for (std::size_t i = 0; i < n; ++i) mag += std::abs(a[i] * b[i]);
    ASSERT_NEAR(simd::scalar::dot(a.data(), b.data(), n), simd::avx2::dot(a.data(), b.data(), n), 1e-12 * mag);
    const double na = simd::scalar::squared_norm(a.data(), n);
    ASSERT_NEAR(na, simd::avx2::squared_norm(a.data(), n), 1e-12 * na);
    auto acc_s = b, acc_v = b;
    simd::scalar::accumulate(acc_s.data(), a.data(), n);
    simd::avx2::accumulate(acc_v.data(), a.data(), n);
    ASSERT_EQ(acc_s, acc_v);  // elementwise add has a single rounding either way
  }
}

TEST_F(SimdEquivalence, DispatchedCosineAgrees) {
  testing::Gen gen(303);
  const simd::Isa before = simd::active_isa();
  for (int iter = 0; iter < 500; ++iter) {
    const std::size_t n = gen.size(1, 50);
    const auto a = gen.counts(n, 5), b = gen.counts(n, 5);
    simd::select_isa(simd::Isa::kScalar);
    const double s = simd::cosine(a, b);
    simd::select_isa(simd::Isa::kAvx2);
    ASSERT_EQ(s, simd::cosine(a, b));
  }
  simd::select_isa(before);
}

#endif

}  // namespace
}  // namespace augabex
