// Copyright 2026 The zxmin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "zxmin/exact.hpp"

namespace zxmin {
namespace {

using cplx = std::complex<double>;

Amplitude random_amp(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> exp(0, 5);
  return Amplitude({coeff(rng), coeff(rng), coeff(rng), coeff(rng)}, exp(rng));
}

// Float value computed from the raw representation, bypassing to_complex.
cplx float_of(const Amplitude& a) {
  const cplx w = std::polar(1.0, M_PI / 4);
  cplx v = 0;
  for (int j = 0; j < 4; ++j) v += a.coeffs()[j].get_d() * std::pow(w, j);
  return v / std::pow(std::sqrt(2.0), a.sqrt2_exponent());
}

bool near(cplx a, cplx b) { return std::abs(a - b) < 1e-9 * (1 + std::abs(a)); }

TEST(Exact, UnitsAndConstants) {
  EXPECT_EQ(Amplitude::omega_pow(8), Amplitude::one());
  EXPECT_EQ(Amplitude::omega_pow(-1), Amplitude::omega_pow(7));
  EXPECT_EQ(Amplitude::i() * Amplitude::i(), Amplitude(-1));
  EXPECT_EQ(Amplitude::sqrt2() * Amplitude::inv_sqrt2(), Amplitude::one());
  EXPECT_EQ(Amplitude::sqrt2() * Amplitude::sqrt2(), Amplitude(2));
  EXPECT_EQ(Amplitude::phase(2), Amplitude(-1));
  EXPECT_TRUE(Amplitude::zero().is_zero());
  EXPECT_EQ(Amplitude::zero().sqrt2_exponent(), 0u);
}

TEST(Exact, CanonicalFormIsUnique) {
  // 2 / rt2^2 is 1, and (1 + w^2) / rt2 equals w.
  EXPECT_EQ(Amplitude({2, 0, 0, 0}, 2), Amplitude::one());
  EXPECT_EQ(Amplitude({1, 0, 1, 0}, 1), Amplitude::omega_pow(1));
  // sqrt2 = w - w^3 and is stored without a denominator.
  EXPECT_EQ(Amplitude({0, 1, 0, -1}, 0), Amplitude::sqrt2());
  EXPECT_EQ(Amplitude({0, 0, 0, 0}, 7), Amplitude::zero());
}

TEST(Exact, HalfOfOnePlusI) {
  // Regression: (1 + i) / 2 once canonicalized to zero.
  const Amplitude half_one_plus_i = (Amplitude::one() + Amplitude::i()) * Amplitude::inv_sqrt2() * Amplitude::inv_sqrt2();
  EXPECT_FALSE(half_one_plus_i.is_zero());
  EXPECT_TRUE(near(half_one_plus_i.to_complex(), cplx(0.5, 0.5)));
  EXPECT_EQ(half_one_plus_i, Amplitude::omega_pow(1) * Amplitude::inv_sqrt2());
}

TEST(Exact, RingAxiomsOnRandomTriples) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10000; ++trial) {
    const Amplitude a = random_amp(rng);
    const Amplitude b = random_amp(rng);
    const Amplitude c = random_amp(rng);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a - a, Amplitude::zero());
    // Independent float oracle.
    ASSERT_TRUE(near(float_of(a * b), float_of(a) * float_of(b)));
    ASSERT_TRUE(near(float_of(a + b), float_of(a) + float_of(b)));
    ASSERT_TRUE(near(float_of(a.conj()), std::conj(float_of(a))));
  }
}

TEST(Exact, CanonicalizeIsIdempotent) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    Amplitude a = random_amp(rng) * random_amp(rng);
    const Amplitude before = a;
    a.canonicalize();
    EXPECT_EQ(a, before);
  }
}

TEST(Exact, OmegaRotation) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Amplitude a = random_amp(rng);
    for (int q = -9; q <= 9; ++q) EXPECT_EQ(a.times_omega_pow(q), a * Amplitude::omega_pow(q));
  }
}

TEST(Exact, Rendering) {
  EXPECT_EQ(Amplitude::zero().to_pretty(), "0");
  EXPECT_EQ(Amplitude::one().to_pretty(), "1");
  EXPECT_EQ(Amplitude::inv_sqrt2().to_string(), "1+0*w+0*w^2+0*w^3 / rt2^1");
  const cplx v = (Amplitude::omega_pow(1) * Amplitude(1) * Amplitude::inv_sqrt2() * Amplitude::inv_sqrt2()).to_complex();
  EXPECT_NEAR(v.real(), 0.35355339, 1e-8);
  EXPECT_NEAR(v.imag(), 0.35355339, 1e-8);
}

TEST(Exact, PrecisionLossIsReported) {
  Amplitude big = Amplitude(1);
  for (int k = 0; k < 60; ++k) big *= Amplitude(2);
  EXPECT_THROW(big.to_complex(), PrecisionLoss);
}

}  // namespace
}  // namespace zxmin
