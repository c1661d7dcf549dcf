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

#pragma once

#include <gmpxx.h>

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace zxmin {

/// Raised when a value cannot be rendered as a double without losing the
/// guaranteed 1e-12 accuracy.
class PrecisionLoss : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Element of Z[w][1/sqrt2] with w = exp(i*pi/4).
 *
 * The value is (a + b*w + c*w^2 + d*w^3) / sqrt2^k. Every instance is kept in
 * canonical form: when k > 0 the numerator is not a multiple of
 * sqrt2 = w - w^3 inside Z[w], and zero is stored with k = 0. Canonical
 * forms are unique, so equality is component-wise.
 */
class Amplitude {
 public:
  using Coeffs = std::array<mpz_class, 4>;

  Amplitude() = default;
  Amplitude(long value);  // NOLINT(google-explicit-constructor)
  Amplitude(Coeffs coeffs, unsigned sqrt2_exponent);

  static Amplitude zero() { return Amplitude(); }
  static Amplitude one() { return Amplitude(1); }
  /// w^q for any integer q (w^8 = 1).
  static Amplitude omega_pow(int q);
  /// exp(i * quarter_turns * pi/2) = w^(2 * quarter_turns).
  static Amplitude phase(int quarter_turns) { return omega_pow(2 * quarter_turns); }
  static Amplitude i() { return omega_pow(2); }
  static Amplitude sqrt2();
  static Amplitude inv_sqrt2();

  const Coeffs& coeffs() const { return coeffs_; }
  unsigned sqrt2_exponent() const { return k_; }
  bool is_zero() const;

  Amplitude operator-() const;
  Amplitude& operator+=(const Amplitude& other);
  Amplitude& operator-=(const Amplitude& other);
  Amplitude& operator*=(const Amplitude& other);
  /// Multiplies by w^q; exact and cheap (a coefficient rotation).
  Amplitude times_omega_pow(int q) const;
  /// Complex conjugate (w -> w^7).
  Amplitude conj() const;

  friend Amplitude operator+(Amplitude a, const Amplitude& b) { return a += b; }
  friend Amplitude operator-(Amplitude a, const Amplitude& b) { return a -= b; }
  friend Amplitude operator*(Amplitude a, const Amplitude& b) { return a *= b; }
  friend bool operator==(const Amplitude& a, const Amplitude& b) {
    return a.k_ == b.k_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Amplitude& a, const Amplitude& b) { return !(a == b); }

  /// Numeric value; throws PrecisionLoss if any coefficient reaches 2^52.
  std::complex<double> to_complex() const;

  /// "a+b*w+c*w^2+d*w^3 / rt2^k", with the "/ rt2^k" suffix omitted for k = 0.
  std::string to_string() const;
  /// Compact human rendering, e.g. "0", "1", "-w^2", "(1+w) / rt2^3".
  std::string to_pretty() const;

  /// Re-establishes the canonical form. Public so tests can check idempotence.
  void canonicalize();

 private:
  Coeffs coeffs_{};
  unsigned k_ = 0;
};

Amplitude amp_add(const Amplitude& x, const Amplitude& y);
Amplitude amp_mul(const Amplitude& x, const Amplitude& y);
std::complex<double> amp_to_float(const Amplitude& x);

}  // namespace zxmin
