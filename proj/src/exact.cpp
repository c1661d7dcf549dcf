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

#include "zxmin/exact.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace zxmin {

namespace {

using Coeffs = Amplitude::Coeffs;

// Product in Z[w] with w^4 = -1.
Coeffs ring_mul(const Coeffs& x, const Coeffs& y) {
  Coeffs r{};
  for (int i = 0; i < 4; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (int j = 0; j < 4; ++j) {
      if (sgn(y[j]) == 0) continue;
      const int e = i + j;
      if (e < 4) {
        r[e] += x[i] * y[j];
      } else {
        r[e - 4] -= x[i] * y[j];
      }
    }
  }
  return r;
}

// x * (w - w^3), i.e. x * sqrt2.
Coeffs times_sqrt2(const Coeffs& x) {
  // (a + b w + c w^2 + d w^3)(w - w^3)
  //   = (b - d) + (a + c) w + (b + d) w^2 + (c - a) w^3
  return Coeffs{x[1] - x[3], x[0] + x[2], x[1] + x[3], x[2] - x[0]};
}

bool all_zero(const Coeffs& x) {
  for (const auto& c : x) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool all_even(const Coeffs& x) {
  for (const auto& c : x) {
    if (mpz_odd_p(c.get_mpz_t())) return false;
  }
  return true;
}

// Raises the denominator exponent of x from k to target (target >= k).
Coeffs lift(Coeffs x, unsigned k, unsigned target) {
  unsigned diff = target - k;
  if (diff % 2 == 1) {
    x = times_sqrt2(x);
    --diff;
  }
  if (diff > 0) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, diff / 2);
    for (auto& c : x) c *= scale;
  }
  return x;
}

}  // namespace

Amplitude::Amplitude(long value) { coeffs_[0] = value; }

Amplitude::Amplitude(Coeffs coeffs, unsigned sqrt2_exponent)
    : coeffs_(std::move(coeffs)), k_(sqrt2_exponent) {
  canonicalize();
}

Amplitude Amplitude::omega_pow(int q) {
  q = ((q % 8) + 8) % 8;
  Amplitude r;
  if (q < 4) {
    r.coeffs_[q] = 1;
  } else {
    r.coeffs_[q - 4] = -1;
  }
  return r;
}

Amplitude Amplitude::sqrt2() { return Amplitude(Coeffs{0, 1, 0, -1}, 0); }

Amplitude Amplitude::inv_sqrt2() { return Amplitude(Coeffs{1, 0, 0, 0}, 1); }

bool Amplitude::is_zero() const { return all_zero(coeffs_); }

void Amplitude::canonicalize() {
  if (all_zero(coeffs_)) {
    k_ = 0;
    return;
  }
  while (k_ > 0) {
    Coeffs y = times_sqrt2(coeffs_);
    if (!all_even(y)) break;
    for (auto& c : y) mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), 2);
    coeffs_ = std::move(y);
    --k_;
  }
}

Amplitude Amplitude::operator-() const {
  Amplitude r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Amplitude& Amplitude::operator+=(const Amplitude& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const unsigned k = std::max(k_, other.k_);
  Coeffs lhs = lift(coeffs_, k_, k);
  const Coeffs rhs = lift(other.coeffs_, other.k_, k);
  for (int i = 0; i < 4; ++i) lhs[i] += rhs[i];
  coeffs_ = std::move(lhs);
  k_ = k;
  canonicalize();
  return *this;
}

Amplitude& Amplitude::operator-=(const Amplitude& other) { return *this += -other; }

Amplitude& Amplitude::operator*=(const Amplitude& other) {
  if (is_zero() || other.is_zero()) return *this = Amplitude();
  coeffs_ = ring_mul(coeffs_, other.coeffs_);
  k_ += other.k_;
  canonicalize();
  return *this;
}

Amplitude Amplitude::times_omega_pow(int q) const {
  q = ((q % 8) + 8) % 8;
  Amplitude r;
  r.k_ = k_;
  for (int j = 0; j < 4; ++j) {
    const int e = j + q;
    const int slot = e % 4;
    const bool negate = (e / 4) % 2 == 1;
    r.coeffs_[slot] = negate ? mpz_class(-coeffs_[j]) : coeffs_[j];
  }
  return r;
}

Amplitude Amplitude::conj() const {
  // w^j -> w^(8-j): 1 -> 1, w -> -w^3, w^2 -> -w^2, w^3 -> -w.
  Amplitude r;
  r.k_ = k_;
  r.coeffs_[0] = coeffs_[0];
  r.coeffs_[1] = -coeffs_[3];
  r.coeffs_[2] = -coeffs_[2];
  r.coeffs_[3] = -coeffs_[1];
  return r;
}

std::complex<double> Amplitude::to_complex() const {
  static const mpz_class kLimit = mpz_class(1) << 52;
  for (const auto& c : coeffs_) {
    if (abs(c) >= kLimit) {
      throw PrecisionLoss("coefficient " + c.get_str() +
                          " exceeds the exact range of a double");
    }
  }
  const double h = std::sqrt(0.5);
  const std::array<std::complex<double>, 4> basis{
      std::complex<double>(1.0, 0.0), std::complex<double>(h, h),
      std::complex<double>(0.0, 1.0), std::complex<double>(-h, h)};
  std::complex<double> sum(0.0, 0.0);
  for (int j = 0; j < 4; ++j) sum += coeffs_[j].get_d() * basis[j];
  return sum * std::pow(h, static_cast<double>(k_));
}

std::string Amplitude::to_string() const {
  std::ostringstream out;
  static const char* kPowers[4] = {"", "*w", "*w^2", "*w^3"};
  for (int j = 0; j < 4; ++j) {
    if (j > 0 && sgn(coeffs_[j]) >= 0) out << '+';
    out << coeffs_[j].get_str() << kPowers[j];
  }
  if (k_ > 0) out << " / rt2^" << k_;
  return out.str();
}

std::string Amplitude::to_pretty() const {
  if (is_zero()) return "0";
  static const char* kPowers[4] = {"", "w", "w^2", "w^3"};
  std::ostringstream num;
  int terms = 0;
  for (int j = 0; j < 4; ++j) {
    const mpz_class& c = coeffs_[j];
    if (sgn(c) == 0) continue;
    if (terms > 0) num << (sgn(c) > 0 ? "+" : "-");
    else if (sgn(c) < 0) num << '-';
    const mpz_class mag = abs(c);
    if (j == 0) {
      num << mag.get_str();
    } else {
      if (mag != 1) num << mag.get_str() << '*';
      num << kPowers[j];
    }
    ++terms;
  }
  if (k_ == 0) return num.str();
  std::string n = num.str();
  if (terms > 1) n = "(" + n + ")";
  return n + " / rt2^" + std::to_string(k_);
}

Amplitude amp_add(const Amplitude& x, const Amplitude& y) { return x + y; }

Amplitude amp_mul(const Amplitude& x, const Amplitude& y) { return x * y; }

std::complex<double> amp_to_float(const Amplitude& x) { return x.to_complex(); }

}  // namespace zxmin
