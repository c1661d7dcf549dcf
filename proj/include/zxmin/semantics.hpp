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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zxmin/diagram.hpp"
#include "zxmin/exact.hpp"

namespace zxmin {

enum class InterpretationKind { Standard, Flat };

const char* interpretation_name(InterpretationKind kind);

/**
 * Dense 2^m x 2^n matrix of exact amplitudes for a diagram n -> m.
 *
 * Row index encodes the outputs, column index the inputs. Within each, the
 * first boundary of the list is the most significant bit, so tensor() of two
 * diagrams interprets to the usual Kronecker product.
 */
class Tensor {
 public:
  Tensor() : entries_(1, Amplitude::one()) {}
  explicit Tensor(BoundarySignature sig);
  Tensor(BoundarySignature sig, std::vector<Amplitude> entries);

  static Tensor scalar(const Amplitude& value);

  const BoundarySignature& signature() const { return sig_; }
  std::size_t rows() const { return std::size_t{1} << sig_.n_outputs; }
  std::size_t cols() const { return std::size_t{1} << sig_.n_inputs; }
  const Amplitude& at(std::size_t row, std::size_t col) const { return entries_[row * cols() + col]; }
  Amplitude& at(std::size_t row, std::size_t col) { return entries_[row * cols() + col]; }
  const std::vector<Amplitude>& entries() const { return entries_; }

  bool is_zero() const;
  Tensor scaled(const Amplitude& factor) const;

  /// Exact entries one row per line, then the float rendering.
  std::string dump() const;

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.sig_ == b.sig_ && a.entries_ == b.entries_;
  }

 private:
  BoundarySignature sig_;
  std::vector<Amplitude> entries_;
};

bool tensors_equal(const Tensor& t1, const Tensor& t2);

Tensor kron(const Tensor& a, const Tensor& b);
/// t2 after t1 (matrix product t2 * t1).
Tensor matmul(const Tensor& t2, const Tensor& t1);
Tensor transpose(const Tensor& t);
/// The 1 -> 1 Hadamard matrix raised to the n-th tensor power.
Tensor hadamard_power(int n);

/// Interpretation of a single spider or Hadamard with the given leg split.
/// Boundaries have no generator tensor and are rejected.
Tensor generator_tensor(VertexKind kind, Phase phase, int n_inputs, int n_outputs,
                        InterpretationKind interp = InterpretationKind::Standard);

struct InterpretOptions {
  /// Largest rank any intermediate factor may reach.
  int cap = 14;
  /// When set, factors are contracted in a seeded random order instead of
  /// greedily.
  std::optional<std::uint64_t> random_order_seed;
};

/// Exact tensor-network contraction of the whole diagram.
Tensor interpret(const Diagram& d, InterpretationKind kind = InterpretationKind::Standard,
                 const InterpretOptions& options = {});

/// Exponent q of the unit i^q relating the two interpretations:
/// (sum of X-spider degrees - number of Hadamards) mod 4.
int flat_phase_exponent(const Diagram& d);
Amplitude flat_phase_predictor(const Diagram& d);

}  // namespace zxmin
