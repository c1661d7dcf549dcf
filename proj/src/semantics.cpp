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

#include "zxmin/semantics.hpp"

#include <algorithm>
#include <complex>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>

namespace zxmin {

const char* interpretation_name(InterpretationKind kind) {
  return kind == InterpretationKind::Standard ? "standard" : "flat";
}

Tensor::Tensor(BoundarySignature sig)
    : sig_(sig), entries_(std::size_t{1} << (sig.n_inputs + sig.n_outputs)) {}

Tensor::Tensor(BoundarySignature sig, std::vector<Amplitude> entries)
    : sig_(sig), entries_(std::move(entries)) {
  if (entries_.size() != (std::size_t{1} << (sig.n_inputs + sig.n_outputs))) {
    throw Error("tensor entry count does not match its signature");
  }
}

Tensor Tensor::scalar(const Amplitude& value) { return Tensor({0, 0}, {value}); }

bool Tensor::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Amplitude& a) { return a.is_zero(); });
}

Tensor Tensor::scaled(const Amplitude& factor) const {
  Tensor out = *this;
  for (auto& e : out.entries_) e *= factor;
  return out;
}

std::string Tensor::dump() const {
  std::ostringstream out;
  out << "signature " << sig_.n_inputs << " -> " << sig_.n_outputs << "\n";
  out << "exact:\n";
  for (std::size_t r = 0; r < rows(); ++r) {
    out << "  [";
    for (std::size_t c = 0; c < cols(); ++c) out << (c ? ", " : "") << at(r, c).to_pretty();
    out << "]\n";
  }
  out << "float:\n";
  char buf[64];
  for (std::size_t r = 0; r < rows(); ++r) {
    out << "  [";
    for (std::size_t c = 0; c < cols(); ++c) {
      const auto z = at(r, c).to_complex();
      std::snprintf(buf, sizeof buf, "%s%.6f%+.6fi", c ? ", " : "", z.real() + 0.0, z.imag() + 0.0);
      out << buf;
    }
    out << "]\n";
  }
  return out.str();
}

bool tensors_equal(const Tensor& t1, const Tensor& t2) { return t1 == t2; }

Tensor kron(const Tensor& a, const Tensor& b) {
  Tensor out({a.signature().n_inputs + b.signature().n_inputs,
              a.signature().n_outputs + b.signature().n_outputs});
  for (std::size_t ra = 0; ra < a.rows(); ++ra)
    for (std::size_t ca = 0; ca < a.cols(); ++ca) {
      const Amplitude& x = a.at(ra, ca);
      if (x.is_zero()) continue;
      for (std::size_t rb = 0; rb < b.rows(); ++rb)
        for (std::size_t cb = 0; cb < b.cols(); ++cb) {
          if (b.at(rb, cb).is_zero()) continue;
          out.at(ra * b.rows() + rb, ca * b.cols() + cb) = x * b.at(rb, cb);
        }
    }
  return out;
}

Tensor matmul(const Tensor& t2, const Tensor& t1) {
  if (t1.signature().n_outputs != t2.signature().n_inputs) {
    throw ArityMismatch("matmul: " + std::to_string(t1.signature().n_outputs) + " outputs into " +
                        std::to_string(t2.signature().n_inputs) + " inputs");
  }
  Tensor out({t1.signature().n_inputs, t2.signature().n_outputs});
  for (std::size_t r = 0; r < t2.rows(); ++r)
    for (std::size_t k = 0; k < t2.cols(); ++k) {
      const Amplitude& x = t2.at(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < t1.cols(); ++c) {
        if (t1.at(k, c).is_zero()) continue;
        out.at(r, c) += x * t1.at(k, c);
      }
    }
  return out;
}

Tensor transpose(const Tensor& t) {
  Tensor out({t.signature().n_outputs, t.signature().n_inputs});
  for (std::size_t r = 0; r < t.rows(); ++r)
    for (std::size_t c = 0; c < t.cols(); ++c) out.at(c, r) = t.at(r, c);
  return out;
}

Tensor hadamard_power(int n) {
  const Amplitude h = Amplitude::inv_sqrt2();
  Tensor one({1, 1}, {h, h, h, -h});
  Tensor out;
  for (int i = 0; i < n; ++i) out = kron(out, one);
  return out;
}

namespace {

int popcount(std::size_t x) { return __builtin_popcountll(x); }

// Entry of a spider tensor with `legs` legs at the bit pattern `bits`.
// X entries are the Hadamard conjugate of the Z tensor:
// (1/sqrt2)^legs * (1 + e^{ia} * (-1)^{|bits|}).
Amplitude spider_entry(VertexKind kind, Phase phase, int legs, std::size_t bits) {
  if (kind == VertexKind::Z) {
    const std::size_t all = (std::size_t{1} << legs) - 1;
    if (legs == 0) return Amplitude::one() + Amplitude::phase(phase.quarter_turns());
    if (bits == 0) return Amplitude::one();
    if (bits == all) return Amplitude::phase(phase.quarter_turns());
    return Amplitude::zero();
  }
  Amplitude value = Amplitude::phase(phase.quarter_turns() + (popcount(bits) % 2 ? 2 : 0));
  value += Amplitude::one();
  return value * Amplitude({1, 0, 0, 0}, static_cast<unsigned>(legs));
}

Amplitude flat_factor(VertexKind kind, int degree, InterpretationKind interp) {
  if (interp == InterpretationKind::Standard) return Amplitude::one();
  if (kind == VertexKind::X) return Amplitude::phase(degree);
  if (kind == VertexKind::H) return Amplitude::phase(-1);
  return Amplitude::one();
}

// A factor of the tensor network. labels[0] is the most significant bit of
// the index into data.
struct Factor {
  std::vector<int> labels;
  std::vector<Amplitude> data;
};

Factor spider_factor(VertexKind kind, Phase phase, const std::vector<int>& labels,
                     InterpretationKind interp) {
  const int legs = static_cast<int>(labels.size());
  Factor f{labels, std::vector<Amplitude>(std::size_t{1} << legs)};
  const Amplitude extra = flat_factor(kind, legs, interp);
  if (kind == VertexKind::H) {
    const Amplitude h = Amplitude::inv_sqrt2() * extra;
    f.data = {h, h, h, -h};
    return f;
  }
  for (std::size_t bits = 0; bits < f.data.size(); ++bits) {
    f.data[bits] = spider_entry(kind, phase, legs, bits);
    if (!f.data[bits].is_zero()) f.data[bits] *= extra;
  }
  return f;
}

// Sums over repeated labels within one factor (self-loops).
Factor trace_repeats(const Factor& f) {
  std::vector<int> kept;
  std::vector<std::pair<int, int>> loops;
  const int n = static_cast<int>(f.labels.size());
  std::vector<bool> used(n, false);
  for (int i = 0; i < n; ++i) {
    if (used[i]) continue;
    int partner = -1;
    for (int j = i + 1; j < n; ++j)
      if (!used[j] && f.labels[j] == f.labels[i]) {
        partner = j;
        break;
      }
    if (partner >= 0) {
      used[i] = used[partner] = true;
      loops.emplace_back(i, partner);
    } else {
      kept.push_back(i);
    }
  }
  if (loops.empty()) return f;
  Factor out;
  for (int i : kept) out.labels.push_back(f.labels[i]);
  out.data.assign(std::size_t{1} << kept.size(), Amplitude::zero());
  for (std::size_t idx = 0; idx < f.data.size(); ++idx) {
    if (f.data[idx].is_zero()) continue;
    auto bit = [&](int pos) { return (idx >> (n - 1 - pos)) & 1; };
    bool diagonal = true;
    for (auto [i, j] : loops) diagonal = diagonal && bit(i) == bit(j);
    if (!diagonal) continue;
    std::size_t r = 0;
    for (int i : kept) r = (r << 1) | bit(i);
    out.data[r] += f.data[idx];
  }
  return out;
}

std::size_t result_rank(const Factor& a, const Factor& b) {
  std::size_t shared = 0;
  for (int l : a.labels)
    if (std::find(b.labels.begin(), b.labels.end(), l) != b.labels.end()) ++shared;
  return a.labels.size() + b.labels.size() - 2 * shared;
}

bool shares_label(const Factor& a, const Factor& b) {
  for (int l : a.labels)
    if (std::find(b.labels.begin(), b.labels.end(), l) != b.labels.end()) return true;
  return false;
}

Factor contract(const Factor& a, const Factor& b) {
  const int na = static_cast<int>(a.labels.size());
  const int nb = static_cast<int>(b.labels.size());
  std::vector<int> a_pos_in_b(na, -1);
  std::vector<int> b_shared(nb, -1);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      if (a.labels[i] == b.labels[j]) {
        a_pos_in_b[i] = j;
        b_shared[j] = i;
      }
  Factor out;
  std::vector<int> free_a;
  std::vector<int> free_b;
  for (int i = 0; i < na; ++i)
    if (a_pos_in_b[i] < 0) {
      free_a.push_back(i);
      out.labels.push_back(a.labels[i]);
    }
  for (int j = 0; j < nb; ++j)
    if (b_shared[j] < 0) {
      free_b.push_back(j);
      out.labels.push_back(b.labels[j]);
    }
  out.data.assign(std::size_t{1} << out.labels.size(), Amplitude::zero());
  const int nfb = static_cast<int>(free_b.size());
  // Walk the non-zero entries of a; each fixes the free-a bits of the result
  // and the shared bits of b, leaving only the free-b bits to enumerate.
  for (std::size_t ia = 0; ia < a.data.size(); ++ia) {
    const Amplitude& x = a.data[ia];
    if (x.is_zero()) continue;
    std::size_t r_hi = 0;
    std::size_t b_base = 0;
    for (int i = 0; i < na; ++i) {
      const std::size_t bit = (ia >> (na - 1 - i)) & 1;
      if (a_pos_in_b[i] < 0) r_hi = (r_hi << 1) | bit;
      else b_base |= bit << (nb - 1 - a_pos_in_b[i]);
    }
    for (std::size_t fb = 0; fb < (std::size_t{1} << nfb); ++fb) {
      std::size_t ib = b_base;
      for (int k = 0; k < nfb; ++k) ib |= ((fb >> (nfb - 1 - k)) & 1) << (nb - 1 - free_b[k]);
      const Amplitude& y = b.data[ib];
      if (y.is_zero()) continue;
      out.data[(r_hi << nfb) | fb] += x * y;
    }
  }
  return out;
}

}  // namespace

Tensor generator_tensor(VertexKind kind, Phase phase, int n_inputs, int n_outputs,
                        InterpretationKind interp) {
  if (kind == VertexKind::Boundary) throw Error("boundaries have no generator tensor");
  if (kind == VertexKind::H && n_inputs + n_outputs != 2) {
    throw InvariantViolation("a Hadamard node has exactly two legs");
  }
  std::vector<int> labels(n_inputs + n_outputs);
  for (int i = 0; i < n_inputs + n_outputs; ++i) labels[i] = i;
  Factor f = spider_factor(kind, phase, labels, interp);
  // Legs are ordered outputs first, matching the (row, column) layout.
  Tensor t({static_cast<std::size_t>(n_inputs), static_cast<std::size_t>(n_outputs)});
  for (std::size_t r = 0; r < t.rows(); ++r)
    for (std::size_t c = 0; c < t.cols(); ++c) {
      // f's label order is inputs then outputs.
      t.at(r, c) = f.data[(c << n_outputs) | r];
    }
  return t;
}

Tensor interpret(const Diagram& d, InterpretationKind kind, const InterpretOptions& options) {
  const std::size_t n_in = d.inputs().size();
  const std::size_t n_out = d.outputs().size();
  if (static_cast<int>(n_in + n_out) > options.cap) {
    throw ContractionCapExceeded("diagram has " + std::to_string(n_in + n_out) +
                                 " boundary wires, cap is " + std::to_string(options.cap));
  }

  // Edge e carries label e; external wire k carries label -(k+1), numbered
  // outputs first so the final factor is already in row-major order.
  std::map<VertexId, int> external;
  for (std::size_t k = 0; k < n_out; ++k) external[d.outputs()[k]] = -static_cast<int>(k) - 1;
  for (std::size_t k = 0; k < n_in; ++k) external[d.inputs()[k]] = -static_cast<int>(n_out + k) - 1;

  std::vector<Factor> factors;
  Amplitude scalar = Amplitude::one();
  for (long c = 0; c < d.circles(); ++c) scalar *= Amplitude(2);
  for (const auto& [id, v] : d.vertices()) {
    std::vector<int> labels;
    for (EdgeId e : d.incident(id)) labels.push_back(e);
    if (v.kind == VertexKind::Boundary) {
      const Amplitude one = Amplitude::one();
      factors.push_back({{labels.at(0), external.at(id)}, {one, 0, 0, one}});
      continue;
    }
    if (static_cast<int>(labels.size()) > options.cap) {
      throw ContractionCapExceeded("vertex " + std::to_string(id) + " has degree " +
                                   std::to_string(labels.size()));
    }
    Factor f = trace_repeats(spider_factor(v.kind, v.phase, labels, kind));
    if (f.labels.empty()) scalar *= f.data[0];
    else factors.push_back(std::move(f));
  }

  std::mt19937_64 rng(options.random_order_seed.value_or(0));
  while (factors.size() > 1 && !scalar.is_zero()) {
    std::size_t best_i = 0;
    std::size_t best_j = 1;
    if (options.random_order_seed) {
      std::vector<std::pair<std::size_t, std::size_t>> linked;
      for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j)
          if (shares_label(factors[i], factors[j])) linked.emplace_back(i, j);
      if (linked.empty()) {
        best_i = rng() % factors.size();
        best_j = rng() % (factors.size() - 1);
        if (best_j >= best_i) ++best_j;
        if (best_i > best_j) std::swap(best_i, best_j);
      } else {
        std::tie(best_i, best_j) = linked[rng() % linked.size()];
      }
    } else {
      // Prefer linked pairs with the smallest result; fall back to the
      // smallest outer product.
      std::size_t best = std::numeric_limits<std::size_t>::max();
      bool best_linked = false;
      for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j) {
          const bool linked = shares_label(factors[i], factors[j]);
          const std::size_t rank = result_rank(factors[i], factors[j]);
          if ((linked && !best_linked) || (linked == best_linked && rank < best)) {
            best = rank;
            best_linked = linked;
            best_i = i;
            best_j = j;
          }
        }
    }
    if (static_cast<int>(result_rank(factors[best_i], factors[best_j])) > options.cap) {
      throw ContractionCapExceeded("intermediate rank " +
                                   std::to_string(result_rank(factors[best_i], factors[best_j])) +
                                   " exceeds cap " + std::to_string(options.cap));
    }
    Factor merged = contract(factors[best_i], factors[best_j]);
    factors.erase(factors.begin() + static_cast<std::ptrdiff_t>(best_j));
    factors[best_i] = std::move(merged);
  }

  Tensor out({n_in, n_out});
  if (scalar.is_zero()) return out;
  if (factors.empty()) return Tensor::scalar(scalar);

  // Permute the remaining labels -1, -2, ... into index order.
  const Factor& f = factors.front();
  const int n = static_cast<int>(f.labels.size());
  std::vector<int> target(n);
  for (int i = 0; i < n; ++i) target[i] = -f.labels[i] - 1;
  const int total = static_cast<int>(n_in + n_out);
  for (std::size_t idx = 0; idx < f.data.size(); ++idx) {
    if (f.data[idx].is_zero()) continue;
    std::size_t flat = 0;
    for (int i = 0; i < n; ++i) flat |= ((idx >> (n - 1 - i)) & 1) << (total - 1 - target[i]);
    const std::size_t row = flat >> n_in;
    const std::size_t col = flat & ((std::size_t{1} << n_in) - 1);
    out.at(row, col) = f.data[idx] * scalar;
  }
  return out;
}

int flat_phase_exponent(const Diagram& d) {
  long q = 0;
  for (const auto& [id, v] : d.vertices()) {
    if (v.kind == VertexKind::X) q += static_cast<long>(d.degree(id));
    if (v.kind == VertexKind::H) q -= 1;
  }
  return static_cast<int>(((q % 4) + 4) % 4);
}

Amplitude flat_phase_predictor(const Diagram& d) { return Amplitude::phase(flat_phase_exponent(d)); }

}  // namespace zxmin
