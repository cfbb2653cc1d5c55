// Copyright 2026 The EQGC Authors
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

// Fixed-point MPNNs with sum aggregation and their compilation to EDU-QGCs:
// per-edge addition EDUs accumulate neighbour registers, per-node permutation
// unitaries XOR the update function onto fresh registers.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "eqgc/graphs.hpp"
#include "eqgc/layers.hpp"

namespace eqgc {

/// Register values of one node state (w registers of b bits).
using Registers = std::vector<int>;

/// Lookup table for one update function; entry (pack(h) << wb) | pack(a)
/// holds pack(update(h, a)). Register 0 is the most significant.
using UpdateTable = std::vector<std::uint32_t>;

struct MpnnSpec {
  int k = 1;  // layers
  int w = 1;  // registers per state
  int b = 1;  // bits per register
  std::vector<UpdateTable> updates;

  /// Throws ValidationError unless every table is total over 2^(2wb) inputs.
  void validate() const;
};

std::uint32_t pack_registers(const Registers& r, int b);
Registers unpack_registers(std::uint32_t packed, int w, int b);
UpdateTable make_update_table(int w, int b,
                              const std::function<Registers(const Registers&, const Registers&)>& fn);

/// k rounds of wraparound neighbour sums followed by the table update.
std::vector<Registers> classical_forward(const MpnnSpec& spec, const Graph& g,
                                         const std::vector<Registers>& init);

/// Per-node layout: h(0), a(1), h(1), ..., a(k), h(k), each w registers of b
/// qubits; (2k+1)wb qubits per node. Offsets count qubits from the most
/// significant end of the node register.
class RegisterLayout {
 public:
  RegisterLayout(int k, int w, int b);

  int k() const { return k_; }
  int w() const { return w_; }
  int b() const { return b_; }
  int qubits_per_node() const { return (2 * k_ + 1) * w_ * b_; }
  int h_offset(int layer, int reg) const;  // layer 0..k
  int a_offset(int layer, int reg) const;  // layer 1..k

  int read(std::uint64_t node_value, int offset) const;
  std::uint64_t write(std::uint64_t node_value, int offset, int value) const;

 private:
  int k_, w_, b_;
};

struct IncrementDiagonalization {
  CMatrix v;  // rows are the Fourier eigenvectors of the increment
  CMatrix d;  // diagonal, d(j, j) = exp(2 pi i j / 2^b)
};

/// S1 |y> = |y + 1 mod 2^b> written as v^dagger d v. b <= 4.
IncrementDiagonalization increment_diagonalization(int b);
CMatrix increment_matrix(int b);

/// Two registers (x, y) per node, s = 2^(2b):
/// |x1, y1> |x2, y2> -> |x1, y1 + x2> |x2, y2 + x1>. b <= 2.
EduGate addition_edu(int b);

/// Addition EDU adding h(layer-1, i) of each endpoint into a(layer, i) of the other.
EduGate routed_addition_edu(const RegisterLayout& layout, int layer);

/// Permutation unitary XORing update(h(layer-1), a(layer)) onto h(layer).
CMatrix update_unitary(const RegisterLayout& layout, const UpdateTable& table, int layer);

struct CompiledMpnn {
  RegisterLayout layout;
  Circuit circuit;  // edge layer, node layer, repeated k times
};

inline constexpr int kMaxSimulationQubits = 18;

/// Throws SizeLimitError if (2k+1) w b * n_nodes exceeds kMaxSimulationQubits.
CompiledMpnn compile_mpnn(const MpnnSpec& spec, int n_nodes);

struct SimulationReport {
  bool ok = false;
  std::string message;
  std::vector<Registers> classical;
  std::vector<Registers> quantum;
  double min_peak_probability = 1.0;  // smallest max|amp|^2 seen after any layer
};

/// Runs the compiled circuit on the basis state holding `init` and compares
/// the measured h(k) registers with classical_forward.
SimulationReport verify_simulation(const MpnnSpec& spec, const Graph& g,
                                   const std::vector<Registers>& init);

/// Probability that n uniform b-bit strings are pairwise distinct:
/// prod_{i<n} (1 - i / 2^b); 0 when n > 2^b.
double uniqueness_probability(int n, int b);

/// Bits sufficient for uniqueness with probability 1 - eps:
/// ceil(2 log2 n + log2(1 / eps)).
int uniqueness_bits(int n, double eps);

}  // namespace eqgc
