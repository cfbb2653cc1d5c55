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

// Outcome analysis of the alpha = pi circuit (|+> start, CZ(pi) on every
// edge, Hadamard on every node) on cycle graphs, via the cyclic-bitstring
// reduction rule.

#include <cstdint>
#include <string>
#include <vector>

namespace eqgc {

struct CyclicBitstring {
  std::vector<int> bits;  // bits.front() and bits.back() are adjacent

  static CyclicBitstring from_string(const std::string& s);
  std::string to_string() const;
};

struct Observability {
  bool observable = false;
  double probability = 0.0;  // 0, 1/2^(n-1) (odd n) or 1/2^(n-2) (even n)
};

/// Which zero the reduction removes at each step.
enum class ZeroChoice { kLeftmost, kRightmost };

/// Outcome probability of a length-n string when observable.
double observable_probability(int n);

/// Reduces by repeatedly replacing a zero and its two cyclic neighbours with
/// the neighbours' XOR, then classifies the terminal string.
Observability reduce_cyclic(const CyclicBitstring& b, ZeroChoice choice = ZeroChoice::kLeftmost);

/// Same reduction, but with the zero picked by `pick(bits)` at every step.
/// Exposed so choice-independence can be tested exhaustively.
template <typename Picker>
bool reduces_to_observable(std::vector<int> bits, Picker pick);

/// All observable length-n strings as basis indices (bit of node 0 is most
/// significant), ascending. 1 <= n <= 20.
std::vector<std::int64_t> observable_set(int n);

struct CrosscheckResult {
  bool ok = true;
  std::string message;  // first mismatch, empty when ok
};

/// Simulates the circuit on cycle_graph(n) and compares support,
/// probabilities (1e-10) and ones-count parity with observable_set(n).
CrosscheckResult crosscheck_cycle(int n);

// ---------------------------------------------------------------------------

namespace detail {
bool terminal_observable(const std::vector<int>& bits);
std::vector<int> reduce_at(const std::vector<int>& bits, std::size_t zero);
}  // namespace detail

template <typename Picker>
bool reduces_to_observable(std::vector<int> bits, Picker pick) {
  while (bits.size() > 2) {
    bool has_zero = false;
    for (int b : bits) has_zero = has_zero || b == 0;
    if (!has_zero) break;
    bits = detail::reduce_at(bits, pick(bits));
  }
  return detail::terminal_observable(bits);
}

}  // namespace eqgc
