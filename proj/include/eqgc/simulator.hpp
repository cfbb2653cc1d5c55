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

// Dense statevector over n node registers of q qubits each (s = 2^q).
//
// Index convention: basis index = sum_i d_i * s^(n-1-i), node 0 is the most
// significant digit. Gates are applied by strided index arithmetic; full
// s^n x s^n matrices are only built by the verification helpers.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "eqgc/complexla.hpp"
#include "eqgc/graphs.hpp"

namespace eqgc {

inline constexpr std::int64_t kMaxDenseDim = 4096;

class Statevector {
 public:
  Statevector(int n, int q);  // |0...0>
  Statevector(int n, int q, CVector amps);

  int n() const { return n_; }
  int q() const { return q_; }
  int s() const { return 1 << q_; }
  std::int64_t dim() const { return amps_.size(); }
  /// s^(n-1-node): distance between consecutive digit values of a node.
  std::int64_t stride(int node) const;

  const CVector& amps() const { return amps_; }
  CVector& amps() { return amps_; }
  double norm_squared() const { return amps_.squaredNorm(); }

 private:
  int n_;
  int q_;
  CVector amps_;
};

using OutcomeDistribution = std::map<std::int64_t, double>;

std::int64_t checked_power(std::int64_t base, int exp, std::int64_t limit);

Statevector basis_state(int n, int q, std::int64_t index);

/// Kronecker product of unit-norm node states in node order.
Statevector product_state(std::span<const CVector> node_states);
Statevector uniform_product_state(const CVector& node_state, int n);

/// I x .. x u x .. x I on one node register, in place.
void apply_1local(Statevector& state, const CMatrix& u, int node);

/// Two-register gate; u's first tensor factor acts on node a.
void apply_2local(Statevector& state, const CMatrix& u, int a, int b);

/// Multiplies each amplitude by phases[d_a * s + d_b].
void apply_diagonal_2local(Statevector& state, const CVector& phases, int a, int b);

/// Reorders registers: |d_0 .. d_{n-1}> -> |d_p(0) .. d_p(n-1)>.
Statevector apply_permutation(const Statevector& state, const Permutation& p);

/// Dense matrix of apply_permutation; throws SizeLimitError if s^n > 4096.
CMatrix permutation_operator(const Permutation& p, int n, int s);

/// Embeds an s x s (or s^2 x s^2) operator on the given node(s) as a dense s^n matrix.
CMatrix embed_1local(const CMatrix& u, int node, int n, int s);
CMatrix embed_2local(const CMatrix& u, int a, int b, int n, int s);

/// Born-rule probabilities; entries below 1e-14 are dropped.
OutcomeDistribution outcome_distribution(const Statevector& state);

/// Probability of measuring exactly k ones, k = 0..n. Requires q = 1.
std::vector<double> ones_count_distribution(const Statevector& state);

std::string bitstring(std::int64_t index, int n);
int popcount(std::int64_t x);

}  // namespace eqgc
