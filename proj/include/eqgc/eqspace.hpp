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

// Equivariant linear maps on n single-qubit registers, characterized by the
// weight table w(i, j, k): for an input basis string with i ones, the output
// basis string with j ones on the input's ones and k ones on its zeros.

#include <cstdint>
#include <vector>

#include "eqgc/complexla.hpp"

namespace eqgc {

class EquivariantWeights {
 public:
  explicit EquivariantWeights(int n);

  int n() const { return n_; }
  /// Number of (i, j, k) classes: sum_i (i+1)(n-i+1).
  std::size_t size() const { return values_.size(); }

  Complex& at(int i, int j, int k) { return values_[index(i, j, k)]; }
  const Complex& at(int i, int j, int k) const { return values_[index(i, j, k)]; }
  const std::vector<Complex>& values() const { return values_; }

  friend bool operator==(const EquivariantWeights&, const EquivariantWeights&) = default;

 private:
  std::size_t index(int i, int j, int k) const;

  int n_;
  std::vector<std::size_t> offset_;  // first slot of each i
  std::vector<Complex> values_;
};

/// (i, j, k) class of the matrix entry <row| L |col>.
struct WeightClass {
  int i;
  int j;
  int k;
};
WeightClass weight_class(std::int64_t row, std::int64_t col, int n);

CMatrix matrix_from_weights(const EquivariantWeights& w);

/// Reads w from the sorted representatives |0..01..1>; throws
/// NotEquivariantError naming the first entry pair that breaks a class.
EquivariantWeights weights_from_matrix(const CMatrix& m, double tol);

/// Number of (i, j, k) classes, sum_i (i+1)(n-i+1) = C(n+3, 3).
std::int64_t full_dimension(int n);

/// n(n+1)(n+5)/6. Differs from full_dimension for every n >= 1.
std::int64_t pyramid_closed_form(int n);

/// Rank of the stacked, flattened (i, j, k) indicator matrices. n <= 5.
std::int64_t rank_oracle(int n);

/// binomial(n + s - 1, s - 1): number of node-state multisets.
std::int64_t diagonal_dimension(int n, int s);

/// One phase per node-state multiset (count tuple of length s summing to n).
struct DiagonalEquivariantSpec {
  int n = 0;
  int s = 2;
  std::vector<std::vector<int>> multisets;  // count tuples, lexicographic
  std::vector<double> phases;               // one per multiset
};

std::vector<std::vector<int>> count_tuples(int n, int s);
DiagonalEquivariantSpec diagonal_spec(int n, int s, std::vector<double> phases);
/// diag(exp(i phase(multiset of the basis string))); s^n <= 4096.
CMatrix diagonal_equivariant_matrix(const DiagonalEquivariantSpec& spec);

/// CZ(alpha) on every pair of nodes: w(i, i, 0) = exp(-i alpha i(i-1)/2).
EquivariantWeights cz_all_pairs_weights(int n, double alpha);

/// u applied at every node:
/// w(i, j, k) = u00^(n-i-k) u01^(i-j) u10^k u11^j.
EquivariantWeights uniform_unitary_weights(const CMatrix& u, int n);

}  // namespace eqgc
