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

// Standard gates used throughout the tests and experiments.

#include <cmath>

#include "eqgc/complexla.hpp"

namespace eqgc::gates {

inline CMatrix identity(int dim) { return CMatrix::Identity(dim, dim); }

inline CMatrix hadamard() {
  const double r = 1.0 / std::sqrt(2.0);
  CMatrix h(2, 2);
  h << r, r, r, -r;
  return h;
}

inline CMatrix pauli_x() {
  CMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline CMatrix pauli_y() {
  CMatrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

inline CMatrix pauli_z() {
  CMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

inline CMatrix rz(double theta) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = std::exp(Complex(0, -theta / 2));
  m(1, 1) = std::exp(Complex(0, theta / 2));
  return m;
}

inline CMatrix ry(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  CMatrix m(2, 2);
  m << c, -s, s, c;
  return m;
}

/// CZ(alpha) = diag(1, 1, 1, exp(-i alpha)).
inline CMatrix cz(double alpha) {
  CMatrix m = CMatrix::Identity(4, 4);
  m(3, 3) = std::exp(Complex(0, -alpha));
  return m;
}

inline CMatrix cnot() {
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
  return m;
}

/// SWAP on two registers of local dimension s.
inline CMatrix swap_gate(int s = 2) {
  CMatrix m = CMatrix::Zero(s * s, s * s);
  for (int a = 0; a < s; ++a) {
    for (int b = 0; b < s; ++b) m(b * s + a, a * s + b) = 1;
  }
  return m;
}

}  // namespace eqgc::gates
