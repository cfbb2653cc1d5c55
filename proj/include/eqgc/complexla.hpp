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

// Dense complex linear algebra on top of Eigen: Kronecker products,
// unitarity checks, Hermitian spectra, and the exp/log pair used by
// Hamiltonian layers.

#include <Eigen/Dense>
#include <complex>
#include <random>

#include "eqgc/errors.hpp"

namespace eqgc {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;

/// Kronecker product; the result has dims (a.rows*b.rows, a.cols*b.cols).
template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA>& a,
          const Eigen::MatrixBase<DerivedB>& b)
    -> Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> {
  using Scalar = typename DerivedA::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(),
                                                            a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// k-fold Kronecker power; kron_power(a, 0) is the 1x1 identity.
template <typename Derived>
auto kron_power(const Eigen::MatrixBase<Derived>& a, int k)
    -> Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> {
  using M = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  M out = M::Identity(1, 1);
  for (int i = 0; i < k; ++i) out = kron(out, a);
  return out;
}

template <typename DerivedA, typename DerivedB>
double max_abs_diff(const Eigen::MatrixBase<DerivedA>& a,
                    const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("max_abs_diff: shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

/// True iff max|a^dagger a - I| <= tol. Throws DimensionError on non-square input.
template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& a, double tol) {
  if (a.rows() != a.cols()) throw DimensionError("is_unitary: matrix is not square");
  const auto n = a.rows();
  return max_abs_diff(a.adjoint() * a, Derived::PlainObject::Identity(n, n)) <= tol;
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return max_abs_diff(a, a.adjoint()) <= tol;
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& a) {
  return a.allFinite();
}

struct HermEig {
  RVector evals;  // ascending
  CMatrix evecs;  // columns are eigenvectors
};

/// Spectral decomposition h = evecs * diag(evals) * evecs^dagger.
/// Throws ValidationError unless h is Hermitian within 1e-10.
HermEig herm_eig(const CMatrix& h);

/// exp(-i h) for Hermitian h.
CMatrix expm_hermitian(const CMatrix& h);

/// Hermitian R with u = exp(-i R), eigenphases of R in (-pi, pi].
/// Throws ValidationError unless u is unitary within 1e-10.
CMatrix logm_unitary(const CMatrix& u);

/// Haar-random unitary (QR of a complex Ginibre matrix with phase fix).
CMatrix random_unitary(std::mt19937_64& rng, int dim);

/// Random Hermitian matrix with standard normal entries (GUE-like).
CMatrix random_hermitian(std::mt19937_64& rng, int dim);

}  // namespace eqgc
