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

#include "eqgc/complexla.hpp"

#include <cmath>

namespace eqgc {

namespace {
constexpr double kInputTol = 1e-10;
}

HermEig herm_eig(const CMatrix& h) {
  if (h.rows() != h.cols()) throw ValidationError("herm_eig: matrix is not square");
  if (!h.allFinite()) throw ValidationError("herm_eig: non-finite entry");
  if (!is_hermitian(h, kInputTol)) throw ValidationError("herm_eig: matrix is not Hermitian");
  // Symmetrize so round-off in the input does not leak into the spectrum.
  const CMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
  if (solver.info() != Eigen::Success) throw ValidationError("herm_eig: solver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

CMatrix expm_hermitian(const CMatrix& h) {
  const HermEig eig = herm_eig(h);
  CVector phases(eig.evals.size());
  for (Eigen::Index i = 0; i < eig.evals.size(); ++i) {
    phases(i) = std::exp(Complex(0.0, -eig.evals(i)));
  }
  return eig.evecs * phases.asDiagonal() * eig.evecs.adjoint();
}

CMatrix logm_unitary(const CMatrix& u) {
  if (u.rows() != u.cols()) throw ValidationError("logm_unitary: matrix is not square");
  if (!u.allFinite() || !is_unitary(u, kInputTol)) {
    throw ValidationError("logm_unitary: matrix is not unitary");
  }
  // A unitary matrix is normal, so its complex Schur form is diagonal and the
  // Schur vectors are an orthonormal eigenbasis even for repeated eigenvalues.
  Eigen::ComplexSchur<CMatrix> schur(u);
  const CMatrix& t = schur.matrixT();
  const CMatrix& q = schur.matrixU();
  RVector angles(u.rows());
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    // u = exp(-i R): eigenvalue e^{i a} maps to R-eigenvalue -a. Principal
    // branch: pick -a in (-pi, pi], i.e. a in [-pi, pi).
    double a = std::arg(t(i, i));  // (-pi, pi]
    double r = -a;                 // [-pi, pi)
    if (r <= -kPi) r += 2.0 * kPi;
    angles(i) = r;
  }
  CMatrix r = q * angles.cast<Complex>().asDiagonal() * q.adjoint();
  return 0.5 * (r + r.adjoint());
}

CMatrix random_unitary(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix z(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) z(i, j) = Complex(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ();
  const CMatrix rmat = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    const Complex d = rmat(i, i);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(i) *= d / mag;
  }
  return q;
}

CMatrix random_hermitian(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix z(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) z(i, j) = Complex(normal(rng), normal(rng));
  }
  return 0.5 * (z + z.adjoint());
}

}  // namespace eqgc
