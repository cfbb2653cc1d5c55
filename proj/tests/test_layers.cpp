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

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "eqgc/complexla.hpp"
#include "eqgc/errors.hpp"
#include "eqgc/gates.hpp"
#include "eqgc/layers.hpp"
#include "eqgc/verify.hpp"
#include "oracles.hpp"

using namespace eqgc;

namespace {

// Dense unitary of a qubit EDU-QGC assembled from per-gate index oracles.
CMatrix dense_circuit(const Circuit& c, const Graph& g) {
  const int n = g.n();
  CMatrix u = CMatrix::Identity(std::int64_t{1} << n, std::int64_t{1} << n);
  for (const auto& layer : c.layers()) {
    if (const auto* node = std::get_if<NodeLayer>(&layer)) {
      for (int v = 0; v < n; ++v) u = oracle::one_local(node->v, v, n) * u;
    } else if (const auto* edge = std::get_if<EdgeLayer>(&layer)) {
      const CMatrix vv = kron(edge->gate.v, edge->gate.v);
      CVector d(4);
      for (int i = 0; i < 4; ++i) d(i) = std::polar(1.0, edge->gate.d_phases(i));
      const CMatrix gate = vv.adjoint() * d.asDiagonal() * vv;
      for (auto [a, b] : g.edges()) u = oracle::two_local(gate, a, b, n) * u;
    } else if (const auto* diag = std::get_if<DiagEdgeLayer>(&layer)) {
      CVector d(4);
      for (int i = 0; i < 4; ++i) d(i) = std::polar(1.0, diag->d_phases(i));
      for (auto [a, b] : g.edges()) u = oracle::two_local(CMatrix(d.asDiagonal()), a, b, n) * u;
    } else {
      ADD_FAILURE() << "unexpected layer kind";
    }
  }
  return u;
}

}  // namespace

TEST(Layers, EulerUnitaryIsRzRyRz) {
  const CMatrix v = euler_unitary(0.3, -1.1, 2.4);
  EXPECT_LT(max_abs_diff(v, gates::rz(2.4) * gates::ry(-1.1) * gates::rz(0.3)), 1e-15);
  const auto layer = NodeLayer::from_euler(0.3, -1.1, 2.4);
  ASSERT_TRUE(layer.euler.has_value());
  EXPECT_LT(max_abs_diff(layer.v, v), 0.0 + 1e-15);
}

TEST(Layers, CzPhasesGiveCz) {
  EXPECT_LT(max_abs_diff(diag_matrix(cz_phases(0.8)), gates::cz(0.8)), 1e-15);
  const RVector p = symmetric_phases(0.1, 0.2, 0.3);
  EXPECT_EQ(p(1), p(2));
}

TEST(Layers, EduMatrixValidates) {
  EduGate g{gates::hadamard(), cz_phases(kPi), true};
  EXPECT_LT(max_abs_diff(edu_matrix(g), kron(gates::hadamard(), gates::hadamard()) * gates::cz(kPi) *
                                            kron(gates::hadamard(), gates::hadamard())),
            1e-14);
  EduGate asym{gates::identity(2), RVector::LinSpaced(4, 0.0, 0.9), true};
  EXPECT_THROW(edu_matrix(asym), ValidationError);
  asym.undirected = false;
  EXPECT_NO_THROW(edu_matrix(asym));
  EduGate bad{CMatrix::Constant(2, 2, 1.0), cz_phases(0.1), true};
  EXPECT_THROW(edu_matrix(bad), ValidationError);
  EduGate short_d{gates::identity(2), RVector::Zero(3), true};
  EXPECT_THROW(edu_matrix(short_d), ValidationError);
}

TEST(Layers, CircuitRejectsWrongLocalDimension) {
  Circuit c(2);
  EXPECT_THROW(c.add(NodeLayer::from_unitary(gates::identity(4))), DimensionError);
}

TEST(Layers, CircuitUnitaryMatchesIndexOracle) {
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 8; ++rep) {
    const Circuit c = random_edu_circuit(rng, 3);
    const Graph g = random_graph(rng, 4);
    EXPECT_LT(max_abs_diff(circuit_unitary(c, g), dense_circuit(c, g)), 1e-12);
  }
}

TEST(Layers, FactorizedEdgeLayerMatchesDense) {
  // s = 8 takes the factorized path; compare with the dense two-local oracle.
  std::mt19937_64 rng(22);
  const EduGate gate = random_edu(rng, 8);
  const Graph g = path_graph(3);
  Circuit c(8);
  c.add(EdgeLayer{gate});
  CMatrix want = CMatrix::Identity(512, 512);
  for (auto [a, b] : g.edges()) {
    const CMatrix d = oracle::two_local(edu_matrix(gate), a, b, 3);
    want = d * want;
  }
  EXPECT_LT(max_abs_diff(circuit_unitary(c, g), want), 1e-11);
}

TEST(Layers, EquivarianceAgainstLiteralPermutationOracle) {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 6; ++rep) {
    const Circuit c = random_edu_circuit(rng, 2);
    const Graph g = random_graph(rng, 4);
    for (const auto& p : all_permutations(4)) {
      // P^T C(P^T A P) P = C(A), with P^T A P the graph relabelled by p^-1.
      const CMatrix pm = oracle::permutation(p.image(), 2);
      const CMatrix lhs = pm.transpose() * dense_circuit(c, permute_graph(g, p.inverse())) * pm;
      EXPECT_LT(max_abs_diff(lhs, dense_circuit(c, g)), 1e-10);
      EXPECT_TRUE(check_equivariance(c, g, p, 1e-9));
    }
  }
}

TEST(Layers, SingleNodeGateFailsEquivariance) {
  Circuit c(2);
  c.add(SingleNodeGate{gates::pauli_x(), 1});
  EXPECT_FALSE(check_equivariance(c, path_graph(3), Permutation({1, 0, 2}), 1e-9));
  EXPECT_TRUE(check_equivariance(c, path_graph(3), Permutation({2, 1, 0}), 1e-9));
}

TEST(Layers, CommutativityChecks) {
  EXPECT_TRUE(check_commutativity(gates::cz(1.2)));
  EXPECT_TRUE(check_undirected_symmetry(gates::cz(1.2)));
  EXPECT_FALSE(check_commutativity(gates::cnot() * kron(gates::hadamard(), gates::identity(2))));
  EXPECT_TRUE(check_commutativity(gates::cnot()));  // shared control commutes
  EXPECT_FALSE(check_directed_conditions(gates::cnot()));
  EXPECT_FALSE(check_undirected_symmetry(gates::cnot()));
  EXPECT_FALSE(check_commutativity(gates::swap_gate()));
  const auto rep = commutativity_residuals(gates::cz(0.5));
  EXPECT_LT(rep.shared_source + rep.shared_target + rep.chained + rep.reversed + rep.swap_symmetry, 1e-14);
}

TEST(Layers, EhConversionMatchesForCz) {
  const EhLayer eh = diag_edge_to_eh(cz_phases(kPi));
  CMatrix want = CMatrix::Zero(4, 4);
  want(3, 3) = kPi;
  EXPECT_LT(max_abs_diff(eh.h_edge, want), 1e-12);
  EXPECT_LT(max_abs_diff(expm_hermitian(node_layer_to_eh(gates::hadamard()).h_node), gates::hadamard()), 1e-12);
}

TEST(Layers, EhCircuitMatchesOnRandomCircuits) {
  std::mt19937_64 rng(24);
  for (int rep = 0; rep < 10; ++rep) {
    const Circuit c = random_edu_circuit(rng, 3);
    const Graph g = random_graph(rng, 1 + rep % 4);
    EXPECT_LT(max_abs_diff(circuit_unitary(to_eh_circuit(c), g), dense_circuit(c, g)), 1e-8);
  }
}

TEST(Layers, EhLayerOnDirectedGraphUsesEachArc) {
  std::mt19937_64 rng(25);
  const CMatrix h = random_hermitian(rng, 4);
  const Graph g(3, {{0, 1}, {1, 2}}, std::vector<Edge>{{1, 0}, {1, 2}});
  Circuit c(2);
  c.add(EhLayer{CMatrix::Zero(2, 2), h});
  const CMatrix want = expm_hermitian(oracle::two_local(h, 1, 0, 3) + oracle::two_local(h, 1, 2, 3));
  EXPECT_LT(max_abs_diff(circuit_unitary(c, g), want), 1e-10);
}

TEST(Layers, AbsorbRedundancyPreservesDistribution) {
  std::mt19937_64 rng(26);
  const NodeLayer u1 = NodeLayer::from_unitary(random_unitary(rng, 2));
  const NodeLayer u2 = NodeLayer::from_unitary(random_unitary(rng, 2));
  const EduGate gate = random_edu(rng, 2);
  Circuit full(2);
  full.add(u1).add(EdgeLayer{gate}).add(u2);
  const auto [a, d, b] = absorb_redundancy(u1, gate, u2);
  Circuit reduced(2);
  reduced.add(a).add(d).add(b);
  const Graph g = cycle_graph(4);
  EXPECT_LT(max_abs_diff(circuit_unitary(full, g), circuit_unitary(reduced, g)), 1e-10);
}

TEST(Layers, CircuitTextRoundTrip) {
  Circuit c(2);
  c.add(NodeLayer::from_unitary(gates::hadamard()));
  c.add(DiagEdgeLayer{cz_phases(kPi / 3)});
  c.add(NodeLayer::from_euler(0.1, 0.2, 0.3));
  c.add(DiagEdgeLayer{symmetric_phases(0.4, -0.5, 0.6)});
  std::stringstream ss;
  write_circuit(ss, c);
  const Circuit back = read_circuit(ss);
  EXPECT_LT(max_abs_diff(circuit_unitary(back, cycle_graph(3)), circuit_unitary(c, cycle_graph(3))), 1e-14);
  std::istringstream bad("node 1 2\n");
  EXPECT_THROW(read_circuit(bad), ValidationError);
}
