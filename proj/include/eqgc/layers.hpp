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

// Layer algebra for equivariant quantum graph circuits: node layers, EDU edge
// layers, diagonal edge layers and Hamiltonian (EH) layers, together with
// the equivariance / commutativity checkers and the EDU -> EH converters.

#include <array>
#include <iosfwd>
#include <optional>
#include <tuple>
#include <variant>
#include <vector>

#include "eqgc/complexla.hpp"
#include "eqgc/graphs.hpp"
#include "eqgc/simulator.hpp"

namespace eqgc {

/// V(t1, t2, t3) = Rz(t3) Ry(t2) Rz(t1).
CMatrix euler_unitary(double theta1, double theta2, double theta3);

/// Same single-node unitary V at every node.
struct NodeLayer {
  CMatrix v;
  std::optional<std::array<double, 3>> euler;

  static NodeLayer from_unitary(CMatrix v);
  static NodeLayer from_euler(double theta1, double theta2, double theta3);
};

/// U = (V^dagger x V^dagger) diag(exp(i phi)) (V x V).
struct EduGate {
  CMatrix v;
  RVector d_phases;  // length s^2, index e1 * s + e2
  bool undirected = true;

  int s() const { return static_cast<int>(v.rows()); }
};

struct EdgeLayer {
  EduGate gate;
};

/// diag(exp(i phi)) applied on every edge.
struct DiagEdgeLayer {
  RVector d_phases;
};

/// exp(-i (sum_edges H_edge + sum_nodes H_node)).
struct EhLayer {
  CMatrix h_node;
  CMatrix h_edge;
};

/// A gate on a single fixed node. Not an EQGC layer; it exists so the
/// equivariance checker has something to reject.
struct SingleNodeGate {
  CMatrix u;
  int node = 0;
};

using Layer = std::variant<NodeLayer, EdgeLayer, DiagEdgeLayer, EhLayer, SingleNodeGate>;

class Circuit {
 public:
  explicit Circuit(int s = 2) : s_(s) {}

  int s() const { return s_; }
  const std::vector<Layer>& layers() const { return layers_; }
  bool empty() const { return layers_.empty(); }

  /// Throws DimensionError if the layer's local dimension differs from s().
  Circuit& add(Layer layer);

 private:
  int s_;
  std::vector<Layer> layers_;
};

/// Symmetric two-qubit phase vector (phi00, phi01, phi01, phi11).
RVector symmetric_phases(double phi00, double phi01, double phi11);
/// Phases of CZ(alpha): (0, 0, 0, -alpha).
RVector cz_phases(double alpha);

CMatrix edu_matrix(const EduGate& g);
CMatrix diag_matrix(const RVector& d_phases);

/// Canonical edge order used by edge layers: the graph's directed edge list
/// when present, otherwise the sorted undirected edges as (u, v) with u < v.
std::vector<Edge> layer_edges(const Graph& g);

void apply_layer(const Layer& layer, const Graph& g, Statevector& state);
Statevector apply_circuit(const Circuit& c, const Graph& g, Statevector state);

/// Dense C(A); throws SizeLimitError if s^n > 4096.
CMatrix circuit_unitary(const Circuit& c, const Graph& g);

/// C(A) == Pt^T C(P^T A P) Pt within tol, with Pt = permutation_operator(p).
bool check_equivariance(const Circuit& c, const Graph& g, const Permutation& p, double tol);
/// Max-norm residual of the equivariance identity.
double equivariance_residual(const Circuit& c, const Graph& g, const Permutation& p);

/// U_{01} U_{02} == U_{02} U_{01} on three registers, within 1e-9.
bool check_commutativity(const CMatrix& u);
/// SWAP U SWAP == U within 1e-9.
bool check_undirected_symmetry(const CMatrix& u);
/// Directed-graph conditions: U_{10}, U_{20} commute (shared target);
/// U_{01}, U_{20} commute (node 0 as source and target); U_{01}, U_{10}
/// commute (both directions of one edge).
bool check_directed_conditions(const CMatrix& u);

struct CommutativityReport {
  double shared_source = 0.0;
  double shared_target = 0.0;
  double chained = 0.0;
  double reversed = 0.0;
  double swap_symmetry = 0.0;
};
CommutativityReport commutativity_residuals(const CMatrix& u);

EhLayer node_layer_to_eh(const CMatrix& v);
EhLayer diag_edge_to_eh(const RVector& d_phases);
std::vector<EhLayer> edu_to_eh(const EduGate& g);
/// Per-layer conversion of a circuit to an EH-only circuit.
Circuit to_eh_circuit(const Circuit& c);

/// (u1, EDU(V, D), u2) -> (V u1, D, u2 V^dagger).
std::tuple<NodeLayer, DiagEdgeLayer, NodeLayer> absorb_redundancy(const NodeLayer& u1,
                                                                  const EduGate& g,
                                                                  const NodeLayer& u2);

/// One line per layer: "node t1 t2 t3" | "edge phi00 phi01 phi11" |
/// "czedge alpha" | "hnode". Only q = 1 circuits.
Circuit read_circuit(std::istream& in);
void write_circuit(std::ostream& out, const Circuit& c);

}  // namespace eqgc
