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

#include "eqgc/layers.hpp"

#include <bit>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "eqgc/gates.hpp"

namespace eqgc {

namespace {

constexpr double kUnitaryTol = 1e-10;
constexpr double kCheckTol = 1e-9;

int local_dim_of_pair_gate(const CMatrix& u) {
  if (u.rows() != u.cols()) throw DimensionError("two-node gate is not square");
  const int s = static_cast<int>(std::lround(std::sqrt(static_cast<double>(u.rows()))));
  if (s * s != u.rows() || s < 2 || !std::has_single_bit(static_cast<unsigned>(s))) {
    throw DimensionError("two-node gate dimension is not s^2 with s a power of two");
  }
  return s;
}

int qubits_of(int s) { return std::countr_zero(static_cast<unsigned>(s)); }

void validate_edu(const EduGate& g) {
  const int s = g.s();
  if (g.v.rows() != g.v.cols() || s < 2) throw ValidationError("EduGate: V is not square");
  if (!is_unitary(g.v, kUnitaryTol)) throw ValidationError("EduGate: V is not unitary");
  if (g.d_phases.size() != s * s) throw ValidationError("EduGate: need s^2 phases");
  if (!g.d_phases.allFinite()) throw ValidationError("EduGate: non-finite phase");
  if (g.undirected) {
    for (int a = 0; a < s; ++a) {
      for (int b = a + 1; b < s; ++b) {
        if (std::abs(g.d_phases(a * s + b) - g.d_phases(b * s + a)) > 1e-12) {
          throw ValidationError("EduGate: undirected gate has asymmetric phases at |" +
                                std::to_string(a) + std::to_string(b) + ">");
        }
      }
    }
  }
}

CVector phase_vector(const RVector& phases) {
  CVector out(phases.size());
  for (Eigen::Index i = 0; i < phases.size(); ++i) out(i) = std::exp(Complex(0.0, phases(i)));
  return out;
}

// Principal Hamiltonian angle r in (-pi, pi] with exp(-i r) = exp(i phi).
double principal_angle(double phi) {
  double r = std::remainder(-phi, 2.0 * kPi);  // [-pi, pi]
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

int layer_local_dim(const Layer& layer) {
  return std::visit(
      [](const auto& l) -> int {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, NodeLayer>) {
          return static_cast<int>(l.v.rows());
        } else if constexpr (std::is_same_v<T, EdgeLayer>) {
          return l.gate.s();
        } else if constexpr (std::is_same_v<T, DiagEdgeLayer>) {
          return static_cast<int>(std::lround(std::sqrt(static_cast<double>(l.d_phases.size()))));
        } else if constexpr (std::is_same_v<T, EhLayer>) {
          return static_cast<int>(l.h_node.rows());
        } else {
          return static_cast<int>(l.u.rows());
        }
      },
      layer);
}

struct Placed {
  const CMatrix* u;
  int a;
  int b;
};

// Max-norm of (product of `lhs`) - (product of `rhs`), gates listed in the
// order they are applied, computed one basis column at a time.
double operator_difference(int n, int s, const std::vector<Placed>& lhs,
                           const std::vector<Placed>& rhs) {
  const int q = qubits_of(s);
  Statevector probe(n, q);
  const std::int64_t dim = probe.dim();
  double worst = 0.0;
  for (std::int64_t col = 0; col < dim; ++col) {
    Statevector x(n, q), y(n, q);
    x.amps().setZero();
    x.amps()(col) = 1.0;
    y.amps() = x.amps();
    for (const auto& g : lhs) apply_2local(x, *g.u, g.a, g.b);
    for (const auto& g : rhs) apply_2local(y, *g.u, g.a, g.b);
    worst = std::max(worst, max_abs_diff(x.amps(), y.amps()));
  }
  return worst;
}

CMatrix eh_hamiltonian(const EhLayer& l, const Graph& g, int s) {
  const int n = g.n();
  const auto dim = checked_power(s, n, kMaxDenseDim);
  CMatrix h = CMatrix::Zero(dim, dim);
  for (int v = 0; v < n; ++v) h += embed_1local(l.h_node, v, n, s);
  if (g.directed_edges()) {
    for (auto [a, b] : *g.directed_edges()) h += embed_2local(l.h_edge, a, b, n, s);
  } else {
    // An undirected edge carries both orientations at half weight, which is
    // H_edge itself when H_edge is swap-symmetric.
    for (auto [a, b] : g.edges()) {
      h += 0.5 * (embed_2local(l.h_edge, a, b, n, s) + embed_2local(l.h_edge, b, a, n, s));
    }
  }
  return h;
}

}  // namespace

CMatrix euler_unitary(double theta1, double theta2, double theta3) {
  return gates::rz(theta3) * gates::ry(theta2) * gates::rz(theta1);
}

NodeLayer NodeLayer::from_unitary(CMatrix v) {
  if (!is_unitary(v, kUnitaryTol)) throw ValidationError("NodeLayer: V is not unitary");
  return NodeLayer{std::move(v), std::nullopt};
}

NodeLayer NodeLayer::from_euler(double theta1, double theta2, double theta3) {
  return NodeLayer{euler_unitary(theta1, theta2, theta3), std::array{theta1, theta2, theta3}};
}

Circuit& Circuit::add(Layer layer) {
  if (layer_local_dim(layer) != s_) {
    throw DimensionError("Circuit::add: layer local dimension differs from circuit s");
  }
  layers_.push_back(std::move(layer));
  return *this;
}

RVector symmetric_phases(double phi00, double phi01, double phi11) {
  RVector p(4);
  p << phi00, phi01, phi01, phi11;
  return p;
}

RVector cz_phases(double alpha) {
  RVector p = RVector::Zero(4);
  p(3) = -alpha;
  return p;
}

CMatrix diag_matrix(const RVector& d_phases) { return phase_vector(d_phases).asDiagonal(); }

CMatrix edu_matrix(const EduGate& g) {
  validate_edu(g);
  const CMatrix vv = kron(g.v, g.v);
  return vv.adjoint() * phase_vector(g.d_phases).asDiagonal() * vv;
}

std::vector<Edge> layer_edges(const Graph& g) {
  return g.directed_edges() ? *g.directed_edges() : g.edges();
}

void apply_layer(const Layer& layer, const Graph& g, Statevector& state) {
  if (layer_local_dim(layer) != state.s()) throw DimensionError("apply_layer: local dimension mismatch");
  std::visit(
      [&](const auto& l) {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, NodeLayer>) {
          for (int v = 0; v < state.n(); ++v) apply_1local(state, l.v, v);
        } else if constexpr (std::is_same_v<T, EdgeLayer>) {
          validate_edu(l.gate);
          if (state.s() <= 4) {
            const CMatrix u = edu_matrix(l.gate);
            for (auto [a, b] : layer_edges(g)) apply_2local(state, u, a, b);
          } else {
            // Large registers: apply the factorization (V^dag x V^dag) D (V x V)
            // per edge instead of the dense s^2 x s^2 gate.
            const CMatrix vd = l.gate.v.adjoint();
            const CVector d = phase_vector(l.gate.d_phases);
            for (auto [a, b] : layer_edges(g)) {
              apply_1local(state, l.gate.v, a);
              apply_1local(state, l.gate.v, b);
              apply_diagonal_2local(state, d, a, b);
              apply_1local(state, vd, a);
              apply_1local(state, vd, b);
            }
          }
        } else if constexpr (std::is_same_v<T, DiagEdgeLayer>) {
          const CVector d = phase_vector(l.d_phases);
          for (auto [a, b] : layer_edges(g)) apply_diagonal_2local(state, d, a, b);
        } else if constexpr (std::is_same_v<T, EhLayer>) {
          const CMatrix u = expm_hermitian(eh_hamiltonian(l, g, state.s()));
          state.amps() = u * state.amps();
        } else {
          apply_1local(state, l.u, l.node);
        }
      },
      layer);
}

Statevector apply_circuit(const Circuit& c, const Graph& g, Statevector state) {
  if (state.n() != g.n()) throw DimensionError("apply_circuit: state and graph sizes differ");
  if (state.s() != c.s()) throw DimensionError("apply_circuit: state and circuit local dims differ");
  for (const auto& layer : c.layers()) apply_layer(layer, g, state);
  return state;
}

CMatrix circuit_unitary(const Circuit& c, const Graph& g) {
  const auto dim = checked_power(c.s(), g.n(), kMaxDenseDim);
  const int q = qubits_of(c.s());
  CMatrix out(dim, dim);
  for (std::int64_t col = 0; col < dim; ++col) {
    out.col(col) = apply_circuit(c, g, basis_state(g.n(), q, col)).amps();
  }
  return out;
}

double equivariance_residual(const Circuit& c, const Graph& g, const Permutation& p) {
  // Pt maps |v_0..v_{n-1}> to |v_p(0)..v_p(n-1)>, so old node u sits at
  // position p^-1(u); the relabeled adjacency P^T A P is g under p^-1.
  const CMatrix pt = permutation_operator(p, g.n(), c.s());
  const CMatrix lhs = circuit_unitary(c, g);
  const CMatrix rhs = pt.transpose() * circuit_unitary(c, permute_graph(g, p.inverse())) * pt;
  return max_abs_diff(lhs, rhs);
}

bool check_equivariance(const Circuit& c, const Graph& g, const Permutation& p, double tol) {
  return equivariance_residual(c, g, p) <= tol;
}

CommutativityReport commutativity_residuals(const CMatrix& u) {
  const int s = local_dim_of_pair_gate(u);
  CommutativityReport r;
  r.shared_source = operator_difference(3, s, {{&u, 0, 1}, {&u, 0, 2}}, {{&u, 0, 2}, {&u, 0, 1}});
  r.shared_target = operator_difference(3, s, {{&u, 1, 0}, {&u, 2, 0}}, {{&u, 2, 0}, {&u, 1, 0}});
  r.chained = operator_difference(3, s, {{&u, 0, 1}, {&u, 2, 0}}, {{&u, 2, 0}, {&u, 0, 1}});
  r.reversed = operator_difference(2, s, {{&u, 0, 1}, {&u, 1, 0}}, {{&u, 1, 0}, {&u, 0, 1}});
  // SWAP U SWAP is U with both register digits exchanged.
  for (int a = 0; a < s; ++a) {
    for (int b = 0; b < s; ++b) {
      for (int c = 0; c < s; ++c) {
        for (int d = 0; d < s; ++d) {
          const double diff = std::abs(u(b * s + a, d * s + c) - u(a * s + b, c * s + d));
          r.swap_symmetry = std::max(r.swap_symmetry, diff);
        }
      }
    }
  }
  return r;
}

bool check_commutativity(const CMatrix& u) {
  const int s = local_dim_of_pair_gate(u);
  return operator_difference(3, s, {{&u, 0, 1}, {&u, 0, 2}}, {{&u, 0, 2}, {&u, 0, 1}}) <= kCheckTol;
}

bool check_undirected_symmetry(const CMatrix& u) {
  return commutativity_residuals(u).swap_symmetry <= kCheckTol;
}

bool check_directed_conditions(const CMatrix& u) {
  const int s = local_dim_of_pair_gate(u);
  if (operator_difference(2, s, {{&u, 0, 1}, {&u, 1, 0}}, {{&u, 1, 0}, {&u, 0, 1}}) > kCheckTol) {
    return false;
  }
  if (operator_difference(3, s, {{&u, 1, 0}, {&u, 2, 0}}, {{&u, 2, 0}, {&u, 1, 0}}) > kCheckTol) {
    return false;
  }
  return operator_difference(3, s, {{&u, 0, 1}, {&u, 2, 0}}, {{&u, 2, 0}, {&u, 0, 1}}) <= kCheckTol;
}

EhLayer node_layer_to_eh(const CMatrix& v) {
  const auto s = v.rows();
  return EhLayer{logm_unitary(v), CMatrix::Zero(s * s, s * s)};
}

EhLayer diag_edge_to_eh(const RVector& d_phases) {
  const auto s2 = d_phases.size();
  const int s = static_cast<int>(std::lround(std::sqrt(static_cast<double>(s2))));
  if (s * s != s2) throw DimensionError("diag_edge_to_eh: phase count is not s^2");
  CMatrix h = CMatrix::Zero(s2, s2);
  for (Eigen::Index i = 0; i < s2; ++i) h(i, i) = principal_angle(d_phases(i));
  return EhLayer{CMatrix::Zero(s, s), h};
}

std::vector<EhLayer> edu_to_eh(const EduGate& g) {
  validate_edu(g);
  return {node_layer_to_eh(g.v), diag_edge_to_eh(g.d_phases), node_layer_to_eh(g.v.adjoint())};
}

Circuit to_eh_circuit(const Circuit& c) {
  Circuit out(c.s());
  for (const auto& layer : c.layers()) {
    std::visit(
        [&](const auto& l) {
          using T = std::decay_t<decltype(l)>;
          if constexpr (std::is_same_v<T, NodeLayer>) {
            out.add(node_layer_to_eh(l.v));
          } else if constexpr (std::is_same_v<T, EdgeLayer>) {
            for (auto& eh : edu_to_eh(l.gate)) out.add(std::move(eh));
          } else if constexpr (std::is_same_v<T, DiagEdgeLayer>) {
            out.add(diag_edge_to_eh(l.d_phases));
          } else if constexpr (std::is_same_v<T, EhLayer>) {
            out.add(l);
          } else {
            throw UnsupportedError("to_eh_circuit: single-node gates are not EQGC layers");
          }
        },
        layer);
  }
  return out;
}

std::tuple<NodeLayer, DiagEdgeLayer, NodeLayer> absorb_redundancy(const NodeLayer& u1,
                                                                  const EduGate& g,
                                                                  const NodeLayer& u2) {
  validate_edu(g);
  if (u1.v.rows() != g.s() || u2.v.rows() != g.s()) {
    throw DimensionError("absorb_redundancy: local dimensions differ");
  }
  return {NodeLayer{g.v * u1.v, std::nullopt}, DiagEdgeLayer{g.d_phases},
          NodeLayer{u2.v * g.v.adjoint(), std::nullopt}};
}

Circuit read_circuit(std::istream& in) {
  Circuit c(2);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string kind;
    if (!(ss >> kind) || kind[0] == '#') continue;
    auto bad = [&] {
      return ValidationError("read_circuit: malformed '" + kind + "' on line " +
                             std::to_string(lineno));
    };
    if (kind == "node") {
      double t1, t2, t3;
      if (!(ss >> t1 >> t2 >> t3)) throw bad();
      c.add(NodeLayer::from_euler(t1, t2, t3));
    } else if (kind == "edge") {
      double p00, p01, p11;
      if (!(ss >> p00 >> p01 >> p11)) throw bad();
      c.add(DiagEdgeLayer{symmetric_phases(p00, p01, p11)});
    } else if (kind == "czedge") {
      double alpha;
      if (!(ss >> alpha)) throw bad();
      c.add(DiagEdgeLayer{cz_phases(alpha)});
    } else if (kind == "hnode") {
      c.add(NodeLayer::from_unitary(gates::hadamard()));
    } else {
      throw ValidationError("read_circuit: unknown layer kind '" + kind + "' on line " +
                            std::to_string(lineno));
    }
  }
  return c;
}

void write_circuit(std::ostream& out, const Circuit& c) {
  if (c.s() != 2) throw UnsupportedError("write_circuit: only q = 1 circuits have a text form");
  const auto old_precision = out.precision(17);
  for (const auto& layer : c.layers()) {
    if (const auto* node = std::get_if<NodeLayer>(&layer)) {
      if (node->euler) {
        out << "node " << (*node->euler)[0] << ' ' << (*node->euler)[1] << ' ' << (*node->euler)[2]
            << '\n';
      } else if (max_abs_diff(node->v, gates::hadamard()) <= 1e-15) {
        out << "hnode\n";
      } else {
        throw UnsupportedError("write_circuit: node layer has no Euler angles");
      }
    } else if (const auto* diag = std::get_if<DiagEdgeLayer>(&layer)) {
      const RVector& p = diag->d_phases;
      if (p(1) != p(2)) throw UnsupportedError("write_circuit: asymmetric edge phases");
      if (p(0) == 0.0 && p(1) == 0.0) {
        out << "czedge " << 0.0 - p(3) << '\n';
      } else {
        out << "edge " << p(0) << ' ' << p(1) << ' ' << p(3) << '\n';
      }
    } else {
      throw UnsupportedError("write_circuit: layer kind has no text form");
    }
  }
  out.precision(old_precision);
}

}  // namespace eqgc
