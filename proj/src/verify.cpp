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

#include "eqgc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>

#include "eqgc/complexla.hpp"
#include "eqgc/eqspace.hpp"
#include "eqgc/gates.hpp"
#include "eqgc/training.hpp"
#include "eqgc/zxparity.hpp"

namespace eqgc {

namespace {

std::string fmt(double x) {
  std::ostringstream ss;
  ss.precision(3);
  ss << x;
  return ss.str();
}

ClaimResult claim(std::string suite, std::string name, double tol) {
  return {std::move(suite), std::move(name), tol, true, {}};
}

void fail(ClaimResult& r, const std::string& witness) {
  if (r.pass) {
    r.pass = false;
    r.witness = witness;
  }
}

std::string describe(const Graph& g) {
  std::ostringstream ss;
  ss << "n=" << g.n() << " edges={";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    ss << (i ? " " : "") << g.edges()[i].first << '-' << g.edges()[i].second;
  }
  ss << '}';
  return ss.str();
}

std::string describe(const Permutation& p) {
  std::ostringstream ss;
  ss << '[';
  for (int i = 0; i < p.size(); ++i) ss << (i ? " " : "") << p(i);
  ss << ']';
  return ss.str();
}

std::string describe(const RVector& v) {
  std::ostringstream ss;
  ss.precision(4);
  ss << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i) ss << (i ? ", " : "") << v(i);
  ss << ')';
  return ss.str();
}

double uniform_angle(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(-kPi, kPi)(rng);
}

}  // namespace

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

std::vector<Graph> all_graphs(int n) {
  std::vector<Edge> slots;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if ((mask >> i) & 1) edges.push_back(slots[i]);
    }
    out.emplace_back(n, edges);
  }
  return out;
}

Permutation random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  std::shuffle(image.begin(), image.end(), rng);
  return Permutation(image);
}

EduGate random_edu(std::mt19937_64& rng, int s) {
  EduGate g;
  g.v = random_unitary(rng, s);
  g.d_phases = RVector(s * s);
  for (int a = 0; a < s; ++a) {
    for (int b = a; b < s; ++b) {
      const double phi = uniform_angle(rng);
      g.d_phases(a * s + b) = phi;
      g.d_phases(b * s + a) = phi;
    }
  }
  return g;
}

Circuit random_edu_circuit(std::mt19937_64& rng, int max_pairs) {
  const int pairs = std::uniform_int_distribution<int>(1, max_pairs)(rng);
  Circuit c(2);
  for (int i = 0; i < pairs; ++i) {
    c.add(NodeLayer::from_unitary(random_unitary(rng, 2)));
    c.add(EdgeLayer{random_edu(rng, 2)});
  }
  return c;
}

MpnnSpec random_mpnn_spec(std::mt19937_64& rng, int k, int w, int b) {
  MpnnSpec spec{k, w, b, {}};
  const std::uint32_t entries = std::uint32_t{1} << (2 * w * b);
  std::uniform_int_distribution<std::uint32_t> value(0, (std::uint32_t{1} << (w * b)) - 1);
  for (int layer = 0; layer < k; ++layer) {
    UpdateTable t(entries);
    for (auto& e : t) e = value(rng);
    spec.updates.push_back(std::move(t));
  }
  return spec;
}

std::vector<ClaimResult> verify_equivariance(const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed ^ 0x65717569ULL);
  auto small = claim("equivariance", "EDU-QGC commutes with every node permutation, n<=4", opt.tol);
  auto five = claim("equivariance", "EDU-QGC commutes with 10 random permutations, n=5", opt.tol);
  auto iso = claim("equivariance", "isomorphic presentations give equal outcome distributions", opt.tol);
  std::uniform_int_distribution<int> size(1, 4);
  for (int i = 0; i < opt.random_circuits; ++i) {
    const Circuit c = random_edu_circuit(rng, 3);
    const Graph g = random_graph(rng, size(rng));
    for (const auto& p : all_permutations(g.n())) {
      const double r = equivariance_residual(c, g, p);
      if (r > opt.tol) fail(small, describe(g) + " perm " + describe(p) + " residual " + fmt(r));
    }
    const Graph g5 = random_graph(rng, 5);
    for (int j = 0; j < 10; ++j) {
      const Permutation p = random_permutation(rng, 5);
      const double r = equivariance_residual(c, g5, p);
      if (r > opt.tol) fail(five, describe(g5) + " perm " + describe(p) + " residual " + fmt(r));

      // Relabelled graph: outcome x on g matches outcome x relabelled on pg.
      const Graph pg = permute_graph(g5, p);
      const Statevector start(5, 1);
      const auto d = apply_circuit(c, g5, start).amps().cwiseAbs2().eval();
      const auto pd = apply_circuit(c, pg, start).amps().cwiseAbs2().eval();
      for (std::int64_t x = 0; x < 32; ++x) {
        std::int64_t y = 0;
        for (int v = 0; v < 5; ++v) {
          if ((x >> (4 - v)) & 1) y |= std::int64_t{1} << (4 - p(v));
        }
        if (std::abs(d(x) - pd(y)) > opt.tol) {
          fail(iso, describe(g5) + " perm " + describe(p) + " outcome " + bitstring(x, 5));
        }
      }
    }
  }
  auto negative = claim("equivariance", "single-node gate is rejected", opt.tol);
  {
    Circuit c(2);
    c.add(SingleNodeGate{gates::hadamard(), 0});
    const Graph g = path_graph(3);
    const Permutation p({1, 0, 2});
    if (check_equivariance(c, g, p, opt.tol)) fail(negative, "H on node 0 passed for " + describe(p));
  }
  return {small, five, iso, negative};
}

std::vector<ClaimResult> verify_commutativity(const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed ^ 0x636f6d6dULL);
  auto random = claim("commutativity", "random undirected EDUs commute on shared nodes (s=2,4)", 1e-9);
  auto symmetric = claim("symmetry", "random undirected EDUs are swap-symmetric (s=2,4)", 1e-9);
  auto directed = claim("commutativity", "random EDUs satisfy the directed conditions (s=2)", 1e-9);
  for (int i = 0; i < opt.random_circuits; ++i) {
    for (int s : {2, 4}) {
      EduGate g = random_edu(rng, s);
      const CMatrix u = edu_matrix(g);
      const auto rep = commutativity_residuals(u);
      if (!check_commutativity(u)) fail(random, "s=" + std::to_string(s) + " residual " + fmt(rep.shared_source));
      if (!check_undirected_symmetry(u)) {
        fail(symmetric, "s=" + std::to_string(s) + " residual " + fmt(rep.swap_symmetry));
      }
    }
    EduGate g = random_edu(rng, 2);
    for (int j = 0; j < 4; ++j) g.d_phases(j) = uniform_angle(rng);
    g.undirected = false;
    if (!check_directed_conditions(edu_matrix(g))) fail(directed, "phases " + describe(g.d_phases));
  }

  auto cz = claim("commutativity", "CZ(alpha) commutes and is swap-symmetric", 1e-9);
  for (double alpha : {0.3, 1.0, kPi}) {
    const CMatrix u = gates::cz(alpha);
    if (!check_commutativity(u) || !check_undirected_symmetry(u)) fail(cz, "alpha=" + fmt(alpha));
  }

  auto addition = claim("commutativity", "addition EDU commutes and is swap-symmetric (b=1,2)", 1e-9);
  for (int b : {1, 2}) {
    const CMatrix u = edu_matrix(addition_edu(b));
    const auto rep = commutativity_residuals(u);
    if (!check_commutativity(u) || !check_undirected_symmetry(u)) {
      fail(addition, "b=" + std::to_string(b) + " residuals " + fmt(rep.shared_source) + ", " +
                         fmt(rep.swap_symmetry));
    }
  }

  auto fault = claim("symmetry", "gates flagged undirected are swap-symmetric", 1e-9);
  if (opt.inject_fault) {
    // Bypasses edu_matrix, which would refuse this gate outright.
    EduGate g;
    g.v = random_unitary(rng, 2);
    g.d_phases = RVector(4);
    g.d_phases << 0.0, 0.4, -0.9, 1.3;
    g.undirected = true;
    const CMatrix vv = kron(g.v, g.v);
    CVector d(4);
    for (int j = 0; j < 4; ++j) d(j) = std::polar(1.0, g.d_phases(j));
    const CMatrix u = vv.adjoint() * d.asDiagonal() * vv;
    if (!check_undirected_symmetry(u)) {
      fail(fault, "witness gate: EDU with D phases " + describe(g.d_phases) + " swap residual " +
                      fmt(commutativity_residuals(u).swap_symmetry));
    }
  }
  return {random, symmetric, directed, cz, addition, fault};
}

std::vector<ClaimResult> verify_eh_conversion(const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed ^ 0x65686571ULL);
  auto conv = claim("eh-conversion", "EDU-QGC and converted EH-QGC unitaries agree", 1e-8);
  auto eq = claim("eh-conversion", "converted EH-QGC is equivariant", opt.tol);
  std::uniform_int_distribution<int> size(1, 4);
  for (int i = 0; i < opt.random_circuits; ++i) {
    const Circuit c = random_edu_circuit(rng, 3);
    const Graph g = random_graph(rng, size(rng));
    const Circuit eh = to_eh_circuit(c);
    const double r = max_abs_diff(circuit_unitary(c, g), circuit_unitary(eh, g));
    if (r > 1e-8) fail(conv, describe(g) + " residual " + fmt(r));
    const Permutation p = random_permutation(rng, g.n());
    const double e = equivariance_residual(eh, g, p);
    if (e > opt.tol) fail(eq, describe(g) + " perm " + describe(p) + " residual " + fmt(e));
  }
  return {conv, eq};
}

std::vector<ClaimResult> verify_cycles(const VerifyOptions&) {
  auto c = claim("cycles", "parity observables match statevector support, n=3..10", 1e-10);
  for (int n = 3; n <= 10; ++n) {
    const auto r = crosscheck_cycle(n);
    if (!r.ok) fail(c, "n=" + std::to_string(n) + ": " + r.message);
  }
  return {c};
}

std::vector<ClaimResult> verify_dimensions(const VerifyOptions&) {
  auto full = claim("dimensions", "full equivariant dimension equals indicator rank, n=1..5", 0.0);
  for (int n = 1; n <= 5; ++n) {
    const auto f = full_dimension(n);
    const auto r = rank_oracle(n);
    if (f != r) {
      fail(full, "n=" + std::to_string(n) + ": formula " + std::to_string(f) + ", rank " + std::to_string(r));
    }
  }
  auto diag = claim("dimensions", "diagonal equivariant dimension is n+1 at s=2, n=1..10", 0.0);
  for (int n = 1; n <= 10; ++n) {
    if (diagonal_dimension(n, 2) != n + 1) fail(diag, "n=" + std::to_string(n));
  }
  return {full, diag};
}

std::vector<ClaimResult> verify_mpnn(const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed ^ 0x6d706e6eULL);
  auto b1 = claim("mpnn", "compiled circuit matches the MPNN on all graphs n<=3, b=1, all inputs", 1e-10);
  auto b2 = claim("mpnn", "compiled circuit matches the MPNN on all graphs n<=3, b=2, random inputs", 1e-10);
  for (int b : {1, 2}) {
    auto& result = b == 1 ? b1 : b2;
    const MpnnSpec spec = random_mpnn_spec(rng, 1, 1, b);
    std::uniform_int_distribution<int> value(0, (1 << b) - 1);
    for (int n = 1; n <= 3; ++n) {
      for (const Graph& g : all_graphs(n)) {
        std::vector<std::vector<Registers>> inits;
        if (b == 1) {
          for (int mask = 0; mask < (1 << n); ++mask) {
            std::vector<Registers> init(n);
            for (int v = 0; v < n; ++v) init[v] = {(mask >> v) & 1};
            inits.push_back(init);
          }
        } else {
          for (int t = 0; t < opt.mpnn_random_inits; ++t) {
            std::vector<Registers> init(n);
            for (int v = 0; v < n; ++v) init[v] = {value(rng)};
            inits.push_back(init);
          }
        }
        for (const auto& init : inits) {
          const auto rep = verify_simulation(spec, g, init);
          if (!rep.ok) fail(result, describe(g) + ": " + rep.message);
        }
      }
    }
  }
  return {b1, b2};
}

double gradient_fd_error(std::mt19937_64& rng, int depth, double step, double floor) {
  const CyclesDataset data = cycles_dataset();
  ModelParams params = init_params(depth, rng());
  std::uniform_real_distribution<double> readout(-3.0, 3.0);
  params.slope = readout(rng);
  params.bias = readout(rng);
  const auto grad = loss_gradient(params, data.train);
  std::vector<double> flat = params.flatten();
  double worst = 0.0;
  for (std::size_t i = 0; i < flat.size(); ++i) {
    auto probe = flat;
    probe[i] = flat[i] + step;
    const double up = expected_loss(ModelParams::unflatten(probe), data.train);
    probe[i] = flat[i] - step;
    const double down = expected_loss(ModelParams::unflatten(probe), data.train);
    const double fd = (up - down) / (2 * step);
    worst = std::max(worst, std::abs(grad[i] - fd) / std::max(std::abs(fd), floor));
  }
  return worst;
}

std::vector<ClaimResult> verify_gradients(const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed ^ 0x67726164ULL);
  auto g = claim("gradient", "adjoint gradient matches central differences, depths 1 and 4", 1e-3);
  for (int depth : {1, 4}) {
    for (int i = 0; i < opt.random_circuits; ++i) {
      const double err = gradient_fd_error(rng, depth);
      if (err > 1e-3) fail(g, "depth " + std::to_string(depth) + " point " + std::to_string(i) + " rel. error " + fmt(err));
    }
  }
  return {g};
}

std::vector<ClaimResult> verify_all(const VerifyOptions& opt) {
  std::vector<ClaimResult> out;
  for (auto suite : {verify_equivariance, verify_commutativity, verify_eh_conversion, verify_cycles,
                     verify_dimensions, verify_mpnn, verify_gradients}) {
    auto part = suite(opt);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

void print_report(std::ostream& out, const std::vector<ClaimResult>& results) {
  for (const auto& r : results) {
    out << (r.pass ? "PASS" : "FAIL") << "  [" << r.suite << "] " << r.claim << "  (tol " << fmt(r.tolerance)
        << ")";
    if (!r.pass) out << "  witness: " << r.witness;
    out << '\n';
  }
}

bool all_passed(const std::vector<ClaimResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
}

}  // namespace eqgc
