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

#include "eqgc/complexla.hpp"
#include "eqgc/errors.hpp"
#include "eqgc/gates.hpp"
#include "eqgc/layers.hpp"
#include "eqgc/mpnnsim.hpp"
#include "eqgc/verify.hpp"

using namespace eqgc;

namespace {

MpnnSpec copy_aggregate(int b) {
  // update(h, a) = a
  return MpnnSpec{1, 1, b, {make_update_table(1, b, [](const Registers&, const Registers& a) { return a; })}};
}

// Column of |x1, acc1> (x) |x2, acc2> in the node-pair basis (value register first).
std::int64_t pair_index(int x1, int acc1, int x2, int acc2, int b) {
  const int n = 1 << b;
  return static_cast<std::int64_t>(x1 * n + acc1) * n * n + (x2 * n + acc2);
}

}  // namespace

TEST(Mpnnsim, PackRoundTrip) {
  const Registers r{3, 0, 2};
  EXPECT_EQ(unpack_registers(pack_registers(r, 2), 3, 2), r);
  EXPECT_EQ(pack_registers({1, 2}, 2), 0b0110u);
}

TEST(Mpnnsim, SpecValidation) {
  MpnnSpec spec{1, 1, 1, {UpdateTable(3, 0)}};
  EXPECT_THROW(spec.validate(), ValidationError);
  spec.updates = {UpdateTable(4, 7)};
  EXPECT_THROW(spec.validate(), ValidationError);
}

TEST(Mpnnsim, ClassicalForwardHandExamples) {
  const MpnnSpec spec = copy_aggregate(2);
  const auto c3 = classical_forward(spec, cycle_graph(3), {{1}, {1}, {1}});
  for (const auto& r : c3) EXPECT_EQ(r, Registers{2});
  const auto wrap = classical_forward(spec, path_graph(3), {{3}, {0}, {2}});
  EXPECT_EQ(wrap[1], Registers{1});  // 3 + 2 mod 4
  const MpnnSpec id{1, 1, 2, {make_update_table(1, 2, [](const Registers& h, const Registers&) { return h; })}};
  EXPECT_EQ(classical_forward(id, Graph(1), {{3}})[0], Registers{3});
}

TEST(Mpnnsim, IncrementDiagonalization) {
  for (int b = 1; b <= 4; ++b) {
    const auto dz = increment_diagonalization(b);
    EXPECT_LT(max_abs_diff(dz.v.adjoint() * dz.d * dz.v, increment_matrix(b)), 1e-10);
    EXPECT_TRUE(is_unitary(dz.v, 1e-12));
    const int n = 1 << b;
    for (int j = 0; j < n; ++j) {
      EXPECT_NEAR(std::abs(dz.d(j, j)), 1.0, 1e-14);
      EXPECT_NEAR(std::abs(std::pow(dz.d(j, j), n) - Complex(1.0)), 0.0, 1e-12);
    }
  }
  EXPECT_LT(max_abs_diff(increment_matrix(1), gates::pauli_x()), 0.0 + 1e-15);
}

TEST(Mpnnsim, AdditionEduIsTheStatedPermutation) {
  for (int b = 1; b <= 2; ++b) {
    const int n = 1 << b;
    const CMatrix u = edu_matrix(addition_edu(b));
    // 0/1 permutation matrix.
    EXPECT_LT((u.cwiseAbs() - u.cwiseAbs().array().round().matrix()).cwiseAbs().maxCoeff(), 1e-10);
    for (int x1 = 0; x1 < n; ++x1)
      for (int a1 = 0; a1 < n; ++a1)
        for (int x2 = 0; x2 < n; ++x2)
          for (int a2 = 0; a2 < n; ++a2) {
            const auto from = pair_index(x1, a1, x2, a2, b);
            const auto to = pair_index(x1, (a1 + x2) % n, x2, (a2 + x1) % n, b);
            ASSERT_NEAR(std::abs(u(to, from) - Complex(1.0)), 0.0, 1e-10);
          }
    EXPECT_TRUE(check_commutativity(u));
    EXPECT_TRUE(check_undirected_symmetry(u));
  }
  const CMatrix u2 = edu_matrix(addition_edu(2));
  EXPECT_NEAR(std::abs(u2(pair_index(1, 2, 2, 1, 2), pair_index(1, 0, 2, 0, 2))), 1.0, 1e-10);
  EXPECT_NEAR(std::abs(u2(pair_index(3, 0, 1, 3, 2), pair_index(3, 3, 1, 0, 2))), 1.0, 1e-10);
}

TEST(Mpnnsim, UpdateUnitaryIsPermutation) {
  std::mt19937_64 rng(41);
  const MpnnSpec spec = random_mpnn_spec(rng, 1, 1, 2);
  const RegisterLayout layout(1, 1, 2);
  const CMatrix u = update_unitary(layout, spec.updates[0], 1);
  EXPECT_TRUE(is_unitary(u, 1e-14));
  for (Eigen::Index c = 0; c < u.cols(); ++c) {
    EXPECT_EQ(u.col(c).cwiseAbs().sum(), 1.0);
  }
}

TEST(Mpnnsim, LayoutOffsets) {
  const RegisterLayout l(2, 1, 3);
  EXPECT_EQ(l.qubits_per_node(), 15);
  EXPECT_EQ(l.h_offset(0, 0), 0);
  EXPECT_EQ(l.a_offset(1, 0), 3);
  EXPECT_EQ(l.h_offset(1, 0), 6);
  EXPECT_EQ(l.h_offset(2, 0), 12);
  const auto v = l.write(0, l.h_offset(1, 0), 5);
  EXPECT_EQ(l.read(v, l.h_offset(1, 0)), 5);
  EXPECT_EQ(l.read(v, l.h_offset(0, 0)), 0);
}

TEST(Mpnnsim, CompileBudget) {
  EXPECT_NO_THROW(compile_mpnn(copy_aggregate(2), 2));
  EXPECT_THROW(compile_mpnn(copy_aggregate(2), 4), SizeLimitError);
  const auto c = compile_mpnn(copy_aggregate(1), 3);
  EXPECT_EQ(c.circuit.layers().size(), 2u);
  EXPECT_EQ(c.circuit.s(), 8);
}

TEST(Mpnnsim, PathGraphHandExample) {
  const auto rep = verify_simulation(copy_aggregate(2), path_graph(2), {{1}, {2}});
  ASSERT_TRUE(rep.ok) << rep.message;
  EXPECT_EQ(rep.quantum, (std::vector<Registers>{{2}, {1}}));
  EXPECT_NEAR(rep.min_peak_probability, 1.0, 1e-10);
}

TEST(Mpnnsim, EmptyGraphUsesZeroAggregates) {
  std::mt19937_64 rng(42);
  const MpnnSpec spec = random_mpnn_spec(rng, 1, 1, 2);
  const auto rep = verify_simulation(spec, Graph(2), {{3}, {1}});
  ASSERT_TRUE(rep.ok) << rep.message;
  EXPECT_EQ(rep.quantum[0], unpack_registers(spec.updates[0][(3u << 2) | 0u], 1, 2));
}

TEST(Mpnnsim, ExhaustiveSmallGraphs) {
  std::mt19937_64 rng(43);
  const MpnnSpec spec = random_mpnn_spec(rng, 1, 1, 1);
  for (int n = 1; n <= 3; ++n)
    for (const Graph& g : all_graphs(n))
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<Registers> init(n);
        for (int v = 0; v < n; ++v) init[v] = {(mask >> v) & 1};
        const auto rep = verify_simulation(spec, g, init);
        EXPECT_TRUE(rep.ok) << rep.message;
      }
}

TEST(Mpnnsim, TwoLayerCompilation) {
  // k = 2 at b = 1 on a 2-node path: 5 qubits per node.
  std::mt19937_64 rng(44);
  const MpnnSpec spec = random_mpnn_spec(rng, 2, 1, 1);
  for (int mask = 0; mask < 4; ++mask) {
    const auto rep = verify_simulation(spec, path_graph(2), {{mask & 1}, {mask >> 1}});
    EXPECT_TRUE(rep.ok) << rep.message;
  }
}

TEST(Mpnnsim, UniquenessProbability) {
  EXPECT_DOUBLE_EQ(uniqueness_probability(2, 2), 0.75);
  EXPECT_DOUBLE_EQ(uniqueness_probability(2, 4), 15.0 / 16);
  EXPECT_DOUBLE_EQ(uniqueness_probability(1, 7), 1.0);
  EXPECT_DOUBLE_EQ(uniqueness_probability(5, 2), 0.0);
  for (int n = 1; n <= 16; ++n)
    for (int b = 1; b <= 10; ++b) {
      EXPECT_GE(uniqueness_probability(n, b), 1.0 - std::ldexp(1.0, -b) * n * n - 1e-15);
    }
  EXPECT_EQ(uniqueness_bits(2, 0.25), 4);
  EXPECT_GE(uniqueness_probability(8, uniqueness_bits(8, 0.01)), 0.99);
}
