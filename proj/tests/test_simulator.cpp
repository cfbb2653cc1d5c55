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
#include "eqgc/simulator.hpp"
#include "oracles.hpp"

using namespace eqgc;

namespace {

Statevector random_state(std::mt19937_64& rng, int n, int q) {
  const std::int64_t dim = std::int64_t{1} << (n * q);
  std::normal_distribution<double> g;
  CVector v(dim);
  for (auto& x : v) x = Complex(g(rng), g(rng));
  return Statevector(n, q, v.normalized());
}

}  // namespace

TEST(Simulator, StartsInAllZero) {
  const Statevector s(3, 1);
  EXPECT_EQ(s.dim(), 8);
  EXPECT_EQ(s.amps()(0), Complex(1.0));
  EXPECT_DOUBLE_EQ(s.norm_squared(), 1.0);
}

TEST(Simulator, ConstructorValidates) {
  EXPECT_THROW(Statevector(2, 1, CVector::Ones(3)), DimensionError);
  EXPECT_THROW(Statevector(1, 1, CVector::Ones(2)), ValidationError);
  CVector nan = CVector::Zero(2);
  nan(0) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(Statevector(1, 1, nan), ValidationError);
  EXPECT_THROW(Statevector(30, 1), SizeLimitError);
}

TEST(Simulator, OneLocalMatchesIndexOracle) {
  std::mt19937_64 rng(5);
  for (int q : {1, 2}) {
    const int n = q == 1 ? 4 : 3;
    for (int node = 0; node < n; ++node) {
      const CMatrix u = random_unitary(rng, 1 << q);
      Statevector s = random_state(rng, n, q);
      const CVector want = oracle::one_local(u, node, n) * s.amps();
      apply_1local(s, u, node);
      EXPECT_LT(max_abs_diff(s.amps(), want), 1e-13);
      EXPECT_LT(max_abs_diff(embed_1local(u, node, n, 1 << q), oracle::one_local(u, node, n)), 1e-15);
    }
  }
}

TEST(Simulator, TwoLocalMatchesIndexOracleInBothOrders) {
  std::mt19937_64 rng(6);
  const int n = 4;
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 1}, {1, 0}, {0, 3}, {3, 1}, {2, 0}}) {
    const CMatrix u = random_unitary(rng, 4);
    Statevector s = random_state(rng, n, 1);
    const CVector want = oracle::two_local(u, a, b, n) * s.amps();
    apply_2local(s, u, a, b);
    EXPECT_LT(max_abs_diff(s.amps(), want), 1e-13) << a << "," << b;
    EXPECT_LT(max_abs_diff(embed_2local(u, a, b, n, 2), oracle::two_local(u, a, b, n)), 1e-14);
  }
  Statevector s(3, 1);
  EXPECT_THROW(apply_2local(s, CMatrix::Identity(4, 4), 1, 1), ValidationError);
}

TEST(Simulator, DiagonalTwoLocalMatchesDense) {
  std::mt19937_64 rng(8);
  CVector phases(4);
  for (int i = 0; i < 4; ++i) phases(i) = std::polar(1.0, 0.3 * (i + 1));
  Statevector s = random_state(rng, 3, 1);
  const CVector want = oracle::two_local(CMatrix(phases.asDiagonal()), 2, 0, 3) * s.amps();
  apply_diagonal_2local(s, phases, 2, 0);
  EXPECT_LT(max_abs_diff(s.amps(), want), 1e-14);
}

TEST(Simulator, PermutationOperatorMatchesOracle) {
  for (const auto& image : std::vector<std::vector<int>>{{1, 2, 0}, {2, 1, 0}, {0, 2, 1}}) {
    const Permutation p(image);
    EXPECT_EQ(max_abs_diff(permutation_operator(p, 3, 2), oracle::permutation(image, 2)), 0.0);
    EXPECT_EQ(max_abs_diff(permutation_operator(p, 3, 4), oracle::permutation(image, 4)), 0.0);
  }
}

TEST(Simulator, ApplyPermutationAgreesWithOperator) {
  std::mt19937_64 rng(9);
  const Statevector s = random_state(rng, 4, 1);
  const Permutation p({3, 0, 2, 1});
  const CVector want = permutation_operator(p, 4, 2) * s.amps();
  EXPECT_LT(max_abs_diff(apply_permutation(s, p).amps(), want), 1e-15);
}

TEST(Simulator, BasisAndProductStates) {
  const Statevector b = basis_state(3, 1, 5);
  EXPECT_EQ(b.amps()(5), Complex(1.0));
  CVector plus(2);
  plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  const Statevector u = uniform_product_state(plus, 3);
  EXPECT_NEAR(u.amps().cwiseAbs().minCoeff(), 1 / std::sqrt(8.0), 1e-15);
  CVector one = CVector::Zero(2);
  one(1) = 1;
  const std::vector<CVector> parts{one, plus};
  const Statevector p = product_state(parts);
  EXPECT_NEAR(std::abs(p.amps()(2)), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(std::abs(p.amps()(0)), 0.0, 1e-15);
}

TEST(Simulator, Distributions) {
  CVector amps = CVector::Zero(8);
  amps(3) = std::sqrt(0.25);
  amps(7) = std::sqrt(0.75);
  const Statevector s(3, 1, amps);
  const auto d = outcome_distribution(s);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_NEAR(d.at(7), 0.75, 1e-15);
  const auto k = ones_count_distribution(s);
  EXPECT_NEAR(k[2], 0.25, 1e-15);
  EXPECT_NEAR(k[3], 0.75, 1e-15);
  EXPECT_THROW(ones_count_distribution(Statevector(2, 2)), UnsupportedError);
  EXPECT_EQ(bitstring(6, 4), "0110");
  EXPECT_EQ(popcount(0b1011), 3);
}

TEST(Simulator, CheckedPower) {
  EXPECT_EQ(checked_power(4, 3, 1000), 64);
  EXPECT_THROW(checked_power(2, 40, 1 << 24), SizeLimitError);
}
