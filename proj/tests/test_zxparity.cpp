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

#include <algorithm>
#include <set>

#include "eqgc/complexla.hpp"
#include "eqgc/graphs.hpp"
#include "eqgc/simulator.hpp"
#include "eqgc/zxparity.hpp"
#include "oracles.hpp"

using namespace eqgc;

namespace {

bool observable(const std::string& s) { return reduce_cyclic(CyclicBitstring::from_string(s)).observable; }

std::string rotate(const std::string& s, int r) { return s.substr(r) + s.substr(0, r); }

}  // namespace

TEST(Zxparity, WorkedExamples) {
  EXPECT_TRUE(observable("111"));
  EXPECT_TRUE(observable("000101"));
  EXPECT_FALSE(observable("11"));
  EXPECT_TRUE(observable("00"));
  EXPECT_FALSE(observable("0"));
  EXPECT_FALSE(observable("01"));
  EXPECT_FALSE(observable("10"));
  EXPECT_TRUE(observable("1111"));      // c = 4
  EXPECT_FALSE(observable("111111"));   // c = 6
  EXPECT_TRUE(observable("1"));         // c = 1
}

TEST(Zxparity, ProbabilityByParity) {
  EXPECT_DOUBLE_EQ(reduce_cyclic(CyclicBitstring::from_string("001")).probability, 0.25);
  EXPECT_DOUBLE_EQ(reduce_cyclic(CyclicBitstring::from_string("000000")).probability, 1.0 / 16);
  EXPECT_DOUBLE_EQ(reduce_cyclic(CyclicBitstring::from_string("011")).probability, 0.0);
  EXPECT_DOUBLE_EQ(observable_probability(7), 1.0 / 64);
}

TEST(Zxparity, ThreeCycleSet) {
  const auto set = observable_set(3);
  const std::vector<std::int64_t> want{0b001, 0b010, 0b100, 0b111};
  EXPECT_EQ(set, want);
}

TEST(Zxparity, SixCycleSetByOrbit) {
  std::set<std::string> want{"000000"};
  for (int r = 0; r < 6; ++r) {
    want.insert(rotate("000101", r));
    want.insert(rotate("001111", r));
    want.insert(rotate("101101", r));
  }
  ASSERT_EQ(want.size(), 16u);
  std::set<std::string> got;
  for (auto x : observable_set(6)) got.insert(bitstring(x, 6));
  EXPECT_EQ(got, want);
}

TEST(Zxparity, ReductionIsIndependentOfZeroChoice) {
  for (int n = 1; n <= 12; ++n) {
    for (std::int64_t x = 0; x < (std::int64_t{1} << n); ++x) {
      const auto b = CyclicBitstring::from_string(bitstring(x, n));
      ASSERT_EQ(reduce_cyclic(b, ZeroChoice::kLeftmost).observable,
                reduce_cyclic(b, ZeroChoice::kRightmost).observable)
          << b.to_string();
    }
  }
}

TEST(Zxparity, RotationInvariance) {
  for (int n = 3; n <= 9; ++n) {
    for (std::int64_t x = 0; x < (std::int64_t{1} << n); ++x) {
      const std::string s = bitstring(x, n);
      for (int r = 1; r < n; ++r) ASSERT_EQ(observable(s), observable(rotate(s, r))) << s;
    }
  }
}

TEST(Zxparity, CardinalityLaw) {
  for (int n = 1; n <= 16; ++n) {
    const std::size_t want = std::size_t{1} << (n % 2 ? n - 1 : n - 2);
    EXPECT_EQ(observable_set(n).size(), want) << n;
  }
}

TEST(Zxparity, MatchesIndependentIqpOracle) {
  for (int n = 3; n <= 10; ++n) {
    const auto probs = oracle::iqp_distribution(cycle_graph(n), kPi);
    std::vector<std::int64_t> support;
    for (std::size_t x = 0; x < probs.size(); ++x) {
      if (probs[x] > 1e-10) {
        support.push_back(static_cast<std::int64_t>(x));
        EXPECT_NEAR(probs[x], observable_probability(n), 1e-10);
        EXPECT_EQ(popcount(static_cast<std::int64_t>(x)) % 2, n % 2);
      }
    }
    EXPECT_EQ(support, observable_set(n)) << "n=" << n;
  }
}

TEST(Zxparity, LibraryCrosscheck) {
  for (int n = 3; n <= 10; ++n) {
    const auto r = crosscheck_cycle(n);
    EXPECT_TRUE(r.ok) << r.message;
  }
}

TEST(Zxparity, RejectsBadInput) {
  EXPECT_ANY_THROW(CyclicBitstring::from_string("012"));
  EXPECT_ANY_THROW(CyclicBitstring::from_string(""));
  EXPECT_ANY_THROW(observable_set(21));
  EXPECT_ANY_THROW(crosscheck_cycle(11));
}
