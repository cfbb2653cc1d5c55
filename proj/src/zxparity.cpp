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

#include "eqgc/zxparity.hpp"

#include <cmath>
#include <sstream>

#include "eqgc/errors.hpp"
#include "eqgc/gates.hpp"
#include "eqgc/layers.hpp"
#include "eqgc/simulator.hpp"

namespace eqgc {

namespace detail {

std::vector<int> reduce_at(const std::vector<int>& bits, std::size_t zero) {
  const std::size_t len = bits.size();
  const int left = bits[(zero + len - 1) % len];
  const int right = bits[(zero + 1) % len];
  std::vector<int> out{left ^ right};
  // At length 3 the zero and both neighbours cover the whole string.
  for (std::size_t k = 2; k + 1 < len; ++k) out.push_back(bits[(zero + k) % len]);
  return out;
}

bool terminal_observable(const std::vector<int>& bits) {
  int ones = 0;
  for (int b : bits) ones += b;
  if (ones < static_cast<int>(bits.size())) {
    // Only |0>, |00> and the rotations of |01> can remain.
    return bits.size() == 2 && ones == 0;
  }
  return ones % 4 != 2;
}

}  // namespace detail

CyclicBitstring CyclicBitstring::from_string(const std::string& s) {
  CyclicBitstring out;
  for (char c : s) {
    if (c != '0' && c != '1') throw ValidationError("CyclicBitstring: expected only '0'/'1'");
    out.bits.push_back(c - '0');
  }
  if (out.bits.empty()) throw ValidationError("CyclicBitstring: empty string");
  return out;
}

std::string CyclicBitstring::to_string() const {
  std::string s;
  for (int b : bits) s.push_back(static_cast<char>('0' + b));
  return s;
}

double observable_probability(int n) {
  return n % 2 == 1 ? std::ldexp(1.0, -(n - 1)) : std::ldexp(1.0, -(n - 2));
}

Observability reduce_cyclic(const CyclicBitstring& b, ZeroChoice choice) {
  if (b.bits.empty()) throw ValidationError("reduce_cyclic: empty bitstring");
  auto pick = [choice](const std::vector<int>& bits) {
    if (choice == ZeroChoice::kLeftmost) {
      for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == 0) return i;
      }
    } else {
      for (std::size_t i = bits.size(); i-- > 0;) {
        if (bits[i] == 0) return i;
      }
    }
    return std::size_t{0};
  };
  Observability out;
  out.observable = reduces_to_observable(b.bits, pick);
  out.probability = out.observable ? observable_probability(static_cast<int>(b.bits.size())) : 0.0;
  return out;
}

std::vector<std::int64_t> observable_set(int n) {
  if (n < 1 || n > 20) throw ValidationError("observable_set: need 1 <= n <= 20");
  std::vector<std::int64_t> out;
  CyclicBitstring b;
  b.bits.resize(n);
  for (std::int64_t idx = 0; idx < (std::int64_t{1} << n); ++idx) {
    for (int i = 0; i < n; ++i) b.bits[i] = static_cast<int>((idx >> (n - 1 - i)) & 1);
    if (reduce_cyclic(b).observable) out.push_back(idx);
  }
  return out;
}

CrosscheckResult crosscheck_cycle(int n) {
  if (n < 3 || n > 10) throw ValidationError("crosscheck_cycle: need 3 <= n <= 10");
  Circuit c(2);
  c.add(DiagEdgeLayer{cz_phases(kPi)});
  c.add(NodeLayer::from_unitary(gates::hadamard()));
  CVector plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const auto dist =
      outcome_distribution(apply_circuit(c, cycle_graph(n), uniform_product_state(plus, n)));
  const auto expected = observable_set(n);
  const double p = observable_probability(n);

  auto fail = [&](std::int64_t idx, const std::string& what) {
    std::ostringstream ss;
    ss << "n=" << n << " bitstring " << bitstring(idx, n) << ": " << what;
    return CrosscheckResult{false, ss.str()};
  };
  std::size_t k = 0;
  for (const auto& [idx, prob] : dist) {
    if (k >= expected.size() || expected[k] != idx) {
      const std::int64_t witness = k < expected.size() ? std::min(expected[k], idx) : idx;
      return fail(witness, "support differs from the observable set");
    }
    if (std::abs(prob - p) > 1e-10) {
      std::ostringstream ss;
      ss << "probability " << prob << " != " << p;
      return fail(idx, ss.str());
    }
    if (popcount(idx) % 2 != n % 2) return fail(idx, "ones-count parity differs from n");
    ++k;
  }
  if (k != expected.size()) return fail(expected[k], "observable string missing from support");
  return {};
}

}  // namespace eqgc
