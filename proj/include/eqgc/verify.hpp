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

// Invariant suites shared by the `verify` subcommand and the test binaries.
// Each claim reports its tolerance and, on failure, a witness.

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "eqgc/graphs.hpp"
#include "eqgc/layers.hpp"
#include "eqgc/mpnnsim.hpp"

namespace eqgc {

struct ClaimResult {
  std::string suite;
  std::string claim;
  double tolerance = 0.0;
  bool pass = false;
  std::string witness;  // empty on success
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  double tol = 1e-9;
  int random_circuits = 20;
  int mpnn_random_inits = 20;
  /// Feeds an EDU with asymmetric D, flagged undirected, to the symmetry suite.
  bool inject_fault = false;
};

/// Erdos-Renyi graph with edge probability p.
Graph random_graph(std::mt19937_64& rng, int n, double p = 0.5);
/// Every labelled simple graph on n nodes (2^(n(n-1)/2) of them).
std::vector<Graph> all_graphs(int n);
Permutation random_permutation(std::mt19937_64& rng, int n);

/// Undirected EDU with Haar-random V and symmetric random phases.
EduGate random_edu(std::mt19937_64& rng, int s);
/// Up to `max_pairs` (node layer, edge layer) pairs with random gates, s = 2.
Circuit random_edu_circuit(std::mt19937_64& rng, int max_pairs);

/// Random total update table for k = 1 with the given w, b.
MpnnSpec random_mpnn_spec(std::mt19937_64& rng, int k, int w, int b);

std::vector<ClaimResult> verify_equivariance(const VerifyOptions& opt);
std::vector<ClaimResult> verify_commutativity(const VerifyOptions& opt);
std::vector<ClaimResult> verify_eh_conversion(const VerifyOptions& opt);
std::vector<ClaimResult> verify_cycles(const VerifyOptions& opt);
std::vector<ClaimResult> verify_dimensions(const VerifyOptions& opt);
std::vector<ClaimResult> verify_mpnn(const VerifyOptions& opt);
std::vector<ClaimResult> verify_gradients(const VerifyOptions& opt);

std::vector<ClaimResult> verify_all(const VerifyOptions& opt);

/// Central-difference check of loss_gradient at random parameters: returns the
/// worst relative error max|g - fd| / max(|fd|, floor) over all components.
double gradient_fd_error(std::mt19937_64& rng, int depth, double step = 1e-5, double floor = 1e-6);

/// One line per claim: "PASS|FAIL  suite  claim  (tol X)  [witness]".
void print_report(std::ostream& out, const std::vector<ClaimResult>& results);
bool all_passed(const std::vector<ClaimResult>& results);

}  // namespace eqgc
