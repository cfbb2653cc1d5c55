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

// Exact-distribution training of single-qubit EDU-QGC graph classifiers.
//
// Model: |+>^n, then per layer pair a diagonal edge layer with symmetric
// phases (phi00, phi01, phi11) followed by a node layer
// V = Rz(t3) Ry(t2) Rz(t1); the ones-count k of the measured bitstring is
// read out through sigmoid(slope * k / n + bias).

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "eqgc/graphs.hpp"
#include "eqgc/layers.hpp"

namespace eqgc {

struct LayerPair {
  std::array<double, 3> euler{};
  std::array<double, 3> phases{};  // phi00, phi01 (= phi10), phi11
};

struct ModelParams {
  std::vector<LayerPair> pairs;
  double slope = 4.0;
  double bias = -2.0;

  int depth() const { return static_cast<int>(pairs.size()); }
  /// 6 * depth + 2.
  std::size_t size() const { return 6 * pairs.size() + 2; }
  std::vector<double> flatten() const;
  static ModelParams unflatten(const std::vector<double>& flat);
};

struct TrainConfig {
  int epochs = 100;
  double lr = 0.01;
  double decay = 0.99;
  std::uint64_t seed = 0;
  int depth = 1;

  void validate() const;
};

struct EpochMetrics {
  int epoch = 0;
  double loss = 0.0;
  double train_single = 0.0;
  double train_many = 0.0;
  double eval_single = 0.0;
  double eval_many = 0.0;
  double grad_norm = 0.0;  // max-norm of the loss gradient
};

struct TrainResult {
  std::vector<EpochMetrics> metrics;  // epochs 0..config.epochs (last row: final params)
  ModelParams params;
};

/// Uniform(-pi, pi) angles and phases; slope 4, bias -2.
ModelParams init_params(int depth, std::uint64_t seed);

/// The same model expressed as an EQGC layer list (edge, node per pair).
Circuit model_circuit(const ModelParams& params);

/// Ones-count distribution, length n + 1.
std::vector<double> forward(const ModelParams& params, const Graph& g);

double sigmoid(double z);
/// Class-1 probability for every ones-count k = 0..n.
std::vector<double> predict(const ModelParams& params, int n);
/// Binary cross-entropy with probability floor 1e-12.
double bce(int label, double z);

double expected_loss(const ModelParams& params, const std::vector<LabeledGraph>& data);
/// Adjoint-method gradient, same layout as ModelParams::flatten().
std::vector<double> loss_gradient(const ModelParams& params, const std::vector<LabeledGraph>& data,
                                  double* loss = nullptr);

double single_sample_accuracy(const ModelParams& params, const std::vector<LabeledGraph>& data);
double many_sample_accuracy(const ModelParams& params, const std::vector<LabeledGraph>& data);

/// Full-batch Adam (0.9, 0.999, 1e-8), step size lr * decay^epoch.
TrainResult adam_train(const TrainConfig& config, const CyclesDataset& data);

struct Experiment1Row {
  double alpha = 0.0;
  int k = 0;
  double prob_g1 = 0.0;
  double prob_g2 = 0.0;
  double accuracy = 0.0;
};

/// |+>^6, CZ(alpha) on every edge, Hadamard on every node, for two triangles
/// (G1) and the 6-cycle (G2). accuracy = 1/2 sum_k max(P(k|G1), P(k|G2)).
std::vector<Experiment1Row> experiment1(const std::vector<double>& alpha_grid);
std::vector<double> linspace(double lo, double hi, int points);

struct Experiment2Run {
  int depth = 0;
  std::uint64_t seed = 0;
  TrainResult result;
};

struct Experiment2Options {
  std::vector<int> depths;
  int seeds = 10;
  int epochs = 100;
  double lr = 0.01;
  double decay = 0.99;
  std::uint64_t base_seed = 0;
  int threads = 0;  // 0: hardware concurrency
};

/// Runs sorted by (depth, seed) regardless of execution order.
std::vector<Experiment2Run> experiment2(const Experiment2Options& options);

struct DepthSummary {
  int depth = 0;
  double mean_train_single = 0.0, std_train_single = 0.0;
  double mean_train_many = 0.0, std_train_many = 0.0;
  double mean_eval_single = 0.0, std_eval_single = 0.0;
  double mean_eval_many = 0.0, std_eval_many = 0.0;
  double mean_initial_grad = 0.0;
};

/// Final-epoch mean and population standard deviation per depth.
std::vector<DepthSummary> summarize(const std::vector<Experiment2Run>& runs);

void write_experiment1_csv(std::ostream& out, const std::vector<Experiment1Row>& rows);
void write_experiment2_csv(std::ostream& out, const std::vector<Experiment2Run>& runs);

}  // namespace eqgc
