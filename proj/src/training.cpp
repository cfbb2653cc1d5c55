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

#include "eqgc/training.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <thread>

#include "eqgc/gates.hpp"

namespace eqgc {

namespace {

constexpr double kProbabilityFloor = 1e-12;

// Per-graph lookup tables for the fast q = 1 kernel.
struct GraphTables {
  int n = 0;
  int edges = 0;
  std::int64_t dim = 0;
  std::vector<int> ones;        // popcount of each basis index
  std::vector<int> mixed;       // edges whose endpoints differ
  std::vector<int> both_ones;   // edges with both endpoints 1
};

GraphTables make_tables(const Graph& g) {
  GraphTables t;
  t.n = g.n();
  t.edges = static_cast<int>(g.edges().size());
  t.dim = std::int64_t{1} << g.n();
  t.ones.resize(t.dim);
  t.mixed.resize(t.dim);
  t.both_ones.resize(t.dim);
  for (std::int64_t y = 0; y < t.dim; ++y) {
    t.ones[y] = popcount(y);
    int mixed = 0, both = 0;
    for (auto [u, v] : g.edges()) {
      const int bu = static_cast<int>((y >> (t.n - 1 - u)) & 1);
      const int bv = static_cast<int>((y >> (t.n - 1 - v)) & 1);
      mixed += bu ^ bv;
      both += bu & bv;
    }
    t.mixed[y] = mixed;
    t.both_ones[y] = both;
  }
  return t;
}

// Sublayer order per pair: edge phases, Rz(t1), Ry(t2), Rz(t3).
enum class Op { kEdge, kRz1, kRy, kRz3 };
constexpr int kOpsPerPair = 4;

void apply_edge(const GraphTables& t, const std::array<double, 3>& phi, CVector& psi, bool adjoint) {
  const double sign = adjoint ? -1.0 : 1.0;
  for (std::int64_t y = 0; y < t.dim; ++y) {
    const int n00 = t.edges - t.mixed[y] - t.both_ones[y];
    const double angle = phi[0] * n00 + phi[1] * t.mixed[y] + phi[2] * t.both_ones[y];
    psi(y) *= std::polar(1.0, sign * angle);
  }
}

// Rz(theta) on every node: exp(-i theta/2 (#zeros - #ones)).
void apply_rz_all(const GraphTables& t, double theta, CVector& psi, bool adjoint) {
  std::vector<Complex> table(t.n + 1);
  const double sign = adjoint ? -1.0 : 1.0;
  for (int k = 0; k <= t.n; ++k) table[k] = std::polar(1.0, -sign * 0.5 * theta * (t.n - 2 * k));
  for (std::int64_t y = 0; y < t.dim; ++y) psi(y) *= table[t.ones[y]];
}

void apply_ry_all(const GraphTables& t, double theta, CVector& psi, bool adjoint) {
  const double c = std::cos(theta / 2);
  const double s = adjoint ? -std::sin(theta / 2) : std::sin(theta / 2);
  for (int node = 0; node < t.n; ++node) {
    const std::int64_t stride = std::int64_t{1} << (t.n - 1 - node);
    for (std::int64_t outer = 0; outer < t.dim; outer += 2 * stride) {
      for (std::int64_t inner = 0; inner < stride; ++inner) {
        const std::int64_t i0 = outer + inner, i1 = i0 + stride;
        const Complex a0 = psi(i0), a1 = psi(i1);
        psi(i0) = c * a0 - s * a1;
        psi(i1) = s * a0 + c * a1;
      }
    }
  }
}

void apply_op(const GraphTables& t, const LayerPair& p, Op op, CVector& psi, bool adjoint) {
  switch (op) {
    case Op::kEdge: apply_edge(t, p.phases, psi, adjoint); break;
    case Op::kRz1: apply_rz_all(t, p.euler[0], psi, adjoint); break;
    case Op::kRy: apply_ry_all(t, p.euler[1], psi, adjoint); break;
    case Op::kRz3: apply_rz_all(t, p.euler[2], psi, adjoint); break;
  }
}

CVector plus_state(std::int64_t dim) {
  return CVector::Constant(dim, Complex(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
}

// Runs the circuit; when `trace` is given, stores the state after each op.
CVector simulate(const ModelParams& params, const GraphTables& t, std::vector<CVector>* trace) {
  CVector psi = plus_state(t.dim);
  if (trace) trace->assign(1, psi);
  for (const auto& pair : params.pairs) {
    for (int o = 0; o < kOpsPerPair; ++o) {
      apply_op(t, pair, static_cast<Op>(o), psi, false);
      if (trace) trace->push_back(psi);
    }
  }
  return psi;
}

std::vector<double> ones_counts(const GraphTables& t, const CVector& psi) {
  std::vector<double> q(t.n + 1, 0.0);
  for (std::int64_t y = 0; y < t.dim; ++y) q[t.ones[y]] += std::norm(psi(y));
  return q;
}

double dbce_dz(int label, double z) {
  if (label == 1) {
    const double p = sigmoid(z);
    return p > kProbabilityFloor ? -sigmoid(-z) : 0.0;
  }
  const double one_minus_p = sigmoid(-z);
  return one_minus_p > kProbabilityFloor ? sigmoid(z) : 0.0;
}

double total_weight(const std::vector<LabeledGraph>& data) {
  double w = 0.0;
  for (const auto& ex : data) w += ex.weight;
  return w;
}

double example_single_accuracy(const ModelParams& params, const LabeledGraph& ex) {
  const auto q = forward(params, ex.graph);
  const auto p = predict(params, ex.graph.n());
  double acc = 0.0;
  for (std::size_t k = 0; k < q.size(); ++k) {
    const bool correct = ex.label == 1 ? p[k] > 0.5 : p[k] < 0.5;
    if (correct) acc += q[k];
  }
  return acc;
}

}  // namespace

std::vector<double> ModelParams::flatten() const {
  std::vector<double> out;
  out.reserve(size());
  for (const auto& p : pairs) {
    out.insert(out.end(), p.euler.begin(), p.euler.end());
    out.insert(out.end(), p.phases.begin(), p.phases.end());
  }
  out.push_back(slope);
  out.push_back(bias);
  return out;
}

ModelParams ModelParams::unflatten(const std::vector<double>& flat) {
  if (flat.size() < 2 || (flat.size() - 2) % 6 != 0) {
    throw ValidationError("ModelParams::unflatten: size must be 6k + 2");
  }
  ModelParams m;
  const std::size_t depth = (flat.size() - 2) / 6;
  m.pairs.resize(depth);
  for (std::size_t d = 0; d < depth; ++d) {
    for (int i = 0; i < 3; ++i) {
      m.pairs[d].euler[i] = flat[6 * d + i];
      m.pairs[d].phases[i] = flat[6 * d + 3 + i];
    }
  }
  m.slope = flat[6 * depth];
  m.bias = flat[6 * depth + 1];
  return m;
}

void TrainConfig::validate() const {
  if (epochs < 1) throw ValidationError("TrainConfig: epochs must be >= 1");
  if (!(lr > 0.0)) throw ValidationError("TrainConfig: lr must be > 0");
  if (!(decay > 0.0 && decay <= 1.0)) throw ValidationError("TrainConfig: decay must be in (0, 1]");
  if (depth < 0) throw ValidationError("TrainConfig: depth must be >= 0");
}

ModelParams init_params(int depth, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  ModelParams m;
  m.pairs.resize(depth);
  for (auto& p : m.pairs) {
    for (auto& e : p.euler) e = angle(rng);
    for (auto& ph : p.phases) ph = angle(rng);
  }
  m.slope = 4.0;
  m.bias = -2.0;
  return m;
}

Circuit model_circuit(const ModelParams& params) {
  Circuit c(2);
  for (const auto& p : params.pairs) {
    c.add(DiagEdgeLayer{symmetric_phases(p.phases[0], p.phases[1], p.phases[2])});
    c.add(NodeLayer::from_euler(p.euler[0], p.euler[1], p.euler[2]));
  }
  return c;
}

std::vector<double> forward(const ModelParams& params, const Graph& g) {
  const GraphTables t = make_tables(g);
  return ones_counts(t, simulate(params, t, nullptr));
}

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

std::vector<double> predict(const ModelParams& params, int n) {
  std::vector<double> p(n + 1);
  for (int k = 0; k <= n; ++k) p[k] = sigmoid(params.slope * k / n + params.bias);
  return p;
}

double bce(int label, double z) {
  const double p = label == 1 ? sigmoid(z) : sigmoid(-z);
  return -std::log(std::max(p, kProbabilityFloor));
}

double expected_loss(const ModelParams& params, const std::vector<LabeledGraph>& data) {
  const double w = total_weight(data);
  double loss = 0.0;
  for (const auto& ex : data) {
    const auto q = forward(params, ex.graph);
    const int n = ex.graph.n();
    double l = 0.0;
    for (int k = 0; k <= n; ++k) l += q[k] * bce(ex.label, params.slope * k / n + params.bias);
    loss += ex.weight * l;
  }
  return loss / w;
}

std::vector<double> loss_gradient(const ModelParams& params, const std::vector<LabeledGraph>& data,
                                  double* loss_out) {
  const double total = total_weight(data);
  const int depth = params.depth();
  std::vector<double> grad(params.size(), 0.0);
  double loss = 0.0;
  std::vector<CVector> trace;
  for (const auto& ex : data) {
    const GraphTables t = make_tables(ex.graph);
    const CVector psi = simulate(params, t, &trace);
    const int n = t.n;
    const double scale = ex.weight / total;

    std::vector<double> per_k(n + 1);
    const auto q = ones_counts(t, psi);
    for (int k = 0; k <= n; ++k) {
      const double z = params.slope * k / n + params.bias;
      per_k[k] = bce(ex.label, z);
      loss += scale * q[k] * per_k[k];
      const double dz = scale * q[k] * dbce_dz(ex.label, z);
      grad[6 * depth] += dz * k / n;
      grad[6 * depth + 1] += dz;
    }

    // Adjoint sweep: lambda = dL/dpsi^*, pulled back through each op while
    // accumulating 2 Re <lambda| d(op)/d(theta) |psi_after>.
    CVector lambda(t.dim);
    for (std::int64_t y = 0; y < t.dim; ++y) lambda(y) = scale * per_k[t.ones[y]] * psi(y);
    for (int d = depth - 1; d >= 0; --d) {
      const LayerPair& pair = params.pairs[d];
      for (int o = kOpsPerPair - 1; o >= 0; --o) {
        const CVector& after = trace[d * kOpsPerPair + o + 1];
        const Op op = static_cast<Op>(o);
        switch (op) {
          case Op::kEdge: {
            Complex z00 = 0.0, z01 = 0.0, z11 = 0.0;
            for (std::int64_t y = 0; y < t.dim; ++y) {
              const Complex v = std::conj(lambda(y)) * after(y);
              z00 += static_cast<double>(t.edges - t.mixed[y] - t.both_ones[y]) * v;
              z01 += static_cast<double>(t.mixed[y]) * v;
              z11 += static_cast<double>(t.both_ones[y]) * v;
            }
            grad[6 * d + 3] += -2.0 * z00.imag();
            grad[6 * d + 4] += -2.0 * z01.imag();
            grad[6 * d + 5] += -2.0 * z11.imag();
            break;
          }
          case Op::kRz1:
          case Op::kRz3: {
            Complex z = 0.0;
            for (std::int64_t y = 0; y < t.dim; ++y) {
              z += static_cast<double>(n - 2 * t.ones[y]) * std::conj(lambda(y)) * after(y);
            }
            grad[6 * d + (op == Op::kRz1 ? 0 : 2)] += z.imag();
            break;
          }
          case Op::kRy: {
            // sum_v <lambda| Y_v |psi>, Y = [[0, -i], [i, 0]].
            Complex z = 0.0;
            for (int node = 0; node < n; ++node) {
              const std::int64_t stride = std::int64_t{1} << (n - 1 - node);
              for (std::int64_t outer = 0; outer < t.dim; outer += 2 * stride) {
                for (std::int64_t inner = 0; inner < stride; ++inner) {
                  const std::int64_t i0 = outer + inner, i1 = i0 + stride;
                  z += std::conj(lambda(i0)) * Complex(0.0, -1.0) * after(i1) +
                       std::conj(lambda(i1)) * Complex(0.0, 1.0) * after(i0);
                }
              }
            }
            grad[6 * d + 1] += z.imag();
            break;
          }
        }
        apply_op(t, pair, op, lambda, true);
      }
    }
  }
  if (loss_out) *loss_out = loss;
  return grad;
}

double single_sample_accuracy(const ModelParams& params, const std::vector<LabeledGraph>& data) {
  double acc = 0.0;
  for (const auto& ex : data) acc += ex.weight * example_single_accuracy(params, ex);
  return acc / total_weight(data);
}

double many_sample_accuracy(const ModelParams& params, const std::vector<LabeledGraph>& data) {
  double acc = 0.0;
  for (const auto& ex : data) {
    if (example_single_accuracy(params, ex) > 0.5) acc += ex.weight;
  }
  return acc / total_weight(data);
}

TrainResult adam_train(const TrainConfig& config, const CyclesDataset& data) {
  config.validate();
  constexpr double kBeta1 = 0.9, kBeta2 = 0.999, kEps = 1e-8;
  TrainResult result;
  std::vector<double> theta = init_params(config.depth, config.seed).flatten();
  std::vector<double> m(theta.size(), 0.0), v(theta.size(), 0.0);
  double beta1_t = 1.0, beta2_t = 1.0;
  for (int epoch = 0; epoch <= config.epochs; ++epoch) {
    const ModelParams params = ModelParams::unflatten(theta);
    EpochMetrics row;
    row.epoch = epoch;
    const auto grad = loss_gradient(params, data.train, &row.loss);
    for (double g : grad) row.grad_norm = std::max(row.grad_norm, std::abs(g));
    row.train_single = single_sample_accuracy(params, data.train);
    row.train_many = many_sample_accuracy(params, data.train);
    row.eval_single = single_sample_accuracy(params, data.eval);
    row.eval_many = many_sample_accuracy(params, data.eval);
    result.metrics.push_back(row);
    if (epoch == config.epochs) {
      result.params = params;
      break;
    }
    const double lr = config.lr * std::pow(config.decay, epoch);
    beta1_t *= kBeta1;
    beta2_t *= kBeta2;
    for (std::size_t i = 0; i < theta.size(); ++i) {
      m[i] = kBeta1 * m[i] + (1.0 - kBeta1) * grad[i];
      v[i] = kBeta2 * v[i] + (1.0 - kBeta2) * grad[i] * grad[i];
      const double m_hat = m[i] / (1.0 - beta1_t);
      const double v_hat = v[i] / (1.0 - beta2_t);
      theta[i] -= lr * m_hat / (std::sqrt(v_hat) + kEps);
    }
  }
  return result;
}

std::vector<double> linspace(double lo, double hi, int points) {
  if (points < 2) throw ValidationError("linspace: need at least two points");
  std::vector<double> out(points);
  for (int i = 0; i < points; ++i) out[i] = lo + (hi - lo) * i / (points - 1);
  out.back() = hi;
  return out;
}

std::vector<Experiment1Row> experiment1(const std::vector<double>& alpha_grid) {
  const Graph g1 = disjoint_union(cycle_graph(3), cycle_graph(3));
  const Graph g2 = cycle_graph(6);
  CVector plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const Statevector start = uniform_product_state(plus, 6);
  std::vector<Experiment1Row> rows;
  for (double alpha : alpha_grid) {
    Circuit c(2);
    c.add(DiagEdgeLayer{cz_phases(alpha)});
    c.add(NodeLayer::from_unitary(gates::hadamard()));
    const auto p1 = ones_count_distribution(apply_circuit(c, g1, start));
    const auto p2 = ones_count_distribution(apply_circuit(c, g2, start));
    double acc = 0.0;
    for (int k = 0; k <= 6; ++k) acc += 0.5 * std::max(p1[k], p2[k]);
    for (int k = 0; k <= 6; ++k) rows.push_back({alpha, k, p1[k], p2[k], acc});
  }
  return rows;
}

std::vector<Experiment2Run> experiment2(const Experiment2Options& options) {
  const CyclesDataset data = cycles_dataset();
  std::vector<Experiment2Run> runs;
  for (int depth : options.depths) {
    for (int s = 0; s < options.seeds; ++s) {
      runs.push_back({depth, options.base_seed + static_cast<std::uint64_t>(s), {}});
    }
  }
  std::sort(runs.begin(), runs.end(), [](const auto& a, const auto& b) {
    return std::tie(a.depth, a.seed) < std::tie(b.depth, b.seed);
  });
  int threads = options.threads > 0 ? options.threads
                                    : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min<int>(threads, static_cast<int>(runs.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < runs.size(); i = next++) {
      TrainConfig cfg{options.epochs, options.lr, options.decay, runs[i].seed, runs[i].depth};
      runs[i].result = adam_train(cfg, data);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
  }
  return runs;
}

std::vector<DepthSummary> summarize(const std::vector<Experiment2Run>& runs) {
  std::map<int, std::vector<const EpochMetrics*>> finals;
  std::map<int, std::vector<double>> initial_grad;
  for (const auto& r : runs) {
    finals[r.depth].push_back(&r.result.metrics.back());
    initial_grad[r.depth].push_back(r.result.metrics.front().grad_norm);
  }
  auto stats = [](const std::vector<double>& xs) {
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double var = 0.0;
    for (double x : xs) var += (x - mean) * (x - mean);
    return std::pair{mean, std::sqrt(var / static_cast<double>(xs.size()))};
  };
  std::vector<DepthSummary> out;
  for (const auto& [depth, rows] : finals) {
    DepthSummary s;
    s.depth = depth;
    auto column = [&](double EpochMetrics::*field) {
      std::vector<double> xs;
      for (const auto* r : rows) xs.push_back(r->*field);
      return stats(xs);
    };
    std::tie(s.mean_train_single, s.std_train_single) = column(&EpochMetrics::train_single);
    std::tie(s.mean_train_many, s.std_train_many) = column(&EpochMetrics::train_many);
    std::tie(s.mean_eval_single, s.std_eval_single) = column(&EpochMetrics::eval_single);
    std::tie(s.mean_eval_many, s.std_eval_many) = column(&EpochMetrics::eval_many);
    s.mean_initial_grad = stats(initial_grad[depth]).first;
    out.push_back(s);
  }
  return out;
}

void write_experiment1_csv(std::ostream& out, const std::vector<Experiment1Row>& rows) {
  const auto old = out.precision(12);
  out << "alpha,k,prob_g1,prob_g2,accuracy\n";
  for (const auto& r : rows) {
    out << r.alpha << ',' << r.k << ',' << r.prob_g1 << ',' << r.prob_g2 << ',' << r.accuracy << '\n';
  }
  out.precision(old);
}

void write_experiment2_csv(std::ostream& out, const std::vector<Experiment2Run>& runs) {
  const auto old = out.precision(12);
  out << "depth,seed,epoch,loss,train_ss,train_ms,eval_ss,eval_ms,grad_norm\n";
  for (const auto& run : runs) {
    for (const auto& m : run.result.metrics) {
      out << run.depth << ',' << run.seed << ',' << m.epoch << ',' << m.loss << ','
          << m.train_single << ',' << m.train_many << ',' << m.eval_single << ',' << m.eval_many
          << ',' << m.grad_norm << '\n';
    }
  }
  out.precision(old);
}

}  // namespace eqgc
