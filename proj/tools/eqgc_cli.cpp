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

// eqgc: experiment runners, verification suites and table emitters.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "eqgc/eqspace.hpp"
#include "eqgc/errors.hpp"
#include "eqgc/graphs.hpp"
#include "eqgc/layers.hpp"
#include "eqgc/simulator.hpp"
#include "eqgc/training.hpp"
#include "eqgc/verify.hpp"
#include "eqgc/zxparity.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct Shared {
  std::string out = "-";
  std::uint64_t seed = 0;
  double tol = 1e-9;
};

void add_shared(CLI::App* cmd, Shared& s) {
  cmd->add_option("--out", s.out, "Output path ('-' for stdout)");
  cmd->add_option("--seed", s.seed, "Random seed");
  cmd->add_option("--tol", s.tol, "Tolerance override")->check(CLI::PositiveNumber);
}

// Writes into a string first so a failed run never leaves a partial file.
void emit(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

std::ifstream open_input(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  return f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant quantum graph circuits: simulation, training and verification"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key = value config file (TOML/INI); flags take precedence");

  Shared e1s;
  int points = 201;
  auto* expt1 = app.add_subcommand("expt1", "CZ(alpha) two-triangles vs 6-cycle distinguishability table");
  add_shared(expt1, e1s);
  expt1->add_option("--points", points, "Alpha grid resolution on [-pi, pi]")->check(CLI::Range(2, 1000000));

  Shared e2s;
  eqgc::Experiment2Options e2;
  for (int d = 1; d <= 14; ++d) e2.depths.push_back(d);
  auto* expt2 = app.add_subcommand("expt2", "Train classifiers on the cycles dataset across depths and seeds");
  add_shared(expt2, e2s);
  expt2->add_option("--depths", e2.depths, "Depth list")->delimiter(',')->check(CLI::NonNegativeNumber);
  expt2->add_option("--seeds", e2.seeds, "Seeds per depth")->check(CLI::PositiveNumber);
  expt2->add_option("--epochs", e2.epochs, "Epochs")->check(CLI::PositiveNumber);
  expt2->add_option("--lr", e2.lr, "Learning rate")->check(CLI::PositiveNumber);
  expt2->add_option("--decay", e2.decay, "Per-epoch learning-rate decay")->check(CLI::Range(0.0, 1.0));
  expt2->add_option("--threads", e2.threads, "Worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  std::string summary_path;
  expt2->add_option("--summary", summary_path, "Also write per-depth final-epoch mean/std CSV here");

  Shared vs;
  eqgc::VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "Run every invariant suite and report each claim");
  add_shared(verify, vs);
  verify->add_option("--circuits", vopt.random_circuits, "Random instances per property suite")
      ->check(CLI::PositiveNumber);
  verify->add_option("--mpnn-inits", vopt.mpnn_random_inits, "Random initial values per graph at b=2")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--inject-fault", vopt.inject_fault, "Feed an asymmetric gate flagged undirected");

  Shared ds;
  int max_n = 12;
  std::vector<int> local_dims{2, 3};
  auto* dims = app.add_subcommand("dims", "Equivariant-space dimension table");
  add_shared(dims, ds);
  dims->add_option("--max-n", max_n, "Largest node count")->check(CLI::Range(1, 12));
  dims->add_option("--s", local_dims, "Local dimensions for the diagonal count")->delimiter(',')
      ->check(CLI::Range(2, 64));

  Shared ps;
  int parity_n = 6;
  auto* parity = app.add_subcommand("parity", "Observable outcomes of the CZ(pi)/Hadamard circuit on C_n");
  add_shared(parity, ps);
  parity->add_option("--n", parity_n, "Cycle length")->check(CLI::Range(1, 20));

  Shared ss;
  std::string graph_path, circuit_path;
  auto* simulate = app.add_subcommand("simulate", "Outcome distribution of a circuit file on a graph file");
  add_shared(simulate, ss);
  simulate->add_option("--graph", graph_path, "Graph file")->required();
  simulate->add_option("--circuit", circuit_path, "Circuit file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    std::ostringstream out;
    if (*expt1) {
      eqgc::write_experiment1_csv(out, eqgc::experiment1(eqgc::linspace(-eqgc::kPi, eqgc::kPi, points)));
      emit(e1s.out, out.str());
    } else if (*expt2) {
      e2.base_seed = e2s.seed;
      const auto runs = eqgc::experiment2(e2);
      eqgc::write_experiment2_csv(out, runs);
      emit(e2s.out, out.str());
      if (!summary_path.empty()) {
        std::ostringstream sum;
        sum.precision(12);
        sum << "depth,train_ss_mean,train_ss_std,train_ms_mean,train_ms_std,eval_ss_mean,eval_ss_std,"
               "eval_ms_mean,eval_ms_std,initial_grad_mean\n";
        for (const auto& d : eqgc::summarize(runs)) {
          sum << d.depth << ',' << d.mean_train_single << ',' << d.std_train_single << ','
              << d.mean_train_many << ',' << d.std_train_many << ',' << d.mean_eval_single << ','
              << d.std_eval_single << ',' << d.mean_eval_many << ',' << d.std_eval_many << ','
              << d.mean_initial_grad << '\n';
        }
        emit(summary_path, sum.str());
      }
    } else if (*verify) {
      vopt.seed = vs.seed;
      vopt.tol = vs.tol;
      const auto results = eqgc::verify_all(vopt);
      eqgc::print_report(out, results);
      const bool ok = eqgc::all_passed(results);
      out << (ok ? "all claims passed\n" : "verification FAILED\n");
      emit(vs.out, out.str());
      return ok ? kExitOk : kExitVerifyFailed;
    } else if (*dims) {
      out << "n,s,full_dim,closed_form,diag_dim,rank_verified\n";
      for (int n = 1; n <= max_n; ++n) {
        for (int s : local_dims) {
          out << n << ',' << s << ',';
          if (s == 2) out << eqgc::full_dimension(n) << ',' << eqgc::pyramid_closed_form(n);
          else out << ',';
          out << ',' << eqgc::diagonal_dimension(n, s) << ',';
          out << (s == 2 && n <= 5 && eqgc::rank_oracle(n) == eqgc::full_dimension(n) ? 1 : 0) << '\n';
        }
      }
      emit(ds.out, out.str());
    } else if (*parity) {
      out.precision(12);
      out << "n,bitstring,prob\n";
      const double p = eqgc::observable_probability(parity_n);
      for (auto x : eqgc::observable_set(parity_n)) {
        out << parity_n << ',' << eqgc::bitstring(x, parity_n) << ',' << p << '\n';
      }
      emit(ps.out, out.str());
    } else if (*simulate) {
      auto gin = open_input(graph_path);
      const eqgc::Graph g = eqgc::read_graph(gin);
      auto cin = open_input(circuit_path);
      const eqgc::Circuit c = eqgc::read_circuit(cin);
      const int q = c.s() == 2 ? 1 : 0;
      if (q == 0) throw eqgc::UnsupportedError("simulate: only qubit circuits are supported");
      const auto state = eqgc::apply_circuit(c, g, eqgc::Statevector(g.n(), q));
      out.precision(12);
      out << "bitstring,prob\n";
      for (const auto& [x, p] : eqgc::outcome_distribution(state)) {
        out << eqgc::bitstring(x, g.n()) << ',' << p << '\n';
      }
      emit(ss.out, out.str());
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
