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

#include "eqgc/mpnnsim.hpp"

#include <cmath>
#include <sstream>

namespace eqgc {

namespace {

std::uint32_t reg_mask(int b) { return (std::uint32_t{1} << b) - 1; }

CMatrix fourier_rows(int b) {
  const int dim = 1 << b;
  CMatrix v(dim, dim);
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int j = 0; j < dim; ++j) {
    for (int y = 0; y < dim; ++y) {
      v(j, y) = norm * std::exp(Complex(0.0, 2.0 * kPi * j * y / dim));
    }
  }
  return v;
}

}  // namespace

void MpnnSpec::validate() const {
  if (k < 1 || w < 1 || b < 1) throw ValidationError("MpnnSpec: need k, w, b >= 1");
  if (2 * w * b > 30) throw SizeLimitError("MpnnSpec: update tables too large");
  if (static_cast<int>(updates.size()) != k) throw ValidationError("MpnnSpec: need one table per layer");
  const std::size_t entries = std::size_t{1} << (2 * w * b);
  const std::uint32_t limit = std::uint32_t{1} << (w * b);
  for (const auto& t : updates) {
    if (t.size() != entries) throw ValidationError("MpnnSpec: update table is not total");
    for (auto v : t) {
      if (v >= limit) throw ValidationError("MpnnSpec: update value does not fit in w*b bits");
    }
  }
}

std::uint32_t pack_registers(const Registers& r, int b) {
  std::uint32_t out = 0;
  for (int v : r) out = (out << b) | (static_cast<std::uint32_t>(v) & reg_mask(b));
  return out;
}

Registers unpack_registers(std::uint32_t packed, int w, int b) {
  Registers r(w);
  for (int i = w - 1; i >= 0; --i) {
    r[i] = static_cast<int>(packed & reg_mask(b));
    packed >>= b;
  }
  return r;
}

UpdateTable make_update_table(int w, int b,
                              const std::function<Registers(const Registers&, const Registers&)>& fn) {
  const std::uint32_t states = std::uint32_t{1} << (w * b);
  UpdateTable t(std::size_t{states} * states);
  for (std::uint32_t h = 0; h < states; ++h) {
    for (std::uint32_t a = 0; a < states; ++a) {
      Registers out = fn(unpack_registers(h, w, b), unpack_registers(a, w, b));
      if (static_cast<int>(out.size()) != w) throw ValidationError("update function returned wrong width");
      t[(std::size_t{h} << (w * b)) | a] = pack_registers(out, b);
    }
  }
  return t;
}

std::vector<Registers> classical_forward(const MpnnSpec& spec, const Graph& g,
                                         const std::vector<Registers>& init) {
  spec.validate();
  if (static_cast<int>(init.size()) != g.n()) throw ValidationError("classical_forward: need one init per node");
  for (const auto& r : init) {
    if (static_cast<int>(r.size()) != spec.w) throw ValidationError("classical_forward: init width mismatch");
    for (int v : r) {
      if (v < 0 || v > static_cast<int>(reg_mask(spec.b))) {
        throw ValidationError("classical_forward: init value does not fit in b bits");
      }
    }
  }
  const int modulus = 1 << spec.b;
  const auto nbrs = g.neighbors();
  std::vector<Registers> h = init;
  for (int layer = 0; layer < spec.k; ++layer) {
    std::vector<Registers> next(g.n());
    for (int v = 0; v < g.n(); ++v) {
      Registers agg(spec.w, 0);
      for (int u : nbrs[v]) {
        for (int i = 0; i < spec.w; ++i) agg[i] = (agg[i] + h[u][i]) % modulus;
      }
      const auto key = (std::size_t{pack_registers(h[v], spec.b)} << (spec.w * spec.b)) |
                       pack_registers(agg, spec.b);
      next[v] = unpack_registers(spec.updates[layer][key], spec.w, spec.b);
    }
    h = std::move(next);
  }
  return h;
}

RegisterLayout::RegisterLayout(int k, int w, int b) : k_(k), w_(w), b_(b) {
  if (k < 1 || w < 1 || b < 1) throw ValidationError("RegisterLayout: need k, w, b >= 1");
  if (qubits_per_node() > 30) throw SizeLimitError("RegisterLayout: too many qubits per node");
}

int RegisterLayout::h_offset(int layer, int reg) const {
  if (layer < 0 || layer > k_ || reg < 0 || reg >= w_) throw ValidationError("h_offset: out of range");
  return (2 * layer) * w_ * b_ + reg * b_;
}

int RegisterLayout::a_offset(int layer, int reg) const {
  if (layer < 1 || layer > k_ || reg < 0 || reg >= w_) throw ValidationError("a_offset: out of range");
  return (2 * layer - 1) * w_ * b_ + reg * b_;
}

int RegisterLayout::read(std::uint64_t node_value, int offset) const {
  const int shift = qubits_per_node() - offset - b_;
  return static_cast<int>((node_value >> shift) & reg_mask(b_));
}

std::uint64_t RegisterLayout::write(std::uint64_t node_value, int offset, int value) const {
  const int shift = qubits_per_node() - offset - b_;
  const std::uint64_t mask = std::uint64_t{reg_mask(b_)} << shift;
  return (node_value & ~mask) | ((static_cast<std::uint64_t>(value) << shift) & mask);
}

CMatrix increment_matrix(int b) {
  const int dim = 1 << b;
  CMatrix s = CMatrix::Zero(dim, dim);
  for (int y = 0; y < dim; ++y) s((y + 1) % dim, y) = 1.0;
  return s;
}

IncrementDiagonalization increment_diagonalization(int b) {
  if (b < 1 || b > 4) throw ValidationError("increment_diagonalization: need 1 <= b <= 4");
  const int dim = 1 << b;
  CMatrix d = CMatrix::Zero(dim, dim);
  for (int j = 0; j < dim; ++j) d(j, j) = std::exp(Complex(0.0, 2.0 * kPi * j / dim));
  return {fourier_rows(b), d};
}

EduGate routed_addition_edu(const RegisterLayout& layout, int layer) {
  const int b = layout.b();
  const int s = 1 << layout.qubits_per_node();
  // V: Fourier rows on every a(layer, i) register, identity elsewhere.
  CMatrix v = CMatrix::Identity(1, 1);
  const CMatrix f = fourier_rows(b);
  const CMatrix id = CMatrix::Identity(1 << b, 1 << b);
  std::vector<bool> is_target(layout.qubits_per_node() / b, false);
  for (int i = 0; i < layout.w(); ++i) is_target[layout.a_offset(layer, i) / b] = true;
  for (bool t : is_target) v = kron(v, t ? f : id);

  // In the V-rotated basis each a register holds a Fourier index j, and
  // adding x multiplies the component by exp(2 pi i j x / 2^b).
  const double unit = 2.0 * kPi / (1 << b);
  RVector phases(static_cast<Eigen::Index>(s) * s);
  for (int v1 = 0; v1 < s; ++v1) {
    for (int v2 = 0; v2 < s; ++v2) {
      long long acc = 0;
      for (int i = 0; i < layout.w(); ++i) {
        const int ao = layout.a_offset(layer, i);
        const int ho = layout.h_offset(layer - 1, i);
        acc += static_cast<long long>(layout.read(v1, ao)) * layout.read(v2, ho) +
               static_cast<long long>(layout.read(v2, ao)) * layout.read(v1, ho);
      }
      phases(static_cast<Eigen::Index>(v1) * s + v2) = unit * static_cast<double>(acc % (1 << b));
    }
  }
  return EduGate{v, phases, true};
}

EduGate addition_edu(int b) {
  if (b < 1 || b > 2) throw ValidationError("addition_edu: need 1 <= b <= 2");
  const int s = 1 << (2 * b);
  const double unit = 2.0 * kPi / (1 << b);
  const int mask = (1 << b) - 1;
  RVector phases(s * s);
  for (int v1 = 0; v1 < s; ++v1) {
    for (int v2 = 0; v2 < s; ++v2) {
      const int x1 = v1 >> b, j1 = v1 & mask;
      const int x2 = v2 >> b, j2 = v2 & mask;
      phases(v1 * s + v2) = unit * ((j1 * x2 + j2 * x1) % (1 << b));
    }
  }
  return EduGate{kron(CMatrix::Identity(1 << b, 1 << b), fourier_rows(b)), phases, true};
}

CMatrix update_unitary(const RegisterLayout& layout, const UpdateTable& table, int layer) {
  const int w = layout.w(), b = layout.b();
  const std::uint64_t s = std::uint64_t{1} << layout.qubits_per_node();
  CMatrix u = CMatrix::Zero(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s));
  for (std::uint64_t in = 0; in < s; ++in) {
    Registers h(w), a(w);
    for (int i = 0; i < w; ++i) {
      h[i] = layout.read(in, layout.h_offset(layer - 1, i));
      a[i] = layout.read(in, layout.a_offset(layer, i));
    }
    const auto key = (std::size_t{pack_registers(h, b)} << (w * b)) | pack_registers(a, b);
    const Registers upd = unpack_registers(table.at(key), w, b);
    std::uint64_t out = in;
    for (int i = 0; i < w; ++i) {
      const int off = layout.h_offset(layer, i);
      out = layout.write(out, off, layout.read(out, off) ^ upd[i]);
    }
    u(static_cast<Eigen::Index>(out), static_cast<Eigen::Index>(in)) = 1.0;
  }
  return u;
}

CompiledMpnn compile_mpnn(const MpnnSpec& spec, int n_nodes) {
  spec.validate();
  RegisterLayout layout(spec.k, spec.w, spec.b);
  if (layout.qubits_per_node() * n_nodes > kMaxSimulationQubits) {
    throw SizeLimitError("compile_mpnn: " + std::to_string(layout.qubits_per_node() * n_nodes) +
                         " qubits exceed the simulation budget of " +
                         std::to_string(kMaxSimulationQubits));
  }
  Circuit c(1 << layout.qubits_per_node());
  for (int layer = 1; layer <= spec.k; ++layer) {
    c.add(EdgeLayer{routed_addition_edu(layout, layer)});
    c.add(NodeLayer{update_unitary(layout, spec.updates[layer - 1], layer), std::nullopt});
  }
  return {layout, std::move(c)};
}

SimulationReport verify_simulation(const MpnnSpec& spec, const Graph& g,
                                   const std::vector<Registers>& init) {
  SimulationReport report;
  report.classical = classical_forward(spec, g, init);
  const CompiledMpnn compiled = compile_mpnn(spec, g.n());
  const RegisterLayout& layout = compiled.layout;
  const std::int64_t s = std::int64_t{1} << layout.qubits_per_node();

  std::int64_t index = 0;
  for (int v = 0; v < g.n(); ++v) {
    std::uint64_t node = 0;
    for (int i = 0; i < spec.w; ++i) node = layout.write(node, layout.h_offset(0, i), init[v][i]);
    index = index * s + static_cast<std::int64_t>(node);
  }
  Statevector state = basis_state(g.n(), layout.qubits_per_node(), index);
  for (const auto& layer : compiled.circuit.layers()) {
    apply_layer(layer, g, state);
    report.min_peak_probability =
        std::min(report.min_peak_probability, state.amps().cwiseAbs2().maxCoeff());
  }

  Eigen::Index peak = 0;
  const double peak_prob = state.amps().cwiseAbs2().maxCoeff(&peak);
  std::int64_t rest = peak;
  report.quantum.assign(g.n(), Registers(spec.w));
  for (int v = g.n() - 1; v >= 0; --v) {
    const auto node = static_cast<std::uint64_t>(rest % s);
    rest /= s;
    for (int i = 0; i < spec.w; ++i) report.quantum[v][i] = layout.read(node, layout.h_offset(spec.k, i));
  }
  if (peak_prob < 1.0 - 1e-10 || report.min_peak_probability < 1.0 - 1e-10) {
    std::ostringstream ss;
    ss << "final state is not a computational basis state (peak probability "
       << report.min_peak_probability << ")";
    report.message = ss.str();
    return report;
  }
  for (int v = 0; v < g.n(); ++v) {
    for (int i = 0; i < spec.w; ++i) {
      if (report.quantum[v][i] != report.classical[v][i]) {
        std::ostringstream ss;
        ss << "node " << v << " register h(" << spec.k << "," << i << "): quantum "
           << report.quantum[v][i] << " != classical " << report.classical[v][i];
        report.message = ss.str();
        return report;
      }
    }
  }
  report.ok = true;
  return report;
}

double uniqueness_probability(int n, int b) {
  if (n < 0 || b < 0 || b > 62) throw ValidationError("uniqueness_probability: bad arguments");
  const double space = std::ldexp(1.0, b);
  if (n > space) return 0.0;
  double p = 1.0;
  for (int i = 0; i < n; ++i) p *= 1.0 - i / space;
  return p;
}

int uniqueness_bits(int n, double eps) {
  if (n < 1 || eps <= 0.0 || eps >= 1.0) throw ValidationError("uniqueness_bits: need n >= 1, 0 < eps < 1");
  return static_cast<int>(std::ceil(2.0 * std::log2(n) + std::log2(1.0 / eps) - 1e-12));
}

}  // namespace eqgc
