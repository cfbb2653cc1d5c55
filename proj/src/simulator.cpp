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

#include "eqgc/simulator.hpp"

#include <bit>
#include <cmath>

namespace eqgc {

namespace {

constexpr std::int64_t kMaxStateDim = std::int64_t{1} << 24;
constexpr double kNormTol = 1e-10;
constexpr double kProbFloor = 1e-14;

void check_node(const Statevector& st, int node) {
  if (node < 0 || node >= st.n()) {
    throw ValidationError("node index " + std::to_string(node) + " out of range");
  }
}

}  // namespace

std::int64_t checked_power(std::int64_t base, int exp, std::int64_t limit) {
  std::int64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    out *= base;
    if (out > limit) {
      throw SizeLimitError("dimension " + std::to_string(base) + "^" + std::to_string(exp) +
                           " exceeds limit " + std::to_string(limit));
    }
  }
  return out;
}

Statevector::Statevector(int n, int q) : n_(n), q_(q) {
  if (n < 0 || q < 1) throw ValidationError("statevector: need n >= 0, q >= 1");
  amps_ = CVector::Zero(checked_power(std::int64_t{1} << q, n, kMaxStateDim));
  amps_(0) = 1.0;
}

Statevector::Statevector(int n, int q, CVector amps) : n_(n), q_(q), amps_(std::move(amps)) {
  if (n < 0 || q < 1) throw ValidationError("statevector: need n >= 0, q >= 1");
  if (amps_.size() != checked_power(std::int64_t{1} << q, n, kMaxStateDim)) {
    throw DimensionError("statevector: amplitude count is not s^n");
  }
  if (!amps_.allFinite()) throw ValidationError("statevector: non-finite amplitude");
  if (std::abs(amps_.squaredNorm() - 1.0) > kNormTol) {
    throw ValidationError("statevector: amplitudes are not normalized");
  }
}

std::int64_t Statevector::stride(int node) const {
  return std::int64_t{1} << (q_ * (n_ - 1 - node));
}

Statevector basis_state(int n, int q, std::int64_t index) {
  Statevector st(n, q);
  if (index < 0 || index >= st.dim()) throw ValidationError("basis_state: index out of range");
  st.amps()(0) = 0.0;
  st.amps()(index) = 1.0;
  return st;
}

Statevector product_state(std::span<const CVector> node_states) {
  if (node_states.empty()) return Statevector(0, 1);
  const auto s = node_states.front().size();
  if (s < 2 || !std::has_single_bit(static_cast<std::uint64_t>(s))) {
    throw ValidationError("product_state: node dimension must be a power of two >= 2");
  }
  CVector amps = CVector::Ones(1);
  for (const auto& v : node_states) {
    if (v.size() != s) throw DimensionError("product_state: node states differ in dimension");
    if (std::abs(v.squaredNorm() - 1.0) > kNormTol) {
      throw ValidationError("product_state: node state is not normalized");
    }
    amps = kron(amps, v);
  }
  const int q = std::countr_zero(static_cast<std::uint64_t>(s));
  return Statevector(static_cast<int>(node_states.size()), q, std::move(amps));
}

Statevector uniform_product_state(const CVector& node_state, int n) {
  std::vector<CVector> states(n, node_state);
  return product_state(states);
}

void apply_1local(Statevector& state, const CMatrix& u, int node) {
  check_node(state, node);
  const int s = state.s();
  if (u.rows() != s || u.cols() != s) throw DimensionError("apply_1local: gate is not s x s");
  const std::int64_t stride = state.stride(node);
  const std::int64_t block = stride * s;
  CVector& amps = state.amps();
  CVector in(s);
  for (std::int64_t outer = 0; outer < state.dim(); outer += block) {
    for (std::int64_t inner = 0; inner < stride; ++inner) {
      const std::int64_t base = outer + inner;
      bool any = false;
      for (int d = 0; d < s; ++d) {
        in(d) = amps(base + d * stride);
        any = any || in(d) != Complex(0.0);
      }
      if (!any) continue;
      for (int r = 0; r < s; ++r) {
        Complex acc = 0.0;
        for (int c = 0; c < s; ++c) acc += u(r, c) * in(c);
        amps(base + r * stride) = acc;
      }
    }
  }
}

void apply_2local(Statevector& state, const CMatrix& u, int a, int b) {
  check_node(state, a);
  check_node(state, b);
  if (a == b) throw ValidationError("apply_2local: nodes must differ");
  const int s = state.s();
  const int s2 = s * s;
  if (u.rows() != s2 || u.cols() != s2) throw DimensionError("apply_2local: gate is not s^2 x s^2");
  const std::int64_t sa = state.stride(a);
  const std::int64_t sb = state.stride(b);
  std::vector<std::int64_t> offset(s2);
  for (int da = 0; da < s; ++da) {
    for (int db = 0; db < s; ++db) offset[da * s + db] = da * sa + db * sb;
  }
  CVector& amps = state.amps();
  CVector in(s2);
  CVector out(s2);
  std::vector<int> nonzero;
  nonzero.reserve(s2);
  for (std::int64_t base = 0; base < state.dim(); ++base) {
    if ((base / sa) % s != 0 || (base / sb) % s != 0) continue;
    nonzero.clear();
    for (int k = 0; k < s2; ++k) {
      in(k) = amps(base + offset[k]);
      if (in(k) != Complex(0.0)) nonzero.push_back(k);
    }
    if (nonzero.empty()) continue;
    // Column-wise accumulation over nonzero inputs keeps sparse (e.g. basis)
    // inputs cheap for large registers.
    out.setZero();
    for (int c : nonzero) out += u.col(c) * in(c);
    for (int r = 0; r < s2; ++r) amps(base + offset[r]) = out(r);
  }
}

void apply_diagonal_2local(Statevector& state, const CVector& phases, int a, int b) {
  check_node(state, a);
  check_node(state, b);
  if (a == b) throw ValidationError("apply_diagonal_2local: nodes must differ");
  const int s = state.s();
  if (phases.size() != s * s) throw DimensionError("apply_diagonal_2local: need s^2 phases");
  const std::int64_t sa = state.stride(a);
  const std::int64_t sb = state.stride(b);
  CVector& amps = state.amps();
  for (std::int64_t idx = 0; idx < state.dim(); ++idx) {
    const auto da = (idx / sa) % s;
    const auto db = (idx / sb) % s;
    amps(idx) *= phases(da * s + db);
  }
}

namespace {

// Maps every basis index d to the index of d o p.
std::vector<std::int64_t> permuted_indices(const Permutation& p, int n, int s,
                                           std::int64_t dim) {
  std::vector<std::int64_t> stride(n);
  for (int i = 0; i < n; ++i) {
    stride[i] = 1;
    for (int j = i + 1; j < n; ++j) stride[i] *= s;
  }
  std::vector<std::int64_t> out(dim);
  std::vector<int> digit(n);
  for (std::int64_t idx = 0; idx < dim; ++idx) {
    for (int i = 0; i < n; ++i) digit[i] = static_cast<int>((idx / stride[i]) % s);
    std::int64_t target = 0;
    for (int i = 0; i < n; ++i) target += digit[p(i)] * stride[i];
    out[idx] = target;
  }
  return out;
}

}  // namespace

Statevector apply_permutation(const Statevector& state, const Permutation& p) {
  if (p.size() != state.n()) throw ValidationError("apply_permutation: size mismatch");
  const auto map = permuted_indices(p, state.n(), state.s(), state.dim());
  Statevector out(state.n(), state.q());
  for (std::int64_t idx = 0; idx < state.dim(); ++idx) out.amps()(map[idx]) = state.amps()(idx);
  return out;
}

CMatrix permutation_operator(const Permutation& p, int n, int s) {
  if (p.size() != n) throw ValidationError("permutation_operator: size mismatch");
  const auto dim = checked_power(s, n, kMaxDenseDim);
  const auto map = permuted_indices(p, n, s, dim);
  CMatrix out = CMatrix::Zero(dim, dim);
  for (std::int64_t idx = 0; idx < dim; ++idx) out(map[idx], idx) = 1.0;
  return out;
}

CMatrix embed_1local(const CMatrix& u, int node, int n, int s) {
  checked_power(s, n, kMaxDenseDim);
  if (node < 0 || node >= n) throw ValidationError("embed_1local: node out of range");
  CMatrix out = CMatrix::Identity(1, 1);
  for (int i = 0; i < n; ++i) out = kron(out, i == node ? u : CMatrix::Identity(s, s).eval());
  return out;
}

CMatrix embed_2local(const CMatrix& u, int a, int b, int n, int s) {
  const auto dim = checked_power(s, n, kMaxDenseDim);
  if (a == b || a < 0 || b < 0 || a >= n || b >= n) {
    throw ValidationError("embed_2local: invalid node pair");
  }
  if (u.rows() != s * s || u.cols() != s * s) throw DimensionError("embed_2local: gate is not s^2 x s^2");
  // Column-by-column through the strided kernel.
  CMatrix out(dim, dim);
  for (std::int64_t col = 0; col < dim; ++col) {
    Statevector st(n, std::countr_zero(static_cast<unsigned>(s)));
    st.amps().setZero();
    st.amps()(col) = 1.0;
    apply_2local(st, u, a, b);
    out.col(col) = st.amps();
  }
  return out;
}

OutcomeDistribution outcome_distribution(const Statevector& state) {
  OutcomeDistribution dist;
  for (std::int64_t idx = 0; idx < state.dim(); ++idx) {
    const double p = std::norm(state.amps()(idx));
    if (p >= kProbFloor) dist.emplace(idx, p);
  }
  return dist;
}

std::vector<double> ones_count_distribution(const Statevector& state) {
  if (state.q() != 1) throw UnsupportedError("ones_count_distribution: requires q = 1");
  std::vector<double> out(state.n() + 1, 0.0);
  for (std::int64_t idx = 0; idx < state.dim(); ++idx) {
    out[popcount(idx)] += std::norm(state.amps()(idx));
  }
  return out;
}

std::string bitstring(std::int64_t index, int n) {
  std::string out(n, '0');
  for (int i = 0; i < n; ++i) {
    if ((index >> (n - 1 - i)) & 1) out[i] = '1';
  }
  return out;
}

int popcount(std::int64_t x) { return std::popcount(static_cast<std::uint64_t>(x)); }

}  // namespace eqgc
