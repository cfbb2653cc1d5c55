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

#include "eqgc/eqspace.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "eqgc/simulator.hpp"

namespace eqgc {

namespace {

Complex int_power(Complex base, int exp) {
  Complex out = 1.0;
  for (int e = 0; e < exp; ++e) out *= base;
  return out;
}

int matrix_qubits(const CMatrix& m) {
  const auto rows = static_cast<std::uint64_t>(m.rows());
  if (m.rows() != m.cols() || rows == 0 || !std::has_single_bit(rows)) {
    throw DimensionError("expected a 2^n x 2^n matrix");
  }
  return std::countr_zero(rows);
}

}  // namespace

EquivariantWeights::EquivariantWeights(int n) : n_(n) {
  if (n < 1 || n > 12) throw ValidationError("EquivariantWeights: need 1 <= n <= 12");
  std::size_t total = 0;
  for (int i = 0; i <= n; ++i) {
    offset_.push_back(total);
    total += static_cast<std::size_t>(i + 1) * (n - i + 1);
  }
  values_.assign(total, Complex(0.0));
}

std::size_t EquivariantWeights::index(int i, int j, int k) const {
  if (i < 0 || i > n_ || j < 0 || j > i || k < 0 || k > n_ - i) {
    throw ValidationError("EquivariantWeights: (i, j, k) out of range");
  }
  return offset_[i] + static_cast<std::size_t>(j) * (n_ - i + 1) + k;
}

WeightClass weight_class(std::int64_t row, std::int64_t col, int n) {
  const std::int64_t mask = (std::int64_t{1} << n) - 1;
  return {popcount(col), popcount(row & col), popcount(row & ~col & mask)};
}

CMatrix matrix_from_weights(const EquivariantWeights& w) {
  const int n = w.n();
  const std::int64_t dim = std::int64_t{1} << n;
  CMatrix m(dim, dim);
  for (std::int64_t col = 0; col < dim; ++col) {
    for (std::int64_t row = 0; row < dim; ++row) {
      const auto c = weight_class(row, col, n);
      m(row, col) = w.at(c.i, c.j, c.k);
    }
  }
  return m;
}

EquivariantWeights weights_from_matrix(const CMatrix& m, double tol) {
  const int n = matrix_qubits(m);
  const std::int64_t dim = m.rows();
  EquivariantWeights w(n);
  // Representative entry (row, col) for every class, taken from column
  // |s_i> = |0..01..1> with i trailing ones.
  std::vector<std::pair<std::int64_t, std::int64_t>> rep(w.size(), {-1, -1});
  auto slot = [&](const WeightClass& c) {
    return static_cast<std::size_t>(&w.at(c.i, c.j, c.k) - &w.values()[0]);
  };
  for (int i = 0; i <= n; ++i) {
    const std::int64_t col = (std::int64_t{1} << i) - 1;
    for (std::int64_t row = 0; row < dim; ++row) {
      const auto c = weight_class(row, col, n);
      auto& r = rep[slot(c)];
      if (r.first < 0) {
        r = {row, col};
        w.at(c.i, c.j, c.k) = m(row, col);
      }
    }
  }
  for (std::int64_t col = 0; col < dim; ++col) {
    for (std::int64_t row = 0; row < dim; ++row) {
      const auto c = weight_class(row, col, n);
      if (std::abs(m(row, col) - w.at(c.i, c.j, c.k)) > tol) {
        const auto [r0, c0] = rep[slot(c)];
        std::ostringstream ss;
        ss << "matrix is not equivariant: entry <" << bitstring(row, n) << "|L|"
           << bitstring(col, n) << "> = " << m(row, col) << " differs from <"
           << bitstring(r0, n) << "|L|" << bitstring(c0, n) << "> = " << m(r0, c0)
           << " in class (" << c.i << "," << c.j << "," << c.k << ")";
        throw NotEquivariantError(ss.str());
      }
    }
  }
  return w;
}

std::int64_t full_dimension(int n) {
  if (n < 1) throw ValidationError("full_dimension: need n >= 1");
  std::int64_t sum = 0;
  for (std::int64_t i = 0; i <= n; ++i) sum += (i + 1) * (n - i + 1);
  const std::int64_t m = n;
  if (sum != (m + 3) * (m + 2) * (m + 1) / 6) throw Error("full_dimension: class count is not C(n+3, 3)");
  return sum;
}

std::int64_t pyramid_closed_form(int n) {
  if (n < 0) throw ValidationError("pyramid_closed_form: need n >= 0");
  const std::int64_t m = n;
  return m * (m + 1) * (m + 5) / 6;
}

std::int64_t rank_oracle(int n) {
  if (n < 1 || n > 5) throw SizeLimitError("rank_oracle: need 1 <= n <= 5");
  const EquivariantWeights shape(n);
  const std::int64_t dim = std::int64_t{1} << n;
  Eigen::MatrixXd stacked(dim * dim, static_cast<Eigen::Index>(shape.size()));
  std::size_t column = 0;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= i; ++j) {
      for (int k = 0; k <= n - i; ++k) {
        EquivariantWeights e(n);
        e.at(i, j, k) = 1.0;
        const CMatrix m = matrix_from_weights(e);
        stacked.col(static_cast<Eigen::Index>(column++)) =
            m.real().reshaped(dim * dim, 1);
      }
    }
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(stacked);
  return lu.rank();
}

std::int64_t diagonal_dimension(int n, int s) {
  if (n < 1 || s < 1) throw ValidationError("diagonal_dimension: need n, s >= 1");
  // binomial(n + s - 1, s - 1), built incrementally to stay exact.
  std::int64_t out = 1;
  for (int t = 1; t <= s - 1; ++t) out = out * (n + t) / t;
  return out;
}

std::vector<std::vector<int>> count_tuples(int n, int s) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(s, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == s - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      cur[pos] = c;
      self(self, pos + 1, left - c);
    }
  };
  rec(rec, 0, n);
  return out;
}

DiagonalEquivariantSpec diagonal_spec(int n, int s, std::vector<double> phases) {
  DiagonalEquivariantSpec spec{n, s, count_tuples(n, s), std::move(phases)};
  if (spec.phases.size() != spec.multisets.size()) {
    throw ValidationError("diagonal_spec: need one phase per node-state multiset");
  }
  return spec;
}

CMatrix diagonal_equivariant_matrix(const DiagonalEquivariantSpec& spec) {
  const auto dim = checked_power(spec.s, spec.n, kMaxDenseDim);
  CMatrix m = CMatrix::Zero(dim, dim);
  std::vector<int> counts(spec.s);
  for (std::int64_t idx = 0; idx < dim; ++idx) {
    std::fill(counts.begin(), counts.end(), 0);
    std::int64_t rest = idx;
    for (int node = 0; node < spec.n; ++node) {
      ++counts[rest % spec.s];
      rest /= spec.s;
    }
    const auto it = std::find(spec.multisets.begin(), spec.multisets.end(), counts);
    const auto slot = static_cast<std::size_t>(it - spec.multisets.begin());
    m(idx, idx) = std::exp(Complex(0.0, spec.phases[slot]));
  }
  return m;
}

EquivariantWeights cz_all_pairs_weights(int n, double alpha) {
  EquivariantWeights w(n);
  for (int i = 0; i <= n; ++i) {
    // i ones form i(i-1)/2 pairs, each picking up exp(-i alpha).
    const double pairs = 0.5 * i * (i - 1);
    w.at(i, i, 0) = std::exp(Complex(0.0, -alpha * pairs));
  }
  return w;
}

EquivariantWeights uniform_unitary_weights(const CMatrix& u, int n) {
  if (u.rows() != 2 || u.cols() != 2) throw DimensionError("uniform_unitary_weights: u must be 2x2");
  EquivariantWeights w(n);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= i; ++j) {
      for (int k = 0; k <= n - i; ++k) {
        w.at(i, j, k) = int_power(u(0, 0), n - i - k) * int_power(u(0, 1), i - j) *
                        int_power(u(1, 0), k) * int_power(u(1, 1), j);
      }
    }
  }
  return w;
}

}  // namespace eqgc
