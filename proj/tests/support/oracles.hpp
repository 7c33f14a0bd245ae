// Copyright 2026 The ctmpem Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense reference implementations used only by the tests. They avoid the
// library's own kernels so that agreement means something.

#ifndef CTMPEM_TESTS_ORACLES_HPP
#define CTMPEM_TESTS_ORACLES_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <string>
#include <unsupported/Eigen/MatrixFunctions>
#include <vector>

#include "ctmpem/counts.hpp"
#include "ctmpem/ctmp_model.hpp"
#include "ctmpem/pauli.hpp"
#include "ctmpem/random.hpp"

namespace ctmpem::oracle {

inline Eigen::Matrix2cd pauli_matrix(char c) {
  using C = std::complex<double>;
  Eigen::Matrix2cd m;
  switch (c) {
    case 'X':
      m << 0, 1, 1, 0;
      break;
    case 'Y':
      m << 0, C(0, -1), C(0, 1), 0;
      break;
    case 'Z':
      m << 1, 0, 0, -1;
      break;
    default:
      m << 1, 0, 0, 1;
  }
  return m;
}

/// Kronecker product of single-qubit matrices read off the label.
/// Qubit 0 is the least significant index bit.
inline Eigen::MatrixXcd dense_pauli(const std::string &label) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (char c : label) {
    Eigen::Matrix2cd p = pauli_matrix(c);
    Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
    for (int r = 0; r < m.rows(); ++r)
      for (int s = 0; s < m.cols(); ++s) next.block(2 * r, 2 * s, 2, 2) = m(r, s) * p;
    m = next;
  }
  return m;
}

inline Eigen::MatrixXcd dense_observable(const Observable &o) {
  const int dim = 1 << o.num_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto &t : o.terms()) m += t.coefficient * dense_pauli(pauli_label(t));
  return m;
}

/// Generator built straight from the transition definitions, one basis state
/// at a time. Column = source, row = target.
inline Eigen::MatrixXd dense_generator_reference(const CtmpModel &model) {
  const int n = model.num_qubits();
  const int dim = 1 << n;
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(dim, dim);
  for (const auto &t : model.terms()) {
    for (int x = 0; x < dim; ++x) {
      auto bitq = [&](int q) { return (x >> q) & 1; };
      int y = -1;
      const int a = t.qubits[0];
      const int b = t.qubits[1];
      switch (t.kind) {
        case GeneratorKind::single_excite:
          if (!bitq(a)) y = x | (1 << a);
          break;
        case GeneratorKind::single_decay:
          if (bitq(a)) y = x & ~(1 << a);
          break;
        case GeneratorKind::pair_excite:
          if (!bitq(a) && !bitq(b)) y = x | (1 << a) | (1 << b);
          break;
        case GeneratorKind::pair_decay:
          if (bitq(a) && bitq(b)) y = x & ~(1 << a) & ~(1 << b);
          break;
        case GeneratorKind::exchange_01_10:
          if (!bitq(a) && bitq(b)) y = (x | (1 << a)) & ~(1 << b);
          break;
        case GeneratorKind::exchange_10_01:
          if (bitq(a) && !bitq(b)) y = (x & ~(1 << a)) | (1 << b);
          break;
      }
      if (y >= 0) {
        g(y, x) += t.rate;
        g(x, x) -= t.rate;
      }
    }
  }
  return g;
}

inline Eigen::MatrixXd dense_assignment(const CtmpModel &model) {
  Eigen::MatrixXd g = dense_generator_reference(model);
  return g.exp();
}

/// Every single and pair term with rates uniform in [lo, hi).
inline CtmpModel random_full_model(int n, double lo, double hi, RandomStream &rng) {
  std::vector<GeneratorTerm> terms;
  for (int q = 0; q < n; ++q) {
    terms.push_back(GeneratorTerm::single(GeneratorKind::single_excite, q, lo + (hi - lo) * rng.uniform()));
    terms.push_back(GeneratorTerm::single(GeneratorKind::single_decay, q, lo + (hi - lo) * rng.uniform()));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (auto kind : {GeneratorKind::pair_excite, GeneratorKind::pair_decay, GeneratorKind::exchange_01_10,
                        GeneratorKind::exchange_10_01}) {
        terms.push_back(GeneratorTerm::pair(kind, i, j, lo + (hi - lo) * rng.uniform()));
      }
    }
  }
  return CtmpModel(n, std::move(terms));
}

inline Eigen::VectorXd empirical_distribution(const CountsMap &counts) {
  Eigen::VectorXd p = Eigen::VectorXd::Zero(1 << counts.num_qubits());
  for (auto [x, c] : counts.entries()) p(static_cast<Eigen::Index>(x)) = static_cast<double>(c);
  return p / static_cast<double>(counts.total());
}

inline double total_variation(const Eigen::VectorXd &p, const Eigen::VectorXd &q) {
  return 0.5 * (p - q).cwiseAbs().sum();
}

/// Diagonal of sum_t w_t Z^{mask_t}.
inline Eigen::VectorXd diagonal_values(int n, const std::vector<std::pair<Bits, double>> &terms) {
  Eigen::VectorXd d = Eigen::VectorXd::Zero(1 << n);
  for (int x = 0; x < (1 << n); ++x) {
    for (auto [mask, w] : terms) {
      int ones = 0;
      for (int q = 0; q < n; ++q) ones += ((mask >> q) & 1) && ((x >> q) & 1);
      d(x) += (ones % 2 ? -w : w);
    }
  }
  return d;
}

}  // namespace ctmpem::oracle

#endif  // CTMPEM_TESTS_ORACLES_HPP
