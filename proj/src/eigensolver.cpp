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

#include "ctmpem/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "ctmpem/error.hpp"
#include "ctmpem/random.hpp"

namespace ctmpem {

void apply_observable(const Observable &observable, std::span<const Complex> in, std::span<Complex> out) {
  const std::size_t dim = std::size_t{1} << observable.num_qubits();
  if (in.size() != dim || out.size() != dim) {
    throw ShapeError("vector length does not match the observable dimension");
  }
  std::fill(out.begin(), out.end(), Complex{0.0, 0.0});
  for (const PauliTerm &term : observable.terms()) {
    const Complex phase = term.coefficient * i_pow(term.y_count());
    for (std::size_t b = 0; b < dim; ++b) {
      out[b ^ term.x_mask] += phase * parity_sign(b, term.z_mask) * in[b];
    }
  }
}

namespace {

Complex dot(std::span<const Complex> a, std::span<const Complex> b) {
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += std::conj(a[i]) * b[i];
  }
  return s;
}

double norm(std::span<const Complex> a) { return std::sqrt(std::abs(dot(a, a))); }

}  // namespace

double exact_ground_energy(const Observable &observable) {
  const int n = observable.num_qubits();
  if (n > kMaxExactQubits) {
    throw SizeError("exact diagonalization limited to " + std::to_string(kMaxExactQubits) + " qubits, got " +
                    std::to_string(n));
  }
  if (!observable.is_hermitian()) {
    throw ValidityError("exact_ground_energy needs a Hermitian observable");
  }
  const std::size_t dim = std::size_t{1} << n;

  bool diagonal = true;
  for (const auto &t : observable.terms()) diagonal = diagonal && t.x_mask == 0;
  if (diagonal) {
    double best = std::numeric_limits<double>::infinity();
    for (Bits x = 0; x < dim; ++x) {
      double e = 0.0;
      for (const auto &t : observable.terms()) e += t.coefficient.real() * parity_sign(x, t.z_mask);
      best = std::min(best, e);
    }
    return best;
  }

  // Fixed start vector with generic overlap on every eigenvector.
  RandomStream rng(0x5EEDULL);
  std::vector<std::vector<Complex>> basis;
  std::vector<Complex> v(dim);
  for (auto &z : v) {
    z = Complex{rng.uniform() - 0.5, rng.uniform() - 0.5};
  }
  double nv = norm(v);
  for (auto &z : v) z /= nv;
  basis.push_back(v);

  std::vector<double> alpha;
  std::vector<double> beta;
  std::vector<Complex> w(dim);
  double estimate = 0.0;
  for (std::size_t m = 0; m < dim; ++m) {
    apply_observable(observable, basis[m], w);
    double a = dot(basis[m], w).real();
    alpha.push_back(a);
    // Full reorthogonalization, twice for stability.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto &q : basis) {
        Complex c = dot(q, w);
        for (std::size_t i = 0; i < dim; ++i) w[i] -= c * q[i];
      }
    }
    double b = norm(w);

    const Eigen::Index k = static_cast<Eigen::Index>(alpha.size());
    Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), k);
    Eigen::VectorXd sub(std::max<Eigen::Index>(k - 1, 0));
    for (Eigen::Index i = 0; i + 1 < k; ++i) sub[i] = beta[static_cast<std::size_t>(i)];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
    tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    estimate = tri.eigenvalues()[0];
    double residual = std::abs(b * tri.eigenvectors()(k - 1, 0));
    if (b < 1e-12 || residual < 1e-11 || m + 1 == dim) {
      break;
    }
    beta.push_back(b);
    for (auto &z : w) z /= b;
    basis.push_back(w);
  }
  return estimate;
}

}  // namespace ctmpem
