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

#ifndef CTMPEM_CALIBRATION_HPP
#define CTMPEM_CALIBRATION_HPP

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ctmpem/counts.hpp"
#include "ctmpem/ctmp_model.hpp"
#include "ctmpem/random.hpp"

namespace ctmpem {

/// Every n-bit string of Hamming weight <= 2, ascending (which is also the
/// lexicographic order of the qubit-0-rightmost strings).
/// Size (n^2 + n + 2) / 2.
std::vector<Bits> calibration_state_labels(int num_qubits);

/// All-zeros, all-ones and each single-excitation state: min(n + 2, 2^n)
/// labels that still expose every 1- and 2-qubit pattern. Ascending order.
std::vector<Bits> minimal_calibration_labels(int num_qubits);

struct CalibrationRecord {
  Bits label = 0;
  CountsMap counts;
};

struct CalibrationSet {
  int num_qubits = 0;
  std::uint64_t shots = 0;
  std::vector<CalibrationRecord> records;

  /// Throws ValidityError for duplicate labels, width mismatches, or a record
  /// with more than `shots` counts.
  void validate() const;
};

/// Prepares each label, measures `shots` times and applies readout noise.
/// A basis state is measured as its own label, so only the noise is random.
CalibrationSet simulate_calibration(const CtmpModel &model, std::span<const Bits> labels,
                                    std::uint64_t shots, RandomStream &rng);

/// Pooled 4x4 assignment matrix for qubits (i, j). Index of a two-bit pattern
/// is bit_i + 2 * bit_j; entry (out, in). Throws IncompleteCalibrationError if
/// some input pattern never appears among the labels.
Eigen::Matrix4d pair_assignment_matrix(const CalibrationSet &cal, int i, int j);

/// Principal logarithm through an eigendecomposition; the imaginary residue
/// is discarded. Throws FitError if an eigenvalue has modulus < 1e-8 or a
/// negative real part.
Eigen::MatrixXd principal_log(const Eigen::MatrixXd &matrix);

struct FitOptions {
  /// Remove, from each single-qubit estimate, the share of the marginal flip
  /// rate explained by fitted pair terms with qubits outside the pair.
  bool subtract_cross_pair = true;
};

struct PairDiagnostics {
  int i = 0;
  int j = 0;
  double min_eigenvalue_modulus = 0.0;
  /// 2-norm condition number of the eigenvector matrix.
  double eigenvector_condition = 0.0;
  /// Sum of negative off-diagonal log entries clipped to zero.
  double clipped_mass = 0.0;
};

struct FitReport {
  std::vector<PairDiagnostics> pairs;
};

/// Fits generator rates from a complete calibration set. Throws FitError
/// (naming the pair) when a pair matrix has no principal logarithm.
CtmpModel fit_ctmp(const CalibrationSet &cal, const FitOptions &options = {}, FitReport *report = nullptr);

}  // namespace ctmpem

#endif  // CTMPEM_CALIBRATION_HPP
