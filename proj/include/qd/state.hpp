// Copyright 2026 The qdiscord Authors
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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qd/layout.hpp"

namespace qd {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Numerical tolerances shared across the library.
namespace tol {
inline constexpr double validation = 1e-10;   // hermiticity / trace / PSD
inline constexpr double rank_cutoff = 1e-12;  // eigenvalue support cutoff
inline constexpr double identity = 1e-9;      // entropic identity residuals
inline constexpr double degenerate_prob = 1e-14;
}  // namespace tol

/// Validated density operator: Hermitian, unit trace, PSD within tol::validation.
struct DensityOperator {
  SubsystemLayout layout;
  Mat matrix;

  int dim() const { return layout.total_dim(); }
};

struct PureStateVector {
  SubsystemLayout layout;
  Vec vector;

  int dim() const { return layout.total_dim(); }
  DensityOperator to_density() const;
};

/// Checks hermiticity, trace and positivity; eigenvalues within tolerance of
/// [0,1] are accepted as-is (no mutation of the matrix).
/// Throws DimensionMismatch, NotHermitian, TraceNotOne, NotPositive.
DensityOperator validate_state(const Mat& candidate, const SubsystemLayout& layout);

/// Kronecker product with concatenated layout. Throws LabelCollision.
DensityOperator tensor(const DensityOperator& a, const DensityOperator& b);

/// Reduced state on the kept factors, in original relative order.
DensityOperator partial_trace(const DensityOperator& rho,
                              const std::vector<std::string>& keep);

/// Core partial-trace kernels (layout-aware, no validation).
Mat partial_trace_matrix(const Mat& m, const SubsystemLayout& layout,
                         const std::vector<std::string>& keep);
Mat partial_trace_vector(const Vec& psi, const SubsystemLayout& layout,
                         const std::vector<std::string>& keep);

/// Purification on ref_label ⊗ original layout. The reference dimension is
/// rank(rho) with eigenvalues below tol::rank_cutoff dropped; Schmidt
/// coefficients are sqrt of the eigenvalues in descending order.
PureStateVector purify(const DensityOperator& rho, const std::string& ref_label);

/// Ginibre state G G† / tr(G G†) with G of shape dim×rank; deterministic per seed.
DensityOperator random_density(uint64_t seed, const SubsystemLayout& layout, int rank);
DensityOperator random_density(uint64_t seed, int dim, int rank);

/// Haar-distributed unitary: QR of a Ginibre matrix with phase-fixed diagonal.
Mat random_unitary(uint64_t seed, int dim);

/// Ginibre matrix of iid standard complex normals drawn from rng.
Mat ginibre(std::mt19937_64& rng, int rows, int cols);

/// Operator on one factor embedded into the full space (identity elsewhere).
Mat embed(const Mat& op, const SubsystemLayout& layout, const std::string& label);

/// Deterministic per-trial seed derivation (splitmix64 over seed and index).
uint64_t derive_seed(uint64_t seed, uint64_t index);

}  // namespace qd
