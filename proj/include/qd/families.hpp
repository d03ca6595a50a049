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

#include <map>
#include <string>

#include "qd/state.hpp"

namespace qd {

// Two-qubit test-state families on labels A, B (A is the unmeasured side).

DensityOperator bell_phi_plus();

/// p |Ψ−⟩⟨Ψ−| + (1−p) I/4; valid for p ∈ [−1/3, 1].
DensityOperator werner(double p);

/// ¼ (I⊗I + Σ cᵢ σᵢ⊗σᵢ); throws BadFamilyParam when not PSD.
DensityOperator bell_diagonal(double c1, double c2, double c3);

/// p |Φ+⟩⟨Φ+| + (1−p) I/4; valid for p ∈ [−1/3, 1].
DensityOperator isotropic(double p);

/// Σ_b p_b ρ_b^A ⊗ |b⟩⟨b|^B with seeded random weights and qubit states ρ_b;
/// zero discord under measurement of B.
DensityOperator classical_quantum(uint64_t seed, int n_blocks);

/// Seeded random state on A⊗B with the given B-side rank structure.
DensityOperator random_bipartite(uint64_t seed, int dim_a, int dim_b, int rank);

/// Builds a family state from CLI-style parameters. Known names: werner,
/// bell_diagonal, isotropic, classical_quantum, random. Throws BadFamilyParam.
DensityOperator make_family_state(const std::string& name,
                                  const std::map<std::string, double>& params,
                                  uint64_t seed);

}  // namespace qd
