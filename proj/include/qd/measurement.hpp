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

#include <string>
#include <vector>

#include "qd/state.hpp"

namespace qd {

/// Measurement instrument in Kraus form: an ordered list of outcomes, each a
/// nonempty list of Kraus operators on a common system dimension. The Kraus
/// operators must satisfy completeness Σ K†K = I within tol::validation.
class KrausInstrument {
 public:
  KrausInstrument(int dim, std::vector<std::vector<Mat>> outcomes);

  int dim() const { return dim_; }
  int num_outcomes() const { return static_cast<int>(outcomes_.size()); }
  const std::vector<Mat>& kraus(int m) const { return outcomes_.at(m); }
  const Mat& povm_element(int m) const { return povm_.at(m); }

  bool rank1() const { return rank1_; }
  bool single_kraus() const { return single_kraus_; }
  /// single-Kraus ∧ rank-1: the multiplicity-free class with zero missing
  /// information, for which gain balances disturbance.
  bool good() const { return rank1_ && single_kraus_; }
  /// rank-1 projective: every POVM element is a rank-1 projector.
  bool projective() const { return projective_; }

  int max_kraus_count() const;
  int total_kraus_count() const;

 private:
  int dim_;
  std::vector<std::vector<Mat>> outcomes_;
  std::vector<Mat> povm_;
  bool rank1_ = false;
  bool single_kraus_ = false;
  bool projective_ = false;
};

/// Projective measurement onto the columns of a unitary. Throws NotUnitary.
KrausInstrument projective_from_unitary(const Mat& u);

/// Qubit projective measurement along the Bloch direction (theta, phi).
KrausInstrument qubit_projective(double theta, double phi);

/// n-outcome rank-1 POVM from the first `dim` rows of a Haar unitary of size
/// n; canonical single-Kraus realization K_m = √E_m. Throws BadOutcomeCount.
KrausInstrument random_rank1_povm(uint64_t seed, int dim, int n_outcomes);

struct MeasurementOutcome {
  double prob = 0.0;
  bool degenerate = false;     // prob below tol::degenerate_prob
  DensityOperator state;       // undefined when degenerate
};

/// Applies the instrument to the factor `measured_label`, returning outcome
/// probabilities and conditioned states on the full layout.
std::vector<MeasurementOutcome> apply_instrument(const DensityOperator& rho,
                                                 const std::string& measured_label,
                                                 const KrausInstrument& instrument);

enum class Scope { local, whole };

/// Post-measurement classical-quantum ensemble: outcome probabilities p(m)
/// and conditioned pure vectors on reference ⊗ original factors ⊗ apparatus.
/// The apparatus factor is padded to the maximum Kraus count across outcomes.
struct ConditionedEnsemble {
  SubsystemLayout layout;                  // [ref][original factors][apparatus]
  std::string ref_label;
  std::string apparatus_label;
  std::string measured_label;
  std::vector<std::string> spectator_labels;  // unmeasured original factors
  std::vector<double> probs;
  std::vector<Vec> vectors;                // empty() for degenerate outcomes
  std::vector<int> kraus_counts;

  /// Purifier of the scoped input: ref ∪ spectators (local) or ref (whole).
  std::vector<std::string> purifier(Scope scope) const;

  /// Marginal of outcome m on the given labels.
  Mat marginal(int m, const std::vector<std::string>& labels) const;
  /// Σ_m p(m) · marginal(m, labels).
  Mat average_marginal(const std::vector<std::string>& labels) const;
};

/// Builds the conditioned ensemble of a measurement on one factor: purifies
/// the state, applies each outcome's Kraus operators with an apparatus index
/// register, and normalizes. The dilation is realized implicitly through the
/// Kraus action; no explicit interaction unitary is formed.
ConditionedEnsemble conditioned_ensemble(const DensityOperator& rho,
                                         const std::string& measured_label,
                                         const KrausInstrument& instrument);

/// Explicit dilation isometry V = Σ_{m,k} K_{m,k} ⊗ |m,k⟩, used to verify the
/// implicit construction. V†V = I within tol::validation.
Mat build_dilation_isometry(const KrausInstrument& instrument);

/// Σ_m (I ⊗ Π_m) ρ (I ⊗ Π_m) for a rank-1 projective instrument; idempotent.
DensityOperator dephase(const DensityOperator& rho, const std::string& measured_label,
                        const KrausInstrument& instrument);

}  // namespace qd
