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

#include "qd/entropy.hpp"
#include "qd/measurement.hpp"

namespace qd {

// Measurement-induced correlation quantities for a fixed measurement on one
// factor of a bipartite state. Both scopes are evaluated on a single
// conditioned ensemble (one purification), so differences of local and whole
// quantities are taken on the same dilation.
//
// Scope::local treats the measured factor alone as the input (purifier is
// reference ∪ spectators); Scope::whole treats the bipartite state as the
// input (purifier is the reference alone).

/// Mutual information between the scope's purifier and the outcome register.
double information_gain(const ConditionedEnsemble& ens, Scope scope);

/// Input entropy minus coherent information surviving to the outputs.
/// Computed through both the entropic form and the purifier–apparatus mutual
/// information form; throws InternalIdentityViolation if they disagree beyond
/// tol::identity.
double disturbance(const ConditionedEnsemble& ens, Scope scope);

/// Conditional mutual information between the purifier and the apparatus
/// given the outcome; the information lost to inaccessible apparatus degrees
/// of freedom. Zero for single-Kraus instruments.
double missing_information(const ConditionedEnsemble& ens, Scope scope = Scope::local);

/// |gain + missing − disturbance| for the given scope.
double tradeoff_residual(const ConditionedEnsemble& ens, Scope scope);

/// δ(local) − δ(whole); cross-checked against its conditional-mutual-
/// information closed form within tol::identity.
double disturbance_gap(const ConditionedEnsemble& ens);
double disturbance_gap(const DensityOperator& rho, const std::string& measured_label,
                       const KrausInstrument& instrument);

/// ι(local) − ι(whole); cross-checked against its closed form.
double gain_gap(const ConditionedEnsemble& ens);
double gain_gap(const DensityOperator& rho, const std::string& measured_label,
                const KrausInstrument& instrument);

/// Σ p(m) S(ρ_m on the spectators) − [S(whole) − S(measured marginal)].
double conditional_entropy_gap(const ConditionedEnsemble& ens);
double conditional_entropy_gap(const DensityOperator& rho,
                               const std::string& measured_label,
                               const KrausInstrument& instrument);

/// D(ρ || dephased ρ) − D(measured marginal || its dephasing), rank-1
/// projective instruments only.
double relent_gap(const DensityOperator& rho, const std::string& measured_label,
                  const KrausInstrument& instrument);

/// Residuals of the two decoherence identities for projective measurements:
/// first, the whole-state relative entropy of dephasing equals S(X|ref);
/// second, S(X|ref) − S(X|ref∪spectators) equals the gain difference.
std::pair<double, double> coles_residuals(const DensityOperator& rho,
                                          const std::string& measured_label,
                                          const KrausInstrument& instrument);

/// All per-measurement quantities and identity residuals in one report.
struct BalanceReport {
  double gain_local = 0, gain_whole = 0;
  double dist_local = 0, dist_whole = 0;
  double missing_local = 0, missing_whole = 0;
  double cond_gap = 0;
  double disturbance_gap = 0, gain_gap = 0;
  std::map<std::string, double> identity_residuals;

  std::string to_json() const;
};

BalanceReport balance_report(const DensityOperator& rho,
                             const std::string& measured_label,
                             const KrausInstrument& instrument);

/// Entropy of the classical-quantum marginal of the ensemble on the given
/// labels, optionally including the outcome register: with_x gives
/// H(p) + Σ p(m) S(ρ_m), otherwise S(Σ p(m) ρ_m). Empty labels with with_x
/// give H(p). Computed blockwise; a full-matrix path exists in ensemble_state.
double cq_entropy(const ConditionedEnsemble& ens, std::vector<std::string> labels,
                  bool with_x, LogBase base = LogBase::two);

/// Full-matrix realization of the post-measurement state with the outcome
/// register as an explicit factor labeled "X". Verification path for the
/// blockwise entropies.
DensityOperator ensemble_state(const ConditionedEnsemble& ens,
                               const std::vector<std::string>& labels);

}  // namespace qd
