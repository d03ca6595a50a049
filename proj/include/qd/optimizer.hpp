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

#include "qd/correlation.hpp"

namespace qd {

enum class Expression { cond_entropy, disturbance_gap, gain_gap, relent_gap };

enum class MeasurementFamily { projective_qubit, projective_general, rank1_povm_n };

std::string to_string(Expression e);

struct OptimizerConfig {
  int grid_theta = 24;
  int grid_phi = 48;
  int refine_iters = 400;
  double refine_tol = 1e-10;  // bits
  int restarts = 6;
  uint64_t seed = 0;
  MeasurementFamily family = MeasurementFamily::projective_qubit;
  int povm_outcomes = 3;  // rank1_povm_n only
};

struct DiscordResult {
  double value = 0.0;
  std::vector<double> argmin;  // (theta, phi) or generator parameters
  std::map<std::string, double> per_expression;
  double residual_spread = 0.0;
  int iterations = 0;
  bool converged = true;

  std::string to_json() const;
};

/// Evaluates one discord expression at a fixed measurement.
double expression_value(const DensityOperator& rho, const std::string& measured_label,
                        const KrausInstrument& instrument, Expression expr);

/// Minimizes the chosen gap over the configured measurement family: coarse
/// grid (qubit) or seeded random restarts (general), then derivative-free
/// simplex refinement. Throws UnsupportedDim for projective_qubit on a
/// measured factor of dimension ≠ 2.
DiscordResult discord(const DensityOperator& rho, const std::string& measured_label,
                      const OptimizerConfig& config, Expression expr);

/// Minimizes the conditional-entropy gap, then evaluates all four projective
/// expressions at the argmin. Throws ExpressionDisagreement if the spread
/// exceeds 1e-6 bits.
DiscordResult discord_all_expressions(const DensityOperator& rho,
                                      const std::string& measured_label,
                                      const OptimizerConfig& config);

inline constexpr double kExpressionSpreadTol = 1e-6;

/// Exhaustive minimum of the conditional-entropy gap over a uniform
/// (resolution × 2·resolution) grid on θ∈[0,π], φ∈[0,2π). Independent of the
/// refinement path: evaluates the gap directly from projector conjugation,
/// sharing only the state algebra. Parallel when built with OpenMP.
double brute_force_oracle(const DensityOperator& rho, const std::string& measured_label,
                          int resolution);

/// Serial reference kernel for the oracle grid; kept for testing and as the
/// benchmark baseline.
double brute_force_oracle_serial(const DensityOperator& rho,
                                 const std::string& measured_label, int resolution);

}  // namespace qd
