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

#include <cstdint>
#include <string>
#include <vector>

#include "qd/correlation.hpp"

namespace qd {

struct IdentityCheck {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass() const { return max_residual <= tolerance; }
};

struct VerificationReport {
  std::string suite;
  int trials = 0;
  uint64_t seed = 0;
  std::vector<IdentityCheck> checks;

  bool passed() const;
  std::string to_json() const;
};

/// Randomized trial inputs: a seeded two-qubit state and an instrument on B.
/// The instrument kind cycles with the trial index through projective,
/// 3-outcome rank-1 POVM, multi-Kraus rank-1 realization and general
/// multi-Kraus (non-rank-1).
struct TrialCase {
  DensityOperator state;
  KrausInstrument instrument;
  std::string kind;
};

TrialCase make_trial_case(uint64_t seed, int index);

/// Multi-Kraus realization of a rank-1 POVM: each canonical Kraus operator is
/// split across `pieces` branches by a random unit vector, leaving the POVM
/// unchanged while making the instrument multiplicity-carrying.
KrausInstrument multi_kraus_realization(const KrausInstrument& rank1_instr,
                                        uint64_t seed, int pieces);

/// General instrument with `n_outcomes` outcomes of `kraus_each` Kraus
/// operators built from a Haar isometry; POVM elements are generically full
/// rank.
KrausInstrument random_general_instrument(uint64_t seed, int dim, int n_outcomes,
                                          int kraus_each);

/// Suites: tradeoff, gaps, rank1, good, projective_chain, all.
VerificationReport run_suite(const std::string& suite, int trials, uint64_t seed);

std::vector<std::string> suite_names();

}  // namespace qd
