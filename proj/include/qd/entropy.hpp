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

#include <limits>
#include <vector>

#include "qd/state.hpp"

namespace qd {

/// All entropic quantities are in bits (log base 2); LogBase::e switches a
/// computation to nats, used only to check base-consistency of identities.
enum class LogBase { two, e };

inline double log_b(double x, LogBase base) {
  return base == LogBase::two ? std::log2(x) : std::log(x);
}

/// −Σ λ log λ over the eigenvalues of a Hermitian PSD matrix; eigenvalues
/// below tol::rank_cutoff are treated as exactly zero.
double entropy_of_matrix(const Mat& m, LogBase base = LogBase::two);

double entropy(const DensityOperator& rho, LogBase base = LogBase::two);

/// Shannon entropy of a probability vector (entries below cutoff ignored).
double shannon(const std::vector<double>& p, LogBase base = LogBase::two);

/// S(target ∪ given) − S(given).
double conditional_entropy(const DensityOperator& rho,
                           const std::vector<std::string>& target,
                           const std::vector<std::string>& given,
                           LogBase base = LogBase::two);

/// S(part1) + S(part2) − S(part1 ∪ part2).
double mutual_information(const DensityOperator& rho,
                          const std::vector<std::string>& part1,
                          const std::vector<std::string>& part2,
                          LogBase base = LogBase::two);

/// S(1∪g) + S(2∪g) − S(g) − S(1∪2∪g); nonnegative by strong subadditivity.
double conditional_mutual_information(const DensityOperator& rho,
                                      const std::vector<std::string>& part1,
                                      const std::vector<std::string>& part2,
                                      const std::vector<std::string>& given,
                                      LogBase base = LogBase::two);

/// S(to) − S(from ∪ to).
double coherent_information(const DensityOperator& rho,
                            const std::vector<std::string>& from,
                            const std::vector<std::string>& to,
                            LogBase base = LogBase::two);

/// tr(ρ log ρ) − tr(ρ log σ), evaluated in the eigenbasis of σ. Returns
/// +infinity when ρ has weight above tol::validation outside σ's support.
double relative_entropy(const DensityOperator& rho, const DensityOperator& sigma,
                        LogBase base = LogBase::two);

inline constexpr double kInfiniteRelEnt = std::numeric_limits<double>::infinity();

}  // namespace qd
