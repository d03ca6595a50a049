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

#include "qd/entropy.hpp"

#include <algorithm>

namespace qd {

namespace {

void check_disjoint(const std::vector<std::string>& a,
                    const std::vector<std::string>& b) {
  for (const auto& x : a) {
    if (std::find(b.begin(), b.end(), x) != b.end()) {
      throw LabelOverlap("label '" + x + "' appears on both sides");
    }
  }
}

std::vector<std::string> join(const std::vector<std::string>& a,
                              const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

double marginal_entropy(const DensityOperator& rho,
                        const std::vector<std::string>& labels, LogBase base) {
  return entropy_of_matrix(partial_trace_matrix(rho.matrix, rho.layout, labels),
                           base);
}

}  // namespace

double entropy_of_matrix(const Mat& m, LogBase base) {
  Eigen::SelfAdjointEigenSolver<Mat> es(m, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    const double lam = es.eigenvalues()(i);
    if (lam > tol::rank_cutoff) s -= lam * log_b(lam, base);
  }
  return s;
}

double entropy(const DensityOperator& rho, LogBase base) {
  return entropy_of_matrix(rho.matrix, base);
}

double shannon(const std::vector<double>& p, LogBase base) {
  double s = 0.0;
  for (double x : p) {
    if (x > tol::rank_cutoff) s -= x * log_b(x, base);
  }
  return s;
}

double conditional_entropy(const DensityOperator& rho,
                           const std::vector<std::string>& target,
                           const std::vector<std::string>& given, LogBase base) {
  check_disjoint(target, given);
  return marginal_entropy(rho, join(target, given), base) -
         marginal_entropy(rho, given, base);
}

double mutual_information(const DensityOperator& rho,
                          const std::vector<std::string>& part1,
                          const std::vector<std::string>& part2, LogBase base) {
  check_disjoint(part1, part2);
  return marginal_entropy(rho, part1, base) + marginal_entropy(rho, part2, base) -
         marginal_entropy(rho, join(part1, part2), base);
}

double conditional_mutual_information(const DensityOperator& rho,
                                      const std::vector<std::string>& part1,
                                      const std::vector<std::string>& part2,
                                      const std::vector<std::string>& given,
                                      LogBase base) {
  check_disjoint(part1, part2);
  check_disjoint(part1, given);
  check_disjoint(part2, given);
  double s = marginal_entropy(rho, join(part1, given), base) +
             marginal_entropy(rho, join(part2, given), base) -
             marginal_entropy(rho, join(join(part1, part2), given), base);
  if (given.empty()) return s;
  return s - marginal_entropy(rho, given, base);
}

double coherent_information(const DensityOperator& rho,
                            const std::vector<std::string>& from,
                            const std::vector<std::string>& to, LogBase base) {
  check_disjoint(from, to);
  return marginal_entropy(rho, to, base) -
         marginal_entropy(rho, join(from, to), base);
}

double relative_entropy(const DensityOperator& rho, const DensityOperator& sigma,
                        LogBase base) {
  if (!(rho.layout == sigma.layout)) {
    throw DimensionMismatch("relative entropy requires identical layouts");
  }
  Eigen::SelfAdjointEigenSolver<Mat> es_sigma(sigma.matrix);
  double cross = 0.0;  // tr(ρ log σ) over σ's support
  for (int i = 0; i < es_sigma.eigenvalues().size(); ++i) {
    const double s = es_sigma.eigenvalues()(i);
    const Vec v = es_sigma.eigenvectors().col(i);
    const double w = std::real((v.adjoint() * rho.matrix * v)(0, 0));
    if (s < tol::rank_cutoff) {
      if (w > tol::validation) return kInfiniteRelEnt;
    } else {
      cross += w * log_b(s, base);
    }
  }
  return -entropy(rho, base) - cross;
}

}  // namespace qd
