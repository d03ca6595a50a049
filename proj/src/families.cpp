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

#include "qd/families.hpp"

namespace qd {

namespace {

SubsystemLayout two_qubit_layout() {
  return SubsystemLayout({{"A", 2}, {"B", 2}});
}

Mat pauli(int i) {
  Mat s(2, 2);
  switch (i) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: s = Mat::Identity(2, 2);
  }
  return s;
}

Mat kron2(const Mat& a, const Mat& b) {
  Mat out(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block(i * 2, j * 2, 2, 2) = a(i, j) * b;
  return out;
}

double get_param(const std::map<std::string, double>& params, const std::string& key,
                 const char* family) {
  auto it = params.find(key);
  if (it == params.end()) {
    throw BadFamilyParam(std::string(family) + " requires parameter '" + key + "'");
  }
  return it->second;
}

}  // namespace

DensityOperator bell_phi_plus() {
  Vec psi(4);
  psi << 1 / std::sqrt(2.0), 0, 0, 1 / std::sqrt(2.0);
  return validate_state(psi * psi.adjoint(), two_qubit_layout());
}

DensityOperator werner(double p) {
  if (p < -1.0 / 3.0 - 1e-12 || p > 1.0 + 1e-12) {
    throw BadFamilyParam("werner parameter p out of [-1/3, 1]");
  }
  Vec singlet(4);
  singlet << 0, 1 / std::sqrt(2.0), -1 / std::sqrt(2.0), 0;
  Mat m = p * (singlet * singlet.adjoint()) + (1.0 - p) / 4.0 * Mat::Identity(4, 4);
  return validate_state(m, two_qubit_layout());
}

DensityOperator bell_diagonal(double c1, double c2, double c3) {
  Mat m = 0.25 * (Mat::Identity(4, 4) + c1 * kron2(pauli(1), pauli(1)) +
                  c2 * kron2(pauli(2), pauli(2)) + c3 * kron2(pauli(3), pauli(3)));
  Eigen::SelfAdjointEigenSolver<Mat> es(m, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol::validation) {
    throw BadFamilyParam("bell_diagonal correlation vector gives a non-PSD matrix");
  }
  return validate_state(m, two_qubit_layout());
}

DensityOperator isotropic(double p) {
  if (p < -1.0 / 3.0 - 1e-12 || p > 1.0 + 1e-12) {
    throw BadFamilyParam("isotropic parameter p out of [-1/3, 1]");
  }
  Vec phi(4);
  phi << 1 / std::sqrt(2.0), 0, 0, 1 / std::sqrt(2.0);
  Mat m = p * (phi * phi.adjoint()) + (1.0 - p) / 4.0 * Mat::Identity(4, 4);
  return validate_state(m, two_qubit_layout());
}

DensityOperator classical_quantum(uint64_t seed, int n_blocks) {
  if (n_blocks < 1 || n_blocks > 2) {
    throw BadFamilyParam("classical_quantum supports 1 or 2 blocks on a qubit B");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  std::vector<double> p(n_blocks, 1.0);
  if (n_blocks == 2) {
    p[0] = u(rng);
    p[1] = 1.0 - p[0];
  }
  Mat m = Mat::Zero(4, 4);
  for (int b = 0; b < n_blocks; ++b) {
    DensityOperator rho_b =
        random_density(derive_seed(seed, static_cast<uint64_t>(b + 1)),
                       SubsystemLayout({{"A", 2}}), 2);
    Mat proj = Mat::Zero(2, 2);
    proj(b, b) = 1.0;
    m += p[b] * kron2(rho_b.matrix, proj);
  }
  if (n_blocks == 1) {
    // single block: pure |0⟩⟨0| on B
    Mat proj = Mat::Zero(2, 2);
    proj(0, 0) = 1.0;
    DensityOperator rho0 = random_density(derive_seed(seed, 1),
                                          SubsystemLayout({{"A", 2}}), 2);
    m = kron2(rho0.matrix, proj);
  }
  return validate_state(m, two_qubit_layout());
}

DensityOperator random_bipartite(uint64_t seed, int dim_a, int dim_b, int rank) {
  return random_density(seed, SubsystemLayout({{"A", dim_a}, {"B", dim_b}}), rank);
}

DensityOperator make_family_state(const std::string& name,
                                  const std::map<std::string, double>& params,
                                  uint64_t seed) {
  if (name == "werner") return werner(get_param(params, "p", "werner"));
  if (name == "isotropic") return isotropic(get_param(params, "p", "isotropic"));
  if (name == "bell_diagonal") {
    return bell_diagonal(get_param(params, "c1", "bell_diagonal"),
                         get_param(params, "c2", "bell_diagonal"),
                         get_param(params, "c3", "bell_diagonal"));
  }
  if (name == "classical_quantum") {
    int n = params.count("n") ? static_cast<int>(params.at("n")) : 2;
    return classical_quantum(seed, n);
  }
  if (name == "random") {
    int rank = params.count("rank") ? static_cast<int>(params.at("rank")) : 4;
    return random_bipartite(seed, 2, 2, rank);
  }
  throw BadFamilyParam("unknown family '" + name + "'");
}

}  // namespace qd
