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

#include <doctest.h>

#include "qd/families.hpp"
#include "qd/optimizer.hpp"

using namespace qd;

namespace {

Mat kron2(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

OptimizerConfig fast_config() {
  OptimizerConfig cfg;
  cfg.grid_theta = 12;
  cfg.grid_phi = 24;
  cfg.restarts = 2;
  cfg.seed = 1;
  return cfg;
}

}  // namespace

TEST_CASE("discord of the Bell state is one bit in every expression") {
  auto cfg = fast_config();
  for (auto expr : {Expression::cond_entropy, Expression::disturbance_gap,
                    Expression::gain_gap, Expression::relent_gap}) {
    auto r = discord(bell_phi_plus(), "B", cfg, expr);
    CHECK(std::abs(r.value - 1.0) < 1e-6);
  }
  auto all = discord_all_expressions(bell_phi_plus(), "B", cfg);
  CHECK(std::abs(all.value - 1.0) < 1e-6);
  CHECK(all.residual_spread < kExpressionSpreadTol);
  CHECK(all.per_expression.size() == 4);
}

TEST_CASE("zero-discord states") {
  auto cfg = fast_config();
  auto prod = tensor(random_density(1, SubsystemLayout({{"A", 2}}), 2),
                     random_density(2, SubsystemLayout({{"B", 2}}), 2));
  CHECK(discord(prod, "B", cfg, Expression::cond_entropy).value < 1e-6);

  auto cq = classical_quantum(3, 2);
  CHECK(discord(cq, "B", cfg, Expression::cond_entropy).value < 1e-6);
  CHECK(discord_all_expressions(cq, "B", cfg).value < 1e-6);
}

TEST_CASE("optimizer matches the exhaustive oracle") {
  auto cfg = fast_config();
  for (const auto& rho : {werner(0.5), bell_diagonal(0.3, 0.2, 0.1)}) {
    const double opt = discord(rho, "B", cfg, Expression::cond_entropy).value;
    const double oracle = brute_force_oracle(rho, "B", 64);
    CHECK(std::abs(opt - oracle) < 1e-4);
    // refinement can only improve on a shared-resolution grid scan
    CHECK(opt <= brute_force_oracle(rho, "B", 24) + 1e-9);
  }
}

TEST_CASE("oracle on the Bell state") {
  CHECK(std::abs(brute_force_oracle(bell_phi_plus(), "B", 64) - 1.0) < 1e-9);
}

TEST_CASE("serial and parallel oracle kernels agree exactly") {
  for (const auto& rho :
       {werner(0.7), bell_diagonal(0.4, -0.2, 0.1), random_bipartite(8, 2, 2, 3)}) {
    CHECK(brute_force_oracle(rho, "B", 48) ==
          brute_force_oracle_serial(rho, "B", 48));
  }
}

TEST_CASE("Werner discord is monotone in the mixing parameter") {
  auto cfg = fast_config();
  double prev = -1e-9;
  for (int i = 0; i <= 10; ++i) {
    const double p = i / 10.0;
    const double v = discord(werner(p), "B", cfg, Expression::cond_entropy).value;
    CHECK(v >= prev - 1e-6);
    prev = v;
  }
  CHECK(std::abs(prev - 1.0) < 1e-6);  // p = 1 is the singlet
}

TEST_CASE("discord is invariant under local unitaries") {
  auto cfg = fast_config();
  auto rho = bell_diagonal(0.5, 0.3, -0.2);
  const double base = discord(rho, "B", cfg, Expression::cond_entropy).value;

  Mat u = kron2(random_unitary(4, 2), random_unitary(5, 2));
  auto rotated = validate_state(u * rho.matrix * u.adjoint(), rho.layout);
  const double after = discord(rotated, "B", cfg, Expression::cond_entropy).value;
  CHECK(std::abs(base - after) < 1e-6);
}

TEST_CASE("general projective parametrization agrees with the qubit grid") {
  auto cfg = fast_config();
  cfg.restarts = 4;
  for (const auto& rho : {werner(0.6), bell_diagonal(0.3, 0.2, 0.1)}) {
    const double qubit = discord(rho, "B", cfg, Expression::cond_entropy).value;
    auto gcfg = cfg;
    gcfg.family = MeasurementFamily::projective_general;
    const double general =
        discord(rho, "B", gcfg, Expression::cond_entropy).value;
    CHECK(std::abs(qubit - general) < 1e-6);
  }
}

TEST_CASE("rank-1 POVM family") {
  auto cfg = fast_config();
  cfg.family = MeasurementFamily::rank1_povm_n;
  cfg.povm_outcomes = 3;
  auto rho = werner(0.6);
  auto r1 = discord(rho, "B", cfg, Expression::cond_entropy);
  auto r2 = discord(rho, "B", cfg, Expression::cond_entropy);
  CHECK(r1.value >= -1e-6);
  CHECK(r1.value == r2.value);  // seeded, deterministic
  CHECK_THROWS_AS(discord(rho, "B", cfg, Expression::relent_gap), NotProjective);
}

TEST_CASE("unsupported measured dimension") {
  auto rho = random_density(6, SubsystemLayout({{"A", 2}, {"B", 3}}), 2);
  CHECK_THROWS_AS(discord(rho, "B", fast_config(), Expression::cond_entropy),
                  UnsupportedDim);
}

TEST_CASE("non-convergence is reported") {
  auto cfg = fast_config();
  cfg.refine_iters = 1;
  cfg.refine_tol = 1e-15;
  auto r = discord(bell_diagonal(0.31, 0.17, 0.05), "B", cfg,
                   Expression::cond_entropy);
  CHECK_FALSE(r.converged);
}

TEST_CASE("result serialization") {
  auto r = discord(werner(0.7), "B", fast_config(), Expression::cond_entropy);
  const std::string json = r.to_json();
  CHECK(json.find("\"value\"") != std::string::npos);
  CHECK(json.find("\"argmin\"") != std::string::npos);
  CHECK(json.find("\"converged\"") != std::string::npos);
}
