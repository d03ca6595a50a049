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

#include "qd/entropy.hpp"
#include "qd/families.hpp"
#include "qd/state.hpp"

using namespace qd;

namespace {
SubsystemLayout qubit(const std::string& l) { return SubsystemLayout({{l, 2}}); }
}  // namespace

TEST_CASE("validate_state accepts the maximally mixed qubit") {
  auto rho = validate_state(0.5 * Mat::Identity(2, 2), qubit("B"));
  Eigen::SelfAdjointEigenSolver<Mat> es(rho.matrix, Eigen::EigenvaluesOnly);
  CHECK(es.eigenvalues()(0) == doctest::Approx(0.5));
  CHECK(es.eigenvalues()(1) == doctest::Approx(0.5));
}

TEST_CASE("validate_state rejects bad matrices") {
  CHECK_THROWS_AS(validate_state(Mat::Identity(2, 2), qubit("B")), TraceNotOne);
  Mat neg(2, 2);
  neg << 1.5, 0, 0, -0.5;
  CHECK_THROWS_AS(validate_state(neg, qubit("B")), NotPositive);
  Mat nonherm(2, 2);
  nonherm << 0.5, 0.1, 0.3, 0.5;
  CHECK_THROWS_AS(validate_state(nonherm, qubit("B")), NotHermitian);
  CHECK_THROWS_AS(validate_state(Mat::Identity(3, 3) / 3.0, qubit("B")),
                  DimensionMismatch);
}

TEST_CASE("tensor products") {
  Mat p0 = Mat::Zero(2, 2), p1 = Mat::Zero(2, 2);
  p0(0, 0) = 1;
  p1(1, 1) = 1;
  auto a = validate_state(p0, qubit("A"));
  auto b = validate_state(p1, qubit("B"));
  auto ab = tensor(a, b);
  CHECK(ab.dim() == 4);
  CHECK(ab.matrix(1, 1).real() == doctest::Approx(1.0));
  CHECK(ab.matrix.cwiseAbs().sum() == doctest::Approx(1.0));

  auto mixed = validate_state(0.5 * Mat::Identity(2, 2), qubit("A"));
  auto mixed2 = validate_state(0.5 * Mat::Identity(2, 2), qubit("B"));
  CHECK((tensor(mixed, mixed2).matrix - 0.25 * Mat::Identity(4, 4)).cwiseAbs().maxCoeff() <
        1e-14);

  auto collide = validate_state(0.5 * Mat::Identity(2, 2), qubit("B"));
  CHECK_THROWS_AS(tensor(b, collide), LabelCollision);
}

TEST_CASE("partial trace of the Bell state is maximally mixed") {
  auto bell = bell_phi_plus();
  auto red = partial_trace(bell, {"B"});
  CHECK((red.matrix - 0.5 * Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("partial trace of a product state recovers the factor") {
  auto a = random_density(11, qubit("A"), 2);
  auto b = random_density(12, qubit("B"), 2);
  auto ab = tensor(a, b);
  CHECK((partial_trace(ab, {"A"}).matrix - a.matrix).cwiseAbs().maxCoeff() < 1e-12);
  CHECK_THROWS_AS(partial_trace(ab, {"C"}), UnknownLabel);
  CHECK_THROWS_AS(partial_trace(ab, {}), EmptyKeepSet);
}

TEST_CASE("purify/partial_trace roundtrip for random two-qubit states") {
  for (uint64_t s = 0; s < 50; ++s) {
    auto rho = random_bipartite(s, 2, 2, 1 + static_cast<int>(s % 4));
    auto psi = purify(rho, "R");
    Mat back = partial_trace_vector(psi.vector, psi.layout, {"A", "B"});
    CHECK((back - rho.matrix).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("purification properties") {
  auto mixed = validate_state(0.5 * Mat::Identity(2, 2), qubit("B"));
  auto psi = purify(mixed, "R");
  CHECK(psi.layout.dim_of("R") == 2);
  CHECK(std::abs(psi.vector.norm() - 1.0) < 1e-12);

  Mat p0 = Mat::Zero(2, 2);
  p0(0, 0) = 1;
  auto pure = validate_state(p0, qubit("B"));
  auto psi_pure = purify(pure, "R");
  CHECK(psi_pure.layout.dim_of("R") == 1);  // rank-1 input, trivial reference
  CHECK(std::abs(psi_pure.vector(0)) == doctest::Approx(1.0));

  Mat d(2, 2);
  d << 0.9, 0, 0, 0.1;
  auto psi_d = purify(validate_state(d, qubit("B")), "R");
  // Schmidt coefficients sqrt(0.9), sqrt(0.1) descending
  Eigen::SelfAdjointEigenSolver<Mat> es(
      partial_trace_vector(psi_d.vector, psi_d.layout, {"R"}));
  CHECK(es.eigenvalues()(1) == doctest::Approx(0.9));
  CHECK(es.eigenvalues()(0) == doctest::Approx(0.1));

  CHECK_THROWS_AS(purify(mixed, "B"), LabelCollision);
}

TEST_CASE("random_density is deterministic and valid") {
  auto a = random_density(42, 4, 4);
  auto b = random_density(42, 4, 4);
  CHECK((a.matrix - b.matrix).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(random_density(1, 4, 5), BadRank);
  CHECK_THROWS_AS(random_density(1, 4, 0), BadRank);

  auto pure = random_density(7, 4, 1);
  CHECK(entropy(pure) < 1e-9);
}

TEST_CASE("random_unitary is Haar-style unitary") {
  for (int dim : {1, 2, 3, 5}) {
    Mat u = random_unitary(99, dim);
    CHECK((u.adjoint() * u - Mat::Identity(dim, dim)).cwiseAbs().maxCoeff() < 1e-12);
  }
  // completeness of the column projectors
  Mat u = random_unitary(3, 3);
  Mat sum = Mat::Zero(3, 3);
  for (int i = 0; i < 3; ++i) sum += u.col(i) * u.col(i).adjoint();
  CHECK((sum - Mat::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("partial trace order independence") {
  SubsystemLayout layout({{"A", 2}, {"B", 2}, {"Q", 3}});
  auto rho = random_density(5, layout, 6);
  auto via_b = partial_trace(partial_trace(rho, {"A", "Q"}), {"A"});
  auto via_q = partial_trace(partial_trace(rho, {"A", "B"}), {"A"});
  CHECK((via_b.matrix - via_q.matrix).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((via_b.matrix - partial_trace(rho, {"A"}).matrix).cwiseAbs().maxCoeff() <
        1e-12);
}

TEST_CASE("tensor then partial trace is the identity on the first factor") {
  for (uint64_t s = 0; s < 20; ++s) {
    auto a = random_density(derive_seed(s, 1), SubsystemLayout({{"A", 3}}), 2);
    auto b = random_density(derive_seed(s, 2), SubsystemLayout({{"B", 2}}), 2);
    CHECK((partial_trace(tensor(a, b), {"A"}).matrix - a.matrix)
              .cwiseAbs()
              .maxCoeff() < 1e-12);
  }
}
