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

#include "qd/correlation.hpp"
#include "qd/families.hpp"
#include "qd/verify.hpp"

using namespace qd;

namespace {

KrausInstrument z_basis() { return qubit_projective(0.0, 0.0); }

}  // namespace

TEST_CASE("Bell state measured in the Z basis") {
  auto ens = conditioned_ensemble(bell_phi_plus(), "B", z_basis());
  CHECK(information_gain(ens, Scope::local) == doctest::Approx(1.0));
  CHECK(information_gain(ens, Scope::whole) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(disturbance(ens, Scope::local) == doctest::Approx(1.0));
  CHECK(disturbance(ens, Scope::whole) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(missing_information(ens) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(tradeoff_residual(ens, Scope::local) < 1e-9);
  CHECK(disturbance_gap(ens) == doctest::Approx(1.0));
  CHECK(gain_gap(ens) == doctest::Approx(1.0));
  CHECK(conditional_entropy_gap(bell_phi_plus(), "B", z_basis()) ==
        doctest::Approx(1.0));
  CHECK(relent_gap(bell_phi_plus(), "B", z_basis()) == doctest::Approx(1.0));
}

TEST_CASE("product states carry no B-correlation to A") {
  auto prod = tensor(random_density(1, SubsystemLayout({{"A", 2}}), 2),
                     random_density(2, SubsystemLayout({{"B", 2}}), 2));
  for (uint64_t s = 0; s < 5; ++s) {
    auto instr = s % 2 == 0
                     ? random_rank1_povm(s, 2, 3)
                     : projective_from_unitary(random_unitary(s, 2));
    auto ens = conditioned_ensemble(prod, "B", instr);
    CHECK(std::abs(information_gain(ens, Scope::local) -
                   information_gain(ens, Scope::whole)) < 1e-9);
    CHECK(std::abs(gain_gap(ens)) < 1e-9);
    CHECK(std::abs(disturbance_gap(ens)) < 1e-9);
  }
}

TEST_CASE("classical-quantum state measured in its own basis") {
  auto cq = classical_quantum(9, 2);
  auto ens = conditioned_ensemble(cq, "B", z_basis());
  CHECK(std::abs(disturbance(ens, Scope::local) - disturbance(ens, Scope::whole)) <
        1e-9);
  CHECK(std::abs(conditional_entropy_gap(cq, "B", z_basis())) < 1e-9);
  CHECK(std::abs(disturbance_gap(ens)) < 1e-9);
}

TEST_CASE("missing information is zero for single-Kraus, positive for multi-Kraus") {
  auto rho = random_bipartite(13, 2, 2, 3);
  auto canonical = random_rank1_povm(14, 2, 3);
  auto ens1 = conditioned_ensemble(rho, "B", canonical);
  CHECK(std::abs(missing_information(ens1)) < 1e-9);

  // any realization of a rank-1 POVM decouples the apparatus, so Δ stays zero
  auto multi = multi_kraus_realization(canonical, 15, 2);
  auto ens2 = conditioned_ensemble(rho, "B", multi);
  CHECK(std::abs(missing_information(ens2)) < 1e-9);

  auto general = random_general_instrument(16, 2, 2, 2);
  auto ens3 = conditioned_ensemble(rho, "B", general);
  CHECK(missing_information(ens3) > 1e-6);  // generically strictly positive
}

TEST_CASE("maximally mixed input with a projective basis balances gain and disturbance") {
  auto mixed = validate_state(0.25 * Mat::Identity(4, 4),
                              SubsystemLayout({{"A", 2}, {"B", 2}}));
  auto ens = conditioned_ensemble(mixed, "B", z_basis());
  CHECK(std::abs(information_gain(ens, Scope::local) -
                 disturbance(ens, Scope::local)) < 1e-9);
  CHECK(std::abs(missing_information(ens)) < 1e-9);
}

TEST_CASE("gap identities across instrument realizations") {
  // the disturbance gap depends only on the POVM while Δ differs
  auto rho = random_bipartite(17, 2, 2, 4);
  auto canonical = random_rank1_povm(18, 2, 3);
  auto multi = multi_kraus_realization(canonical, 19, 3);
  const double dg1 = disturbance_gap(rho, "B", canonical);
  const double dg2 = disturbance_gap(rho, "B", multi);
  CHECK(std::abs(dg1 - dg2) < 1e-9);
  const double cg = conditional_entropy_gap(rho, "B", canonical);
  CHECK(std::abs(cg - dg1) < 1e-9);  // rank-1 equality
  CHECK(std::abs(cg - conditional_entropy_gap(rho, "B", multi)) < 1e-9);
}

TEST_CASE("ordering chain for general instruments") {
  for (int t = 0; t < 20; ++t) {
    auto c = make_trial_case(123, t);
    const double gg = gain_gap(c.state, "B", c.instrument);
    const double dg = disturbance_gap(c.state, "B", c.instrument);
    const double cg = conditional_entropy_gap(c.state, "B", c.instrument);
    CHECK(gg <= dg + 1e-9);
    CHECK(dg <= cg + 1e-9);
    if (c.instrument.rank1()) CHECK(cg >= -1e-9);
  }
}

TEST_CASE("relative-entropy gap equals the conditional-entropy gap") {
  // already-dephased state: both relative entropies vanish
  Mat diag = Mat::Zero(4, 4);
  diag(0, 0) = 0.4;
  diag(1, 1) = 0.1;
  diag(2, 2) = 0.3;
  diag(3, 3) = 0.2;
  auto dephased = validate_state(diag, SubsystemLayout({{"A", 2}, {"B", 2}}));
  CHECK(std::abs(relent_gap(dephased, "B", z_basis())) < 1e-9);

  for (uint64_t s = 0; s < 30; ++s) {
    auto rho = random_bipartite(s, 2, 2, 1 + static_cast<int>(s % 4));
    auto instr = projective_from_unitary(random_unitary(derive_seed(s, 5), 2));
    CHECK(std::abs(relent_gap(rho, "B", instr) -
                   conditional_entropy_gap(rho, "B", instr)) < 1e-9);
  }

  CHECK_THROWS_AS(relent_gap(bell_phi_plus(), "B", random_rank1_povm(1, 2, 3)),
                  NotProjective);
}

TEST_CASE("decoherence identities") {
  auto [r1, r2] = coles_residuals(bell_phi_plus(), "B", z_basis());
  CHECK(r1 < 1e-9);
  CHECK(r2 < 1e-9);
  // D(ρ||dephased) = S(X|R) = 1 for the Bell state in any basis
  CHECK(relative_entropy(bell_phi_plus(),
                         dephase(bell_phi_plus(), "B", z_basis())) ==
        doctest::Approx(1.0));

  for (uint64_t s = 0; s < 30; ++s) {
    auto rho = random_bipartite(s, 2, 2, 1 + static_cast<int>(s % 4));
    auto instr = projective_from_unitary(random_unitary(derive_seed(s, 6), 2));
    auto [a, b] = coles_residuals(rho, "B", instr);
    CHECK(a < 1e-9);
    CHECK(b < 1e-9);
  }
}

TEST_CASE("blockwise classical-quantum entropies match the full-matrix path") {
  for (uint64_t s = 0; s < 8; ++s) {
    auto c = make_trial_case(77, static_cast<int>(s));
    auto ens = conditioned_ensemble(c.state, "B", c.instrument);
    for (const auto& labels :
         std::vector<std::vector<std::string>>{{"R"}, {"R", "A"}, {"A", "B"}}) {
      auto full = ensemble_state(ens, labels);
      CHECK(std::abs(cq_entropy(ens, labels, true) - entropy(full)) < 1e-9);
      std::vector<std::string> no_x = labels;
      CHECK(std::abs(cq_entropy(ens, no_x, false) -
                     entropy(partial_trace(full, no_x))) < 1e-9);
    }
  }
}

TEST_CASE("balance report") {
  auto report = balance_report(random_bipartite(5, 2, 2, 3), "B",
                               projective_from_unitary(random_unitary(6, 2)));
  for (const auto& [name, residual] : report.identity_residuals) {
    CAPTURE(name);
    CHECK(residual <= 1e-9);
  }
  const std::string json = report.to_json();
  CHECK(json.find("\"cond_gap\"") != std::string::npos);
  CHECK(json.find("\"identity_residuals\"") != std::string::npos);
}
