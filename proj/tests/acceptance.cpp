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

// End-to-end check suite. Prints one line per criterion; exits nonzero if any
// fails. argv[1] is the path to the CLI binary (used by the determinism
// check).

#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "qd/families.hpp"
#include "qd/optimizer.hpp"
#include "qd/verify.hpp"

using namespace qd;

namespace {

constexpr uint64_t kSeed = 2026;
constexpr int kTrials = 200;

int g_failures = 0;

void report(const std::string& name, bool ok, double worst) {
  std::printf("%s: %s (worst %.3e)\n", ok ? "PASS" : "FAIL", name.c_str(), worst);
  if (!ok) ++g_failures;
}

std::vector<std::string> join(std::vector<std::string> a,
                              const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// H(p)-free average entropy of an ensemble marginal.
double avg_ent(const ConditionedEnsemble& ens, const std::vector<std::string>& l) {
  return cq_entropy(ens, l, true) - cq_entropy(ens, {}, true);
}

void criterion_tradeoff_and_gaps() {
  double worst_tradeoff = 0.0;
  double worst_two_path = 0.0;
  for (int i = 0; i < kTrials; ++i) {
    auto c = make_trial_case(kSeed, i);
    auto ens = conditioned_ensemble(c.state, "B", c.instrument);
    worst_tradeoff = std::max(worst_tradeoff, tradeoff_residual(ens, Scope::local));
    worst_tradeoff = std::max(worst_tradeoff, tradeoff_residual(ens, Scope::whole));

    // gap closed forms, recomputed here from the classical-quantum entropies
    const std::vector<std::string> r{ens.ref_label};
    const std::vector<std::string> q{ens.apparatus_label};
    const auto ra = join(r, ens.spectator_labels);
    const double dg_diff =
        disturbance(ens, Scope::local) - disturbance(ens, Scope::whole);
    const double dg_closed = cq_entropy(ens, ra, false) + avg_ent(ens, join(r, q)) -
                             cq_entropy(ens, r, false) - avg_ent(ens, join(ra, q));
    const double gg_diff =
        information_gain(ens, Scope::local) - information_gain(ens, Scope::whole);
    const double gg_closed = cq_entropy(ens, ra, false) + avg_ent(ens, r) -
                             cq_entropy(ens, r, false) - avg_ent(ens, ra);
    worst_two_path = std::max(worst_two_path, std::abs(dg_diff - dg_closed));
    worst_two_path = std::max(worst_two_path, std::abs(gg_diff - gg_closed));
  }
  report("gain + missing = disturbance in both scopes, 200 mixed cases",
         worst_tradeoff <= 1e-9, worst_tradeoff);
  report("gap differences match their closed forms, same 200 cases",
         worst_two_path <= 1e-9, worst_two_path);
}

void criterion_inequality_chain() {
  double worst = 0.0;
  for (int i = 0; i < kTrials; ++i) {
    auto c = make_trial_case(kSeed, i);
    const double gg = gain_gap(c.state, "B", c.instrument);
    const double dg = disturbance_gap(c.state, "B", c.instrument);
    const double cg = conditional_entropy_gap(c.state, "B", c.instrument);
    worst = std::max(worst, gg - dg);
    worst = std::max(worst, dg - cg);
  }
  report("gain gap <= disturbance gap <= conditional-entropy gap, 200 cases",
         worst <= 1e-9, worst);
}

void criterion_rank1_equality() {
  double worst = 0.0;
  for (int i = 0; i < kTrials; ++i) {
    const uint64_t s = derive_seed(kSeed, 1000 + i);
    auto rho = random_bipartite(s, 2, 2, 1 + i % 4);
    KrausInstrument instr = [&]() -> KrausInstrument {
      switch (i % 4) {
        case 0:
          return projective_from_unitary(random_unitary(derive_seed(s, 1), 2));
        case 1:
          return random_rank1_povm(derive_seed(s, 2), 2, 3);
        case 2:
          return random_rank1_povm(derive_seed(s, 3), 2, 4);
        default:  // 50 multi-Kraus realizations of rank-1 POVMs
          return multi_kraus_realization(random_rank1_povm(derive_seed(s, 4), 2, 3),
                                         derive_seed(s, 5), 2 + i % 3);
      }
    }();
    const double cg = conditional_entropy_gap(rho, "B", instr);
    const double dg = disturbance_gap(rho, "B", instr);
    worst = std::max(worst, std::abs(cg - dg));
  }
  report("rank-1 POVMs: conditional-entropy gap equals disturbance gap, 200 "
         "cases with 50 multi-Kraus realizations",
         worst <= 1e-9, worst);
}

void criterion_good_equality() {
  double worst = 0.0;
  for (int i = 0; i < kTrials; ++i) {
    const uint64_t s = derive_seed(kSeed, 2000 + i);
    auto rho = random_bipartite(s, 2, 2, 1 + i % 4);
    auto instr = i % 2 == 0
                     ? projective_from_unitary(random_unitary(derive_seed(s, 1), 2))
                     : random_rank1_povm(derive_seed(s, 1), 2, 3);
    auto ens = conditioned_ensemble(rho, "B", instr);
    worst = std::max(worst, std::abs(gain_gap(ens) - disturbance_gap(ens)));
    worst = std::max(worst, std::abs(missing_information(ens)));
  }
  report("single-Kraus rank-1: gain gap equals disturbance gap and missing "
         "information vanishes, 200 cases",
         worst <= 1e-9, worst);
}

void criterion_projective_chain() {
  double worst_fixed = 0.0;
  double worst_min = 0.0;
  OptimizerConfig cfg;
  cfg.seed = kSeed;
  for (int i = 0; i < 50; ++i) {
    const uint64_t s = derive_seed(kSeed, 3000 + i);
    auto rho = random_bipartite(s, 2, 2, 1 + i % 4);
    auto instr = projective_from_unitary(random_unitary(derive_seed(s, 1), 2));
    std::array<double, 4> v{
        expression_value(rho, "B", instr, Expression::cond_entropy),
        expression_value(rho, "B", instr, Expression::disturbance_gap),
        expression_value(rho, "B", instr, Expression::gain_gap),
        expression_value(rho, "B", instr, Expression::relent_gap)};
    for (size_t a = 0; a < v.size(); ++a)
      for (size_t b = a + 1; b < v.size(); ++b)
        worst_fixed = std::max(worst_fixed, std::abs(v[a] - v[b]));
    auto [r1, r2] = coles_residuals(rho, "B", instr);
    worst_fixed = std::max(worst_fixed, std::max(r1, r2));

    worst_min = std::max(worst_min,
                         discord_all_expressions(rho, "B", cfg).residual_spread);
  }
  report("projective expressions and decoherence identities agree at fixed "
         "measurement, 50 states",
         worst_fixed <= 1e-9, worst_fixed);
  report("minimized projective expressions agree within 1e-6, 50 states",
         worst_min <= 1e-6, worst_min);
}

void criterion_known_values() {
  OptimizerConfig cfg;
  cfg.seed = kSeed;
  double worst = 0.0;
  bool ok = true;

  const double bell = discord(bell_phi_plus(), "B", cfg, Expression::cond_entropy).value;
  ok &= std::abs(bell - 1.0) <= 1e-6;
  worst = std::max(worst, std::abs(bell - 1.0));

  auto prod = tensor(random_density(1, SubsystemLayout({{"A", 2}}), 2),
                     random_density(2, SubsystemLayout({{"B", 2}}), 2));
  const double dp = discord(prod, "B", cfg, Expression::cond_entropy).value;
  ok &= dp <= 1e-6;
  worst = std::max(worst, dp);

  const double dcq =
      discord(classical_quantum(kSeed, 2), "B", cfg, Expression::cond_entropy).value;
  ok &= dcq <= 1e-6;
  worst = std::max(worst, dcq);

  double worst_oracle = 0.0;
  for (int i = 0; i <= 10; ++i) {
    auto rho = werner(i / 10.0);
    worst_oracle =
        std::max(worst_oracle,
                 std::abs(discord(rho, "B", cfg, Expression::cond_entropy).value -
                          brute_force_oracle(rho, "B", 128)));
  }
  for (int i = 0; i <= 4; ++i) {
    const double t = i / 4.0;
    auto rho = bell_diagonal(0.5 * t, 0.3 * t, 0.2 * t);
    worst_oracle =
        std::max(worst_oracle,
                 std::abs(discord(rho, "B", cfg, Expression::cond_entropy).value -
                          brute_force_oracle(rho, "B", 128)));
  }
  ok &= worst_oracle <= 1e-4;
  worst = std::max(worst, worst_oracle);

  report("known values: Bell = 1, product and classical-quantum = 0, Werner "
         "and Bell-diagonal sweeps match the exhaustive grid",
         ok, worst);
}

std::string capture(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), p)) > 0) out.append(buf, n);
  pclose(p);
  return out;
}

void criterion_determinism(const char* cli) {
  if (!cli) {
    report("verify reports are byte-identical across runs (no CLI path given)",
           false, 0.0);
    return;
  }
  const std::string cmd =
      std::string("\"") + cli + "\" verify --suite all --trials 50 --seed 1";
  const std::string a = capture(cmd);
  const std::string b = capture(cmd);
  const bool ok = !a.empty() && a == b && a.find("\"passed\":true") != std::string::npos;
  report("verify reports are byte-identical across runs", ok,
         static_cast<double>(a.size() - b.size()));
}

}  // namespace

int main(int argc, char** argv) {
  criterion_tradeoff_and_gaps();
  criterion_inequality_chain();
  criterion_rank1_equality();
  criterion_good_equality();
  criterion_projective_chain();
  criterion_known_values();
  criterion_determinism(argc > 1 ? argv[1] : nullptr);
  return g_failures == 0 ? 0 : 1;
}
