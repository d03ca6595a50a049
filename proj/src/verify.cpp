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

#include "qd/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "qd/families.hpp"
#include "qd/format.hpp"

#ifdef QD_HAVE_OPENMP
#include <omp.h>
#endif

namespace qd {

KrausInstrument multi_kraus_realization(const KrausInstrument& rank1_instr,
                                        uint64_t seed, int pieces) {
  if (!rank1_instr.rank1() || !rank1_instr.single_kraus()) {
    throw NotProjective("multi-Kraus splitting needs a canonical rank-1 instrument");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<std::vector<Mat>> outcomes;
  for (int m = 0; m < rank1_instr.num_outcomes(); ++m) {
    Vec v(pieces);
    for (int k = 0; k < pieces; ++k) v(k) = std::complex<double>(n(rng), n(rng));
    v /= v.norm();
    std::vector<Mat> ops;
    for (int k = 0; k < pieces; ++k) {
      ops.push_back(Mat(v(k) * rank1_instr.kraus(m)[0]));
    }
    outcomes.push_back(std::move(ops));
  }
  return KrausInstrument(rank1_instr.dim(), std::move(outcomes));
}

KrausInstrument random_general_instrument(uint64_t seed, int dim, int n_outcomes,
                                          int kraus_each) {
  // Haar isometry from C^dim into C^{dim·n_outcomes·kraus_each}, chopped into
  // dim-row blocks: completeness is automatic.
  const int big = dim * n_outcomes * kraus_each;
  Mat u = random_unitary(seed, big);
  Mat v = u.leftCols(dim);
  std::vector<std::vector<Mat>> outcomes;
  int block = 0;
  for (int m = 0; m < n_outcomes; ++m) {
    std::vector<Mat> ops;
    for (int k = 0; k < kraus_each; ++k) {
      ops.push_back(Mat(v.middleRows(block * dim, dim)));
      ++block;
    }
    outcomes.push_back(std::move(ops));
  }
  return KrausInstrument(dim, std::move(outcomes));
}

TrialCase make_trial_case(uint64_t seed, int index) {
  const uint64_t s = derive_seed(seed, static_cast<uint64_t>(index));
  const int rank = 1 + index % 4;
  DensityOperator rho = random_bipartite(derive_seed(s, 1), 2, 2, rank);
  switch (index % 4) {
    case 0:
      return {rho, projective_from_unitary(random_unitary(derive_seed(s, 2), 2)),
              "projective"};
    case 1:
      return {rho, random_rank1_povm(derive_seed(s, 2), 2, 3), "rank1_povm"};
    case 2:
      return {rho,
              multi_kraus_realization(random_rank1_povm(derive_seed(s, 2), 2, 3),
                                      derive_seed(s, 3), 2),
              "rank1_multikraus"};
    default:
      return {rho, random_general_instrument(derive_seed(s, 2), 2, 2, 2),
              "general_multikraus"};
  }
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return c.pass(); });
}

std::string VerificationReport::to_json() const {
  std::ostringstream os;
  os << "{\"suite\":\"" << suite << "\",\"trials\":" << trials
     << ",\"seed\":" << seed << ",\"checks\":[";
  for (size_t i = 0; i < checks.size(); ++i) {
    if (i) os << ",";
    os << "{\"name\":\"" << checks[i].name
       << "\",\"max_residual\":" << fmt_double(checks[i].max_residual)
       << ",\"tolerance\":" << fmt_double(checks[i].tolerance)
       << ",\"pass\":" << (checks[i].pass() ? "true" : "false") << "}";
  }
  os << "],\"passed\":" << (passed() ? "true" : "false") << "}";
  return os.str();
}

namespace {

// Residuals collected per trial; names are stable so parallel trials can be
// merged in index order.
using TrialFn = std::function<std::vector<std::pair<std::string, double>>(int)>;

std::vector<IdentityCheck> sweep(int trials, const TrialFn& fn,
                                 const std::vector<std::pair<std::string, double>>& defs) {
  std::vector<std::vector<std::pair<std::string, double>>> results(trials);
#ifdef QD_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int t = 0; t < trials; ++t) results[t] = fn(t);

  std::vector<IdentityCheck> checks;
  for (const auto& [name, tolerance] : defs) {
    IdentityCheck c{name, 0.0, tolerance};
    for (int t = 0; t < trials; ++t) {
      for (const auto& [n, r] : results[t]) {
        if (n == name) c.max_residual = std::max(c.max_residual, r);
      }
    }
    checks.push_back(c);
  }
  return checks;
}

std::vector<IdentityCheck> suite_tradeoff(int trials, uint64_t seed) {
  return sweep(
      trials,
      [&](int t) -> std::vector<std::pair<std::string, double>> {
        const auto c = make_trial_case(seed, t);
        const auto ens = conditioned_ensemble(c.state, "B", c.instrument);
        return {{"tradeoff_local", tradeoff_residual(ens, Scope::local)},
                {"tradeoff_whole", tradeoff_residual(ens, Scope::whole)}};
      },
      {{"tradeoff_local", tol::identity}, {"tradeoff_whole", tol::identity}});
}

std::vector<IdentityCheck> suite_gaps(int trials, uint64_t seed) {
  return sweep(
      trials,
      [&](int t) -> std::vector<std::pair<std::string, double>> {
        const auto c = make_trial_case(seed, t);
        const auto ens = conditioned_ensemble(c.state, "B", c.instrument);
        // two-path residuals, recomputed here rather than relying on the
        // internal assertion
        const double dg_diff =
            disturbance(ens, Scope::local) - disturbance(ens, Scope::whole);
        const double gg_diff = information_gain(ens, Scope::local) -
                               information_gain(ens, Scope::whole);
        const double dg = disturbance_gap(ens);
        const double gg = gain_gap(ens);
        const double cg = conditional_entropy_gap(c.state, "B", c.instrument);
        return {{"disturbance_gap_two_path", std::abs(dg - dg_diff)},
                {"gain_gap_two_path", std::abs(gg - gg_diff)},
                {"ssa_gain_le_disturbance", std::max(0.0, gg - dg)},
                {"subadd_disturbance_le_cond", std::max(0.0, dg - cg)}};
      },
      {{"disturbance_gap_two_path", tol::identity},
       {"gain_gap_two_path", tol::identity},
       {"ssa_gain_le_disturbance", tol::identity},
       {"subadd_disturbance_le_cond", tol::identity}});
}

std::vector<IdentityCheck> suite_rank1(int trials, uint64_t seed) {
  return sweep(
      trials,
      [&](int t) -> std::vector<std::pair<std::string, double>> {
        // alternate canonical single-Kraus and multi-Kraus realizations of
        // rank-1 POVMs; both must give the same conditional-entropy collapse
        const uint64_t s = derive_seed(seed, static_cast<uint64_t>(t));
        DensityOperator rho = random_bipartite(derive_seed(s, 1), 2, 2, 1 + t % 4);
        KrausInstrument canonical = random_rank1_povm(derive_seed(s, 2), 2, 3);
        KrausInstrument instr =
            t % 2 == 0 ? canonical
                       : multi_kraus_realization(canonical, derive_seed(s, 3), 2 + t % 2);
        const double dg = disturbance_gap(rho, "B", instr);
        const double cg = conditional_entropy_gap(rho, "B", instr);
        return {{"rank1_cond_eq_disturbance", std::abs(cg - dg)}};
      },
      {{"rank1_cond_eq_disturbance", tol::identity}});
}

std::vector<IdentityCheck> suite_good(int trials, uint64_t seed) {
  return sweep(
      trials,
      [&](int t) -> std::vector<std::pair<std::string, double>> {
        const uint64_t s = derive_seed(seed, static_cast<uint64_t>(t));
        DensityOperator rho = random_bipartite(derive_seed(s, 1), 2, 2, 1 + t % 4);
        KrausInstrument instr =
            t % 2 == 0 ? random_rank1_povm(derive_seed(s, 2), 2, 3)
                       : projective_from_unitary(random_unitary(derive_seed(s, 2), 2));
        const auto ens = conditioned_ensemble(rho, "B", instr);
        return {{"good_gain_eq_disturbance",
                 std::abs(gain_gap(ens) - disturbance_gap(ens))},
                {"good_missing_zero", std::abs(missing_information(ens, Scope::local))}};
      },
      {{"good_gain_eq_disturbance", tol::identity},
       {"good_missing_zero", tol::identity}});
}

std::vector<IdentityCheck> suite_projective_chain(int trials, uint64_t seed) {
  return sweep(
      trials,
      [&](int t) -> std::vector<std::pair<std::string, double>> {
        const uint64_t s = derive_seed(seed, static_cast<uint64_t>(t));
        DensityOperator rho = random_bipartite(derive_seed(s, 1), 2, 2, 1 + t % 4);
        KrausInstrument instr =
            projective_from_unitary(random_unitary(derive_seed(s, 2), 2));
        const double cg = conditional_entropy_gap(rho, "B", instr);
        const double dg = disturbance_gap(rho, "B", instr);
        const double gg = gain_gap(rho, "B", instr);
        const double rg = relent_gap(rho, "B", instr);
        const auto coles = coles_residuals(rho, "B", instr);
        const double chain = std::max({std::abs(cg - dg), std::abs(cg - gg),
                                       std::abs(cg - rg), std::abs(dg - gg),
                                       std::abs(dg - rg), std::abs(gg - rg)});
        return {{"projective_chain_pairwise", chain},
                {"coles_decoherence", coles.first},
                {"coles_gain", coles.second}};
      },
      {{"projective_chain_pairwise", tol::identity},
       {"coles_decoherence", tol::identity},
       {"coles_gain", tol::identity}});
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"tradeoff", "gaps", "rank1", "good", "projective_chain", "all"};
}

VerificationReport run_suite(const std::string& suite, int trials, uint64_t seed) {
  if (trials < 1) throw Error("trials must be at least 1");
  VerificationReport report;
  report.suite = suite;
  report.trials = trials;
  report.seed = seed;
  auto append = [&](std::vector<IdentityCheck> cs) {
    report.checks.insert(report.checks.end(), cs.begin(), cs.end());
  };
  if (suite == "tradeoff") append(suite_tradeoff(trials, seed));
  else if (suite == "gaps") append(suite_gaps(trials, seed));
  else if (suite == "rank1") append(suite_rank1(trials, seed));
  else if (suite == "good") append(suite_good(trials, seed));
  else if (suite == "projective_chain") append(suite_projective_chain(trials, seed));
  else if (suite == "all") {
    append(suite_tradeoff(trials, seed));
    append(suite_gaps(trials, seed));
    append(suite_rank1(trials, seed));
    append(suite_good(trials, seed));
    append(suite_projective_chain(trials, seed));
  } else {
    throw Error("unknown suite '" + suite + "'");
  }
  return report;
}

}  // namespace qd
