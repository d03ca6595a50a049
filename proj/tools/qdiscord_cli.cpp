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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "qd/families.hpp"
#include "qd/format.hpp"
#include "qd/io.hpp"
#include "qd/optimizer.hpp"
#include "qd/verify.hpp"

namespace {

// Exit codes: 0 success, 1 identity failure, 2 input error, 3 non-convergence.
constexpr int kExitOk = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNonConvergence = 3;

uint64_t default_seed() {
  if (const char* env = std::getenv("DISCORD_DEFAULT_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 0;
}

std::map<std::string, double> parse_params(const std::vector<std::string>& kvs) {
  std::map<std::string, double> params;
  for (const auto& kv : kvs) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      throw qd::BadFamilyParam("parameter '" + kv + "' is not key=value");
    }
    params[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
  }
  return params;
}

struct ComputeOptions {
  std::string state_file;
  std::string family;
  std::vector<std::string> params;
  std::string expression = "cond_entropy";
  std::string family_opt = "projective_qubit";
  std::string measured_label = "B";
  uint64_t seed = default_seed();
  int grid_theta = 24, grid_phi = 48, restarts = 6, refine_iters = 400;
  int povm_outcomes = 3;
};

qd::Expression parse_expression(const std::string& name) {
  if (name == "cond_entropy") return qd::Expression::cond_entropy;
  if (name == "disturbance_gap") return qd::Expression::disturbance_gap;
  if (name == "gain_gap") return qd::Expression::gain_gap;
  if (name == "relent_gap") return qd::Expression::relent_gap;
  throw qd::Error("unknown expression '" + name + "'");
}

qd::MeasurementFamily parse_family_opt(const std::string& name) {
  if (name == "projective_qubit") return qd::MeasurementFamily::projective_qubit;
  if (name == "projective_general") return qd::MeasurementFamily::projective_general;
  if (name == "rank1_povm_n") return qd::MeasurementFamily::rank1_povm_n;
  throw qd::Error("unknown measurement family '" + name + "'");
}

qd::DensityOperator load_state(const ComputeOptions& opt) {
  if (!opt.state_file.empty()) return qd::read_state_file(opt.state_file);
  if (opt.family.empty()) {
    throw qd::Error("either --state or --family is required");
  }
  return qd::make_family_state(opt.family, parse_params(opt.params), opt.seed);
}

qd::OptimizerConfig make_config(const ComputeOptions& opt) {
  qd::OptimizerConfig cfg;
  cfg.grid_theta = opt.grid_theta;
  cfg.grid_phi = opt.grid_phi;
  cfg.restarts = opt.restarts;
  cfg.refine_iters = opt.refine_iters;
  cfg.seed = opt.seed;
  cfg.family = parse_family_opt(opt.family_opt);
  cfg.povm_outcomes = opt.povm_outcomes;
  return cfg;
}

int run_compute(const ComputeOptions& opt) {
  qd::DensityOperator rho = load_state(opt);
  qd::OptimizerConfig cfg = make_config(opt);
  qd::DiscordResult result =
      opt.expression == "all"
          ? qd::discord_all_expressions(rho, opt.measured_label, cfg)
          : qd::discord(rho, opt.measured_label, cfg, parse_expression(opt.expression));
  std::cout << result.to_json() << "\n";
  return result.converged ? kExitOk : kExitNonConvergence;
}

int run_verify(const std::string& suite, int trials, uint64_t seed) {
  qd::VerificationReport report = qd::run_suite(suite, trials, seed);
  std::cout << report.to_json() << "\n";
  return report.passed() ? kExitOk : kExitIdentityFailure;
}

struct SweepOptions {
  std::string family = "werner";
  std::string param_name = "p";
  std::vector<std::string> fixed_params;
  double from = 0.0, to = 1.0, step = 0.1;
  std::string output;
  bool with_oracle = false;
  int oracle_resolution = 128;
  uint64_t seed = default_seed();
};

int run_sweep(const SweepOptions& opt) {
  if (opt.step <= 0) throw qd::Error("--step must be positive");
  std::ofstream out(opt.output);
  if (!out) {
    std::cerr << "error: cannot write '" << opt.output << "'\n";
    return kExitInputError;
  }
  out << "param,cond_entropy,disturbance_gap,gain_gap,relent_gap,theta,phi,oracle\n";
  qd::OptimizerConfig cfg;
  cfg.seed = opt.seed;
  const int steps = static_cast<int>(std::round((opt.to - opt.from) / opt.step));
  for (int i = 0; i <= steps; ++i) {
    const double value = opt.from + i * opt.step;
    auto params = parse_params(opt.fixed_params);
    params[opt.param_name] = value;
    qd::DensityOperator rho = qd::make_family_state(opt.family, params, opt.seed);
    qd::DiscordResult r = qd::discord_all_expressions(rho, "B", cfg);
    out << qd::fmt_double(value);
    for (const char* e :
         {"cond_entropy", "disturbance_gap", "gain_gap", "relent_gap"}) {
      out << "," << qd::fmt_double(r.per_expression.at(e));
    }
    out << "," << qd::fmt_double(r.argmin.size() > 0 ? r.argmin[0] : 0.0);
    out << "," << qd::fmt_double(r.argmin.size() > 1 ? r.argmin[1] : 0.0);
    out << ",";
    if (opt.with_oracle) {
      out << qd::fmt_double(qd::brute_force_oracle(rho, "B", opt.oracle_resolution));
    }
    out << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum discord of bipartite states via equivalent gap expressions"};
  app.require_subcommand(1);

  ComputeOptions copt;
  auto* compute = app.add_subcommand("compute", "compute discord of one state");
  compute->add_option("--state", copt.state_file, "state JSON file");
  compute->add_option("--family", copt.family,
                      "state family: werner|bell_diagonal|isotropic|classical_quantum|random");
  compute->add_option("--param", copt.params, "family parameter key=value");
  compute->add_option("--expression", copt.expression,
                      "cond_entropy|disturbance_gap|gain_gap|relent_gap|all");
  compute->add_option("--measurement-family", copt.family_opt,
                      "projective_qubit|projective_general|rank1_povm_n");
  compute->add_option("--measured-label", copt.measured_label, "measured factor label");
  compute->add_option("--seed", copt.seed, "random seed");
  compute->add_option("--grid-theta", copt.grid_theta, "theta grid points");
  compute->add_option("--grid-phi", copt.grid_phi, "phi grid points");
  compute->add_option("--restarts", copt.restarts, "refinement restarts");
  compute->add_option("--refine-iters", copt.refine_iters, "simplex iteration cap");
  compute->add_option("--povm-outcomes", copt.povm_outcomes,
                      "outcomes for rank1_povm_n");

  std::string suite = "all";
  int trials = 50;
  uint64_t vseed = default_seed();
  auto* verify = app.add_subcommand("verify", "run randomized identity suites");
  verify->add_option("--suite", suite,
                     "tradeoff|gaps|rank1|good|projective_chain|all");
  verify->add_option("--trials", trials, "number of random trials");
  verify->add_option("--seed", vseed, "random seed");

  SweepOptions sopt;
  auto* sweep = app.add_subcommand("sweep", "sweep a family parameter to CSV");
  sweep->add_option("--family", sopt.family, "state family");
  sweep->add_option("--param-name", sopt.param_name, "swept parameter");
  sweep->add_option("--param", sopt.fixed_params, "fixed parameter key=value");
  sweep->add_option("--from", sopt.from, "range start");
  sweep->add_option("--to", sopt.to, "range end");
  sweep->add_option("--step", sopt.step, "range step");
  sweep->add_option("--output", sopt.output, "CSV output path")->required();
  sweep->add_flag("--oracle", sopt.with_oracle, "add brute-force oracle column");
  sweep->add_option("--oracle-resolution", sopt.oracle_resolution, "oracle grid size");
  sweep->add_option("--seed", sopt.seed, "random seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) return run_compute(copt);
    if (verify->parsed()) return run_verify(suite, trials, vseed);
    if (sweep->parsed()) return run_sweep(sopt);
  } catch (const qd::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
