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

#include "qd/optimizer.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "qd/format.hpp"

#ifdef QD_HAVE_OPENMP
#include <omp.h>
#endif

namespace qd {

std::string to_string(Expression e) {
  switch (e) {
    case Expression::cond_entropy: return "cond_entropy";
    case Expression::disturbance_gap: return "disturbance_gap";
    case Expression::gain_gap: return "gain_gap";
    case Expression::relent_gap: return "relent_gap";
  }
  return "?";
}

double expression_value(const DensityOperator& rho, const std::string& measured_label,
                        const KrausInstrument& instrument, Expression expr) {
  switch (expr) {
    case Expression::cond_entropy:
      return conditional_entropy_gap(rho, measured_label, instrument);
    case Expression::disturbance_gap:
      return disturbance_gap(rho, measured_label, instrument);
    case Expression::gain_gap:
      return gain_gap(rho, measured_label, instrument);
    case Expression::relent_gap:
      return relent_gap(rho, measured_label, instrument);
  }
  throw Error("unknown expression");
}

namespace {

using Objective = std::function<double(const std::vector<double>&)>;

struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Standard Nelder–Mead with reflection 1, expansion 2, contraction 0.5,
// shrink 0.5. Converged when the simplex value spread drops below tol.
SimplexResult nelder_mead(const Objective& f, const std::vector<double>& x0,
                          double step, double tol, int max_iters) {
  const size_t n = x0.size();
  std::vector<std::vector<double>> xs(n + 1, x0);
  for (size_t i = 0; i < n; ++i) xs[i + 1][i] += step;
  std::vector<double> fs(n + 1);
  for (size_t i = 0; i <= n; ++i) fs[i] = f(xs[i]);

  SimplexResult res;
  int iter = 0;
  for (; iter < max_iters; ++iter) {
    std::vector<size_t> order(n + 1);
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return fs[a] < fs[b]; });
    const size_t best = order[0], worst = order[n], second = order[n - 1];
    if (fs[worst] - fs[best] < tol) {
      res.converged = true;
      break;
    }
    std::vector<double> centroid(n, 0.0);
    for (size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (size_t k = 0; k < n; ++k) centroid[k] += xs[i][k] / n;
    }
    auto blend = [&](double c) {
      std::vector<double> x(n);
      for (size_t k = 0; k < n; ++k) x[k] = centroid[k] + c * (centroid[k] - xs[worst][k]);
      return x;
    };
    auto xr = blend(1.0);
    double fr = f(xr);
    if (fr < fs[best]) {
      auto xe = blend(2.0);
      double fe = f(xe);
      if (fe < fr) { xs[worst] = xe; fs[worst] = fe; }
      else { xs[worst] = xr; fs[worst] = fr; }
    } else if (fr < fs[second]) {
      xs[worst] = xr; fs[worst] = fr;
    } else {
      auto xc = blend(fr < fs[worst] ? 0.5 : -0.5);
      double fc = f(xc);
      if (fc < std::min(fr, fs[worst])) {
        xs[worst] = xc; fs[worst] = fc;
      } else {
        for (size_t i = 0; i <= n; ++i) {
          if (i == best) continue;
          for (size_t k = 0; k < n; ++k) xs[i][k] = xs[best][k] + 0.5 * (xs[i][k] - xs[best][k]);
          fs[i] = f(xs[i]);
        }
      }
    }
  }
  size_t best = 0;
  for (size_t i = 1; i <= n; ++i) if (fs[i] < fs[best]) best = i;
  res.x = xs[best];
  res.value = fs[best];
  res.iterations = iter;
  return res;
}

// Hermitian generator from d² real parameters: diagonal first, then the
// (re, im) pairs of the upper triangle.
Mat hermitian_from_params(const std::vector<double>& x, int d) {
  Mat h = Mat::Zero(d, d);
  size_t idx = 0;
  for (int i = 0; i < d; ++i) h(i, i) = x[idx++];
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const double re = x[idx++], im = x[idx++];
      h(i, j) = std::complex<double>(re, im);
      h(j, i) = std::complex<double>(re, -im);
    }
  }
  return h;
}

Mat unitary_from_params(const std::vector<double>& x, int d) {
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitian_from_params(x, d));
  Vec phases(d);
  for (int i = 0; i < d; ++i) {
    const double lam = es.eigenvalues()(i);
    phases(i) = std::complex<double>(std::cos(lam), std::sin(lam));
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

struct GridPoint {
  double value = 0.0;
  int i = 0, j = 0;
  bool better_than(const GridPoint& o) const {
    if (value != o.value) return value < o.value;
    return i != o.i ? i < o.i : j < o.j;  // lexicographic tie-break
  }
};

// Evaluates f over the inclusive-θ / half-open-φ grid and returns the best
// cell. Parallel over θ rows when OpenMP is enabled; per-row bests are merged
// serially in row order, so the result is thread-count independent.
GridPoint grid_minimum(const std::function<double(double, double)>& f, int n_theta,
                       int n_phi) {
  std::vector<GridPoint> row_best(n_theta);
#ifdef QD_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < n_theta; ++i) {
    const double theta = n_theta > 1 ? M_PI * i / (n_theta - 1) : 0.0;
    GridPoint best{f(theta, 0.0), i, 0};
    for (int j = 1; j < n_phi; ++j) {
      GridPoint cand{f(theta, 2.0 * M_PI * j / n_phi), i, j};
      if (cand.better_than(best)) best = cand;
    }
    row_best[i] = best;
  }
  GridPoint best = row_best[0];
  for (int i = 1; i < n_theta; ++i) {
    if (row_best[i].better_than(best)) best = row_best[i];
  }
  return best;
}

DiscordResult discord_qubit_projective(const DensityOperator& rho,
                                       const std::string& measured_label,
                                       const OptimizerConfig& config,
                                       Expression expr) {
  auto eval = [&](double theta, double phi) {
    return expression_value(rho, measured_label, qubit_projective(theta, phi), expr);
  };
  const GridPoint grid = grid_minimum(eval, config.grid_theta, config.grid_phi);
  const double theta0 =
      config.grid_theta > 1 ? M_PI * grid.i / (config.grid_theta - 1) : 0.0;
  const double phi0 = 2.0 * M_PI * grid.j / config.grid_phi;

  Objective obj = [&](const std::vector<double>& x) { return eval(x[0], x[1]); };

  DiscordResult result;
  result.value = grid.value;
  result.argmin = {theta0, phi0};
  result.converged = true;

  const double step = M_PI / std::max(config.grid_theta, 2);
  std::vector<std::vector<double>> starts{{theta0, phi0}};
  for (int r = 0; r < config.restarts; ++r) {
    std::mt19937_64 rng(derive_seed(config.seed, static_cast<uint64_t>(r)));
    std::uniform_real_distribution<double> u(0.0, 1.0);
    starts.push_back({M_PI * u(rng), 2.0 * M_PI * u(rng)});
  }
  bool refined_converged = false;
  for (const auto& x0 : starts) {
    SimplexResult sr = nelder_mead(obj, x0, step, config.refine_tol, config.refine_iters);
    result.iterations += sr.iterations;
    if (sr.value < result.value) {
      result.value = sr.value;
      result.argmin = sr.x;
      refined_converged = sr.converged;
    } else if (sr.converged) {
      refined_converged = refined_converged || sr.value <= result.value + config.refine_tol;
    }
  }
  result.converged = refined_converged;
  return result;
}

DiscordResult discord_general_projective(const DensityOperator& rho,
                                         const std::string& measured_label,
                                         const OptimizerConfig& config,
                                         Expression expr) {
  const int d = rho.layout.dim_of(measured_label);
  const int nparams = d * d;
  Objective obj = [&](const std::vector<double>& x) {
    return expression_value(rho, measured_label,
                            projective_from_unitary(unitary_from_params(x, d)), expr);
  };

  DiscordResult result;
  result.value = std::numeric_limits<double>::infinity();
  bool refined_converged = false;
  std::vector<std::vector<double>> starts{std::vector<double>(nparams, 0.0)};
  for (int r = 0; r < std::max(config.restarts, 1); ++r) {
    std::mt19937_64 rng(derive_seed(config.seed, static_cast<uint64_t>(r)));
    std::normal_distribution<double> n(0.0, 1.0);
    std::vector<double> x(nparams);
    for (auto& v : x) v = n(rng);
    starts.push_back(std::move(x));
  }
  for (const auto& x0 : starts) {
    SimplexResult sr = nelder_mead(obj, x0, 0.3, config.refine_tol, config.refine_iters);
    result.iterations += sr.iterations;
    if (sr.value < result.value) {
      result.value = sr.value;
      result.argmin = sr.x;
      refined_converged = sr.converged;
    }
  }
  result.converged = refined_converged;
  return result;
}

DiscordResult discord_rank1_povm(const DensityOperator& rho,
                                 const std::string& measured_label,
                                 const OptimizerConfig& config, Expression expr) {
  if (expr == Expression::relent_gap) {
    throw NotProjective("relent_gap is defined for projective families only");
  }
  const int d = rho.layout.dim_of(measured_label);
  if (config.povm_outcomes < d) {
    throw BadOutcomeCount("rank-1 POVM needs at least dim outcomes");
  }
  DiscordResult result;
  result.value = std::numeric_limits<double>::infinity();
  const int n = std::max(config.restarts, 1);
  for (int r = 0; r < n; ++r) {
    const uint64_t s = derive_seed(config.seed, static_cast<uint64_t>(r));
    const auto instr = random_rank1_povm(s, d, config.povm_outcomes);
    const double v = expression_value(rho, measured_label, instr, expr);
    ++result.iterations;
    if (v < result.value) {
      result.value = v;
      result.argmin = {static_cast<double>(r)};
    }
  }
  result.converged = true;
  return result;
}

}  // namespace

DiscordResult discord(const DensityOperator& rho, const std::string& measured_label,
                      const OptimizerConfig& config, Expression expr) {
  switch (config.family) {
    case MeasurementFamily::projective_qubit:
      if (rho.layout.dim_of(measured_label) != 2) {
        throw UnsupportedDim("projective_qubit requires a dim-2 measured factor");
      }
      return discord_qubit_projective(rho, measured_label, config, expr);
    case MeasurementFamily::projective_general:
      return discord_general_projective(rho, measured_label, config, expr);
    case MeasurementFamily::rank1_povm_n:
      return discord_rank1_povm(rho, measured_label, config, expr);
  }
  throw Error("unknown measurement family");
}

DiscordResult discord_all_expressions(const DensityOperator& rho,
                                      const std::string& measured_label,
                                      const OptimizerConfig& config) {
  if (config.family == MeasurementFamily::rank1_povm_n) {
    throw NotProjective("all-expressions comparison requires a projective family");
  }
  DiscordResult result = discord(rho, measured_label, config, Expression::cond_entropy);

  KrausInstrument instr =
      config.family == MeasurementFamily::projective_qubit
          ? qubit_projective(result.argmin[0], result.argmin[1])
          : projective_from_unitary(unitary_from_params(
                result.argmin, rho.layout.dim_of(measured_label)));

  for (Expression e : {Expression::cond_entropy, Expression::disturbance_gap,
                       Expression::gain_gap, Expression::relent_gap}) {
    result.per_expression[to_string(e)] =
        expression_value(rho, measured_label, instr, e);
  }
  double lo = result.value, hi = result.value;
  for (const auto& [_, v] : result.per_expression) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  result.residual_spread = hi - lo;
  if (result.residual_spread > kExpressionSpreadTol) {
    throw ExpressionDisagreement("expression spread " +
                                 fmt_double(result.residual_spread));
  }
  return result;
}

namespace {

// Direct conditional-entropy-gap evaluation for the oracle: projector
// conjugation plus marginal entropies, no ensemble machinery.
double oracle_gap(const DensityOperator& rho, const std::string& measured_label,
                  const std::vector<std::string>& spectators, double base_term,
                  double theta, double phi) {
  const std::complex<double> eip(std::cos(phi), std::sin(phi));
  Vec v0(2), v1(2);
  v0 << std::cos(theta / 2), eip * std::sin(theta / 2);
  v1 << -std::conj(eip) * std::sin(theta / 2), std::cos(theta / 2);
  double avg = 0.0;
  for (const Vec& v : {v0, v1}) {
    Mat proj = embed(Mat(v * v.adjoint()), rho.layout, measured_label);
    Mat post = proj * rho.matrix * proj;
    const double p = post.trace().real();
    if (p < tol::degenerate_prob) continue;
    avg += p * entropy_of_matrix(
                   partial_trace_matrix(post / p, rho.layout, spectators));
  }
  return avg - base_term;
}

}  // namespace

double brute_force_oracle_serial(const DensityOperator& rho,
                                 const std::string& measured_label, int resolution) {
  if (rho.layout.dim_of(measured_label) != 2) {
    throw UnsupportedDim("oracle requires a dim-2 measured factor");
  }
  const auto spectators = rho.layout.complement({measured_label});
  const double base_term =
      entropy(rho) - entropy(partial_trace(rho, {measured_label}));
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < resolution; ++i) {
    const double theta = resolution > 1 ? M_PI * i / (resolution - 1) : 0.0;
    for (int j = 0; j < 2 * resolution; ++j) {
      const double phi = 2.0 * M_PI * j / (2 * resolution);
      best = std::min(best,
                      oracle_gap(rho, measured_label, spectators, base_term, theta, phi));
    }
  }
  return best;
}

double brute_force_oracle(const DensityOperator& rho, const std::string& measured_label,
                          int resolution) {
#ifndef QD_HAVE_OPENMP
  return brute_force_oracle_serial(rho, measured_label, resolution);
#else
  if (rho.layout.dim_of(measured_label) != 2) {
    throw UnsupportedDim("oracle requires a dim-2 measured factor");
  }
  const auto spectators = rho.layout.complement({measured_label});
  const double base_term =
      entropy(rho) - entropy(partial_trace(rho, {measured_label}));
  std::vector<double> row_best(resolution,
                               std::numeric_limits<double>::infinity());
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < resolution; ++i) {
    const double theta = resolution > 1 ? M_PI * i / (resolution - 1) : 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < 2 * resolution; ++j) {
      const double phi = 2.0 * M_PI * j / (2 * resolution);
      best = std::min(best,
                      oracle_gap(rho, measured_label, spectators, base_term, theta, phi));
    }
    row_best[i] = best;
  }
  double best = row_best[0];
  for (int i = 1; i < resolution; ++i) best = std::min(best, row_best[i]);
  return best;
#endif
}

std::string DiscordResult::to_json() const {
  std::ostringstream os;
  os << "{";
  os << "\"value\":" << fmt_double(value);
  os << ",\"argmin\":[";
  for (size_t i = 0; i < argmin.size(); ++i) {
    if (i) os << ",";
    os << fmt_double(argmin[i]);
  }
  os << "]";
  if (!per_expression.empty()) {
    os << ",\"per_expression\":{";
    bool first = true;
    for (const auto& [name, v] : per_expression) {
      if (!first) os << ",";
      first = false;
      os << "\"" << name << "\":" << fmt_double(v);
    }
    os << "},\"residual_spread\":" << fmt_double(residual_spread);
  }
  os << ",\"iterations\":" << iterations;
  os << ",\"converged\":" << (converged ? "true" : "false");
  os << "}";
  return os.str();
}

}  // namespace qd
