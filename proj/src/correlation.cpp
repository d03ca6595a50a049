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

#include "qd/correlation.hpp"

#include <sstream>

#include "qd/format.hpp"

namespace qd {

namespace {

std::vector<std::string> join(std::vector<std::string> a,
                              const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Σ p(m) S(ρ_m on labels); degenerate outcomes contribute zero.
double avg_entropy(const ConditionedEnsemble& ens,
                   const std::vector<std::string>& labels,
                   LogBase base = LogBase::two) {
  double s = 0.0;
  for (size_t m = 0; m < ens.probs.size(); ++m) {
    if (ens.probs[m] < tol::degenerate_prob) continue;
    s += ens.probs[m] *
         entropy_of_matrix(ens.marginal(static_cast<int>(m), labels), base);
  }
  return s;
}

// S(Σ p(m) ρ_m on labels).
double ent_avg(const ConditionedEnsemble& ens,
               const std::vector<std::string>& labels,
               LogBase base = LogBase::two) {
  return entropy_of_matrix(ens.average_marginal(labels), base);
}

// Non-purifier output factors: measured factor plus, for the whole scope,
// nothing extra (spectators belong to the purifier only in the local scope).
std::vector<std::string> outputs(const ConditionedEnsemble& ens, Scope scope) {
  std::vector<std::string> o;
  if (scope == Scope::whole) o = ens.spectator_labels;
  o.push_back(ens.measured_label);
  return o;
}

void check_identity(double a, double b, const char* what) {
  if (std::abs(a - b) > tol::identity) {
    throw InternalIdentityViolation(std::string(what) + ": " + fmt_double(a) +
                                    " vs " + fmt_double(b));
  }
}

}  // namespace

double cq_entropy(const ConditionedEnsemble& ens, std::vector<std::string> labels,
                  bool with_x, LogBase base) {
  if (!with_x) return ent_avg(ens, labels, base);
  std::vector<double> p;
  for (double x : ens.probs) p.push_back(x);
  double h = shannon(p, base);
  if (labels.empty()) return h;
  return h + avg_entropy(ens, labels, base);
}

DensityOperator ensemble_state(const ConditionedEnsemble& ens,
                               const std::vector<std::string>& labels) {
  const int n = static_cast<int>(ens.probs.size());
  SubsystemLayout sub = ens.layout.sublayout(labels);
  SubsystemLayout full = sub.with_appended(Factor{"X", n});
  const int d = sub.total_dim();
  Mat out = Mat::Zero(d * n, d * n);
  for (int m = 0; m < n; ++m) {
    if (ens.probs[m] < tol::degenerate_prob) continue;
    Mat block = ens.probs[m] * ens.marginal(m, labels);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        out(i * n + m, j * n + m) = block(i, j);
      }
    }
  }
  return DensityOperator{full, out};
}

double information_gain(const ConditionedEnsemble& ens, Scope scope) {
  const auto p = ens.purifier(scope);
  return ent_avg(ens, p) - avg_entropy(ens, p);
}

double disturbance(const ConditionedEnsemble& ens, Scope scope) {
  const auto pur = ens.purifier(scope);
  const auto out = outputs(ens, scope);
  const double s_in = ent_avg(ens, pur);  // equals the scoped input entropy

  // entropic form: S(input) − [S(outputs, X) − S(purifier, outputs, X)]
  const double entropic =
      s_in - avg_entropy(ens, out) + avg_entropy(ens, join(pur, out));

  // mutual-information form: I(purifier : apparatus, X)
  const std::vector<std::string> q{ens.apparatus_label};
  const double mi = s_in + avg_entropy(ens, q) - avg_entropy(ens, join(pur, q));

  check_identity(entropic, mi, "disturbance entropic vs mutual-information form");
  return entropic;
}

double missing_information(const ConditionedEnsemble& ens, Scope scope) {
  const auto pur = ens.purifier(scope);
  const std::vector<std::string> q{ens.apparatus_label};
  return avg_entropy(ens, pur) + avg_entropy(ens, q) -
         avg_entropy(ens, join(pur, q));
}

double tradeoff_residual(const ConditionedEnsemble& ens, Scope scope) {
  return std::abs(information_gain(ens, scope) + missing_information(ens, scope) -
                  disturbance(ens, scope));
}

double disturbance_gap(const ConditionedEnsemble& ens) {
  const double diff =
      disturbance(ens, Scope::local) - disturbance(ens, Scope::whole);

  // closed form I(spectators : apparatus, X | reference)
  const std::vector<std::string> r{ens.ref_label};
  const std::vector<std::string> q{ens.apparatus_label};
  const auto& a = ens.spectator_labels;
  const double closed = ent_avg(ens, join(r, a)) + avg_entropy(ens, join(r, q)) -
                        ent_avg(ens, r) - avg_entropy(ens, join(join(r, a), q));

  check_identity(diff, closed, "disturbance gap vs closed form");
  return diff;
}

double disturbance_gap(const DensityOperator& rho, const std::string& measured_label,
                       const KrausInstrument& instrument) {
  return disturbance_gap(conditioned_ensemble(rho, measured_label, instrument));
}

double gain_gap(const ConditionedEnsemble& ens) {
  const double diff =
      information_gain(ens, Scope::local) - information_gain(ens, Scope::whole);

  // closed form I(spectators : X | reference)
  const std::vector<std::string> r{ens.ref_label};
  const auto& a = ens.spectator_labels;
  const double closed = ent_avg(ens, join(r, a)) + avg_entropy(ens, r) -
                        ent_avg(ens, r) - avg_entropy(ens, join(r, a));

  check_identity(diff, closed, "gain gap vs closed form");
  return diff;
}

double gain_gap(const DensityOperator& rho, const std::string& measured_label,
                const KrausInstrument& instrument) {
  return gain_gap(conditioned_ensemble(rho, measured_label, instrument));
}

double conditional_entropy_gap(const ConditionedEnsemble& ens) {
  // S(AB) = S(ref marginal), S(B) = S(ref∪spectators marginal) by purity
  const std::vector<std::string> r{ens.ref_label};
  return avg_entropy(ens, ens.spectator_labels) -
         (ent_avg(ens, r) - ent_avg(ens, ens.purifier(Scope::local)));
}

double conditional_entropy_gap(const DensityOperator& rho,
                               const std::string& measured_label,
                               const KrausInstrument& instrument) {
  const std::vector<std::string> b{measured_label};
  const auto a = rho.layout.complement(b);
  const auto outcomes = apply_instrument(rho, measured_label, instrument);
  double avg = 0.0;
  for (const auto& o : outcomes) {
    if (o.degenerate) continue;
    avg += o.prob * entropy(partial_trace(o.state, a));
  }
  const double s_ab = entropy(rho);
  const double s_b = entropy(partial_trace(rho, b));
  return avg - (s_ab - s_b);
}

double relent_gap(const DensityOperator& rho, const std::string& measured_label,
                  const KrausInstrument& instrument) {
  if (!instrument.projective()) {
    throw NotProjective("relative-entropy gap requires a projective instrument");
  }
  const double d_whole = relative_entropy(rho, dephase(rho, measured_label, instrument));
  DensityOperator rho_b = partial_trace(rho, {measured_label});
  const double d_local =
      relative_entropy(rho_b, dephase(rho_b, measured_label, instrument));
  return d_whole - d_local;
}

std::pair<double, double> coles_residuals(const DensityOperator& rho,
                                          const std::string& measured_label,
                                          const KrausInstrument& instrument) {
  if (!instrument.projective()) {
    throw NotProjective("decoherence identities require a projective instrument");
  }
  const auto ens = conditioned_ensemble(rho, measured_label, instrument);
  const std::vector<std::string> r{ens.ref_label};
  const auto ra = ens.purifier(Scope::local);

  const double d_whole = relative_entropy(rho, dephase(rho, measured_label, instrument));
  const double s_x_given_r =
      cq_entropy(ens, r, true) - ent_avg(ens, r);
  const double res1 = std::abs(d_whole - s_x_given_r);

  const double s_x_given_ra = cq_entropy(ens, ra, true) - ent_avg(ens, ra);
  const double gain_diff = information_gain(ens, Scope::local) -
                           information_gain(ens, Scope::whole);
  const double res2 = std::abs((s_x_given_r - s_x_given_ra) - gain_diff);
  return {res1, res2};
}

BalanceReport balance_report(const DensityOperator& rho,
                             const std::string& measured_label,
                             const KrausInstrument& instrument) {
  const auto ens = conditioned_ensemble(rho, measured_label, instrument);
  BalanceReport r;
  r.gain_local = information_gain(ens, Scope::local);
  r.gain_whole = information_gain(ens, Scope::whole);
  r.dist_local = disturbance(ens, Scope::local);
  r.dist_whole = disturbance(ens, Scope::whole);
  r.missing_local = missing_information(ens, Scope::local);
  r.missing_whole = missing_information(ens, Scope::whole);
  r.cond_gap = conditional_entropy_gap(rho, measured_label, instrument);
  r.disturbance_gap = qd::disturbance_gap(ens);
  r.gain_gap = qd::gain_gap(ens);

  r.identity_residuals["tradeoff_local"] = tradeoff_residual(ens, Scope::local);
  r.identity_residuals["tradeoff_whole"] = tradeoff_residual(ens, Scope::whole);
  r.identity_residuals["gain_gap_le_disturbance_gap"] =
      std::max(0.0, r.gain_gap - r.disturbance_gap);
  r.identity_residuals["disturbance_gap_le_cond_gap"] =
      std::max(0.0, r.disturbance_gap - r.cond_gap);
  if (instrument.rank1()) {
    r.identity_residuals["rank1_cond_eq_disturbance"] =
        std::abs(r.cond_gap - r.disturbance_gap);
  }
  if (instrument.good()) {
    r.identity_residuals["good_gain_eq_disturbance"] =
        std::abs(r.gain_gap - r.disturbance_gap);
    r.identity_residuals["good_missing_zero"] = std::abs(r.missing_local);
  }
  if (instrument.projective()) {
    const double rg = relent_gap(rho, measured_label, instrument);
    r.identity_residuals["relent_eq_cond"] = std::abs(rg - r.cond_gap);
    const auto coles = coles_residuals(rho, measured_label, instrument);
    r.identity_residuals["coles_decoherence"] = coles.first;
    r.identity_residuals["coles_gain"] = coles.second;
  }
  return r;
}

std::string BalanceReport::to_json() const {
  std::ostringstream os;
  os << "{";
  os << "\"gain_local\":" << fmt_double(gain_local);
  os << ",\"gain_whole\":" << fmt_double(gain_whole);
  os << ",\"dist_local\":" << fmt_double(dist_local);
  os << ",\"dist_whole\":" << fmt_double(dist_whole);
  os << ",\"missing_local\":" << fmt_double(missing_local);
  os << ",\"missing_whole\":" << fmt_double(missing_whole);
  os << ",\"cond_gap\":" << fmt_double(cond_gap);
  os << ",\"disturbance_gap\":" << fmt_double(disturbance_gap);
  os << ",\"gain_gap\":" << fmt_double(gain_gap);
  os << ",\"identity_residuals\":{";
  bool first = true;
  for (const auto& [name, value] : identity_residuals) {
    if (!first) os << ",";
    first = false;
    os << "\"" << name << "\":" << fmt_double(value);
  }
  os << "}}";
  return os.str();
}

}  // namespace qd
