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

#include "qd/measurement.hpp"

#include <algorithm>

namespace qd {

KrausInstrument::KrausInstrument(int dim, std::vector<std::vector<Mat>> outcomes)
    : dim_(dim), outcomes_(std::move(outcomes)) {
  if (outcomes_.empty()) throw BadOutcomeCount("instrument has no outcomes");
  Mat total = Mat::Zero(dim_, dim_);
  for (const auto& ops : outcomes_) {
    if (ops.empty()) throw BadOutcomeCount("outcome with no Kraus operators");
    Mat e = Mat::Zero(dim_, dim_);
    for (const auto& k : ops) {
      if (k.rows() != dim_ || k.cols() != dim_) {
        throw DimensionMismatch("Kraus operator is " + std::to_string(k.rows()) +
                                "x" + std::to_string(k.cols()) + ", expected " +
                                std::to_string(dim_));
      }
      e += k.adjoint() * k;
    }
    povm_.push_back(e);
    total += e;
  }
  const double residual = (total - Mat::Identity(dim_, dim_)).cwiseAbs().maxCoeff();
  if (residual > tol::validation) {
    throw IncompleteInstrument("completeness residual " + std::to_string(residual));
  }

  single_kraus_ = std::all_of(outcomes_.begin(), outcomes_.end(),
                              [](const auto& ops) { return ops.size() == 1; });
  rank1_ = true;
  projective_ = true;
  for (const auto& e : povm_) {
    Eigen::SelfAdjointEigenSolver<Mat> es(e, Eigen::EigenvaluesOnly);
    int rank = 0;
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
      if (es.eigenvalues()(i) > tol::validation) ++rank;
    }
    if (rank > 1) rank1_ = false;
    if ((e * e - e).cwiseAbs().maxCoeff() > tol::validation || rank > 1) {
      projective_ = false;
    }
  }
  projective_ = projective_ && rank1_;
}

int KrausInstrument::max_kraus_count() const {
  size_t mx = 0;
  for (const auto& ops : outcomes_) mx = std::max(mx, ops.size());
  return static_cast<int>(mx);
}

int KrausInstrument::total_kraus_count() const {
  size_t n = 0;
  for (const auto& ops : outcomes_) n += ops.size();
  return static_cast<int>(n);
}

KrausInstrument projective_from_unitary(const Mat& u) {
  const int d = static_cast<int>(u.rows());
  if (u.cols() != d ||
      (u.adjoint() * u - Mat::Identity(d, d)).cwiseAbs().maxCoeff() > tol::validation) {
    throw NotUnitary("matrix is not unitary within tolerance");
  }
  std::vector<std::vector<Mat>> outcomes;
  for (int m = 0; m < d; ++m) {
    Vec col = u.col(m);
    outcomes.push_back({Mat(col * col.adjoint())});
  }
  return KrausInstrument(d, std::move(outcomes));
}

KrausInstrument qubit_projective(double theta, double phi) {
  Vec v0(2), v1(2);
  const std::complex<double> eip(std::cos(phi), std::sin(phi));
  v0 << std::cos(theta / 2), eip * std::sin(theta / 2);
  v1 << -std::conj(eip) * std::sin(theta / 2), std::cos(theta / 2);
  Mat u(2, 2);
  u.col(0) = v0;
  u.col(1) = v1;
  return projective_from_unitary(u);
}

KrausInstrument random_rank1_povm(uint64_t seed, int dim, int n_outcomes) {
  if (n_outcomes < dim) {
    throw BadOutcomeCount("need at least dim outcomes for a rank-1 POVM");
  }
  Mat u = random_unitary(seed, n_outcomes);
  std::vector<std::vector<Mat>> outcomes;
  for (int m = 0; m < n_outcomes; ++m) {
    // w_m: first `dim` rows of column m; E_m = w w†, K_m = √E_m = w w†/‖w‖
    Vec w = u.col(m).head(dim);
    const double nrm = w.norm();
    Mat e = w * w.adjoint();
    Mat k = nrm > 0 ? Mat(e / nrm) : e;
    outcomes.push_back({k});
  }
  return KrausInstrument(dim, std::move(outcomes));
}

std::vector<MeasurementOutcome> apply_instrument(const DensityOperator& rho,
                                                 const std::string& measured_label,
                                                 const KrausInstrument& instrument) {
  if (instrument.dim() != rho.layout.dim_of(measured_label)) {
    throw DimensionMismatch("instrument dim does not match measured factor");
  }
  std::vector<MeasurementOutcome> out;
  double psum = 0.0;
  for (int m = 0; m < instrument.num_outcomes(); ++m) {
    Mat post = Mat::Zero(rho.dim(), rho.dim());
    for (const auto& k : instrument.kraus(m)) {
      Mat kfull = embed(k, rho.layout, measured_label);
      post += kfull * rho.matrix * kfull.adjoint();
    }
    const double p = post.trace().real();
    psum += p;
    MeasurementOutcome o;
    o.prob = p;
    o.degenerate = p < tol::degenerate_prob;
    if (!o.degenerate) {
      o.state = DensityOperator{rho.layout, post / p};
    }
    out.push_back(std::move(o));
  }
  if (std::abs(psum - 1.0) > tol::validation) {
    throw InternalIdentityViolation("outcome probabilities sum to " +
                                    std::to_string(psum));
  }
  return out;
}

std::vector<std::string> ConditionedEnsemble::purifier(Scope scope) const {
  std::vector<std::string> p{ref_label};
  if (scope == Scope::local) {
    p.insert(p.end(), spectator_labels.begin(), spectator_labels.end());
  }
  return p;
}

Mat ConditionedEnsemble::marginal(int m, const std::vector<std::string>& labels) const {
  return partial_trace_vector(vectors.at(m), layout, labels);
}

Mat ConditionedEnsemble::average_marginal(const std::vector<std::string>& labels) const {
  const int d = layout.sublayout(labels).total_dim();
  Mat avg = Mat::Zero(d, d);
  for (size_t m = 0; m < probs.size(); ++m) {
    if (probs[m] < tol::degenerate_prob) continue;
    avg += probs[m] * marginal(static_cast<int>(m), labels);
  }
  return avg;
}

namespace {

std::string fresh_label(const SubsystemLayout& layout, std::string base) {
  while (layout.has(base)) base += "'";
  return base;
}

}  // namespace

ConditionedEnsemble conditioned_ensemble(const DensityOperator& rho,
                                         const std::string& measured_label,
                                         const KrausInstrument& instrument) {
  if (instrument.dim() != rho.layout.dim_of(measured_label)) {
    throw DimensionMismatch("instrument dim does not match measured factor");
  }
  ConditionedEnsemble ens;
  ens.ref_label = fresh_label(rho.layout, "R");
  ens.apparatus_label = fresh_label(rho.layout, "Q");
  ens.measured_label = measured_label;
  for (const auto& f : rho.layout.factors()) {
    if (f.label != measured_label) ens.spectator_labels.push_back(f.label);
  }

  PureStateVector psi = purify(rho, ens.ref_label);
  const int app_dim = instrument.max_kraus_count();
  ens.layout = psi.layout.with_appended(Factor{ens.apparatus_label, app_dim});

  const int n = psi.layout.total_dim();
  for (int m = 0; m < instrument.num_outcomes(); ++m) {
    const auto& ops = instrument.kraus(m);
    ens.kraus_counts.push_back(static_cast<int>(ops.size()));
    Vec u = Vec::Zero(n * app_dim);
    for (size_t k = 0; k < ops.size(); ++k) {
      Vec branch = embed(ops[k], psi.layout, measured_label) * psi.vector;
      for (int i = 0; i < n; ++i) u(i * app_dim + static_cast<int>(k)) = branch(i);
    }
    const double p = u.squaredNorm();
    ens.probs.push_back(p);
    if (p < tol::degenerate_prob) {
      ens.vectors.emplace_back();
    } else {
      ens.vectors.push_back(u / std::sqrt(p));
    }
  }
  double psum = 0.0;
  for (double p : ens.probs) psum += p;
  if (std::abs(psum - 1.0) > tol::validation) {
    throw InternalIdentityViolation("conditioned ensemble probabilities sum to " +
                                    std::to_string(psum));
  }
  return ens;
}

Mat build_dilation_isometry(const KrausInstrument& instrument) {
  const int d = instrument.dim();
  const int rows = d * instrument.total_kraus_count();
  Mat v = Mat::Zero(rows, d);
  int block = 0;
  for (int m = 0; m < instrument.num_outcomes(); ++m) {
    for (const auto& k : instrument.kraus(m)) {
      // block for apparatus basis vector |m,k⟩, in outcome-major order
      v.block(block * d, 0, d, d) = k;
      ++block;
    }
  }
  return v;
}

DensityOperator dephase(const DensityOperator& rho, const std::string& measured_label,
                        const KrausInstrument& instrument) {
  if (!instrument.projective()) {
    throw NotProjective("dephasing requires a rank-1 projective instrument");
  }
  Mat out = Mat::Zero(rho.dim(), rho.dim());
  for (int m = 0; m < instrument.num_outcomes(); ++m) {
    Mat pfull = embed(instrument.povm_element(m), rho.layout, measured_label);
    out += pfull * rho.matrix * pfull;
  }
  return DensityOperator{rho.layout, out};
}

}  // namespace qd
