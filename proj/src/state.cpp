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

#include "qd/state.hpp"

#include <algorithm>
#include <numeric>

namespace qd {

DensityOperator PureStateVector::to_density() const {
  return DensityOperator{layout, vector * vector.adjoint()};
}

DensityOperator validate_state(const Mat& candidate, const SubsystemLayout& layout) {
  const int d = layout.total_dim();
  if (candidate.rows() != d || candidate.cols() != d) {
    throw DimensionMismatch("matrix is " + std::to_string(candidate.rows()) + "x" +
                            std::to_string(candidate.cols()) + ", layout dim " +
                            std::to_string(d));
  }
  const double herm = (candidate - candidate.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol::validation) {
    throw NotHermitian("hermiticity residual " + std::to_string(herm));
  }
  const double tr_err = std::abs(candidate.trace() - std::complex<double>(1.0, 0.0));
  if (tr_err > tol::validation) {
    throw TraceNotOne("trace deviates from 1 by " + std::to_string(tr_err));
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(candidate, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -tol::validation) {
    throw NotPositive("minimum eigenvalue " + std::to_string(min_eig));
  }
  return DensityOperator{layout, candidate};
}

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b) {
  SubsystemLayout layout = SubsystemLayout::concat(a.layout, b.layout);
  const int da = a.dim(), db = b.dim();
  Mat out(da * db, da * db);
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < da; ++j) {
      out.block(i * db, j * db, db, db) = a.matrix(i, j) * b.matrix;
    }
  }
  return DensityOperator{layout, out};
}

namespace {

// Offset tables for composite indices: offsets[c] is the contribution of the
// composite index c (over the given factor subset, in layout order) to the
// full row-major index.
std::vector<int> composite_offsets(const SubsystemLayout& layout,
                                   const std::vector<int>& factor_idx) {
  const auto strides = layout.strides();
  int total = 1;
  for (int f : factor_idx) total *= layout.factor(f).dim;
  std::vector<int> offsets(total, 0);
  for (int c = 0; c < total; ++c) {
    int rem = c;
    for (int k = static_cast<int>(factor_idx.size()) - 1; k >= 0; --k) {
      const int f = factor_idx[k];
      const int d = layout.factor(f).dim;
      offsets[c] += (rem % d) * strides[f];
      rem /= d;
    }
  }
  return offsets;
}

void split_factors(const SubsystemLayout& layout,
                   const std::vector<std::string>& keep,
                   std::vector<int>& kept_idx, std::vector<int>& traced_idx) {
  if (keep.empty()) throw EmptyKeepSet("keep set is empty");
  for (const auto& l : keep) (void)layout.index_of(l);
  for (int i = 0; i < layout.num_factors(); ++i) {
    const auto& label = layout.factor(i).label;
    if (std::find(keep.begin(), keep.end(), label) != keep.end()) {
      kept_idx.push_back(i);
    } else {
      traced_idx.push_back(i);
    }
  }
}

}  // namespace

Mat partial_trace_matrix(const Mat& m, const SubsystemLayout& layout,
                         const std::vector<std::string>& keep) {
  std::vector<int> kept_idx, traced_idx;
  split_factors(layout, keep, kept_idx, traced_idx);
  const auto offK = composite_offsets(layout, kept_idx);
  const auto offT = composite_offsets(layout, traced_idx);
  const int K = static_cast<int>(offK.size());
  Mat out = Mat::Zero(K, K);
  for (int a = 0; a < K; ++a) {
    for (int b = 0; b < K; ++b) {
      std::complex<double> s = 0.0;
      for (int t : offT) s += m(offK[a] + t, offK[b] + t);
      out(a, b) = s;
    }
  }
  return out;
}

Mat partial_trace_vector(const Vec& psi, const SubsystemLayout& layout,
                         const std::vector<std::string>& keep) {
  std::vector<int> kept_idx, traced_idx;
  split_factors(layout, keep, kept_idx, traced_idx);
  const auto offK = composite_offsets(layout, kept_idx);
  const auto offT = composite_offsets(layout, traced_idx);
  const int K = static_cast<int>(offK.size());
  Mat out = Mat::Zero(K, K);
  for (int a = 0; a < K; ++a) {
    for (int b = 0; b <= a; ++b) {
      std::complex<double> s = 0.0;
      for (int t : offT) s += psi(offK[a] + t) * std::conj(psi(offK[b] + t));
      out(a, b) = s;
      out(b, a) = std::conj(s);
    }
  }
  return out;
}

DensityOperator partial_trace(const DensityOperator& rho,
                              const std::vector<std::string>& keep) {
  Mat reduced = partial_trace_matrix(rho.matrix, rho.layout, keep);
  return DensityOperator{rho.layout.sublayout(keep), reduced};
}

PureStateVector purify(const DensityOperator& rho, const std::string& ref_label) {
  if (rho.layout.has(ref_label)) {
    throw LabelCollision("reference label '" + ref_label + "' already in layout");
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(rho.matrix);
  const int d = rho.dim();
  // eigenvalues ascending; keep those above the rank cutoff, descending
  std::vector<int> support;
  for (int i = d - 1; i >= 0; --i) {
    if (es.eigenvalues()(i) > tol::rank_cutoff) support.push_back(i);
  }
  const int r = static_cast<int>(support.size());
  SubsystemLayout layout = rho.layout.with_prepended(Factor{ref_label, r});
  Vec psi = Vec::Zero(r * d);
  for (int i = 0; i < r; ++i) {
    const double lam = es.eigenvalues()(support[i]);
    psi.segment(i * d, d) = std::sqrt(lam) * es.eigenvectors().col(support[i]);
  }
  psi /= psi.norm();
  return PureStateVector{layout, psi};
}

Mat ginibre(std::mt19937_64& rng, int rows, int cols) {
  std::normal_distribution<double> n(0.0, 1.0);
  Mat g(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const double re = n(rng);
      const double im = n(rng);
      g(i, j) = std::complex<double>(re, im);
    }
  }
  return g;
}

DensityOperator random_density(uint64_t seed, const SubsystemLayout& layout, int rank) {
  const int d = layout.total_dim();
  if (rank < 1 || rank > d) {
    throw BadRank("rank " + std::to_string(rank) + " out of [1," + std::to_string(d) + "]");
  }
  std::mt19937_64 rng(seed);
  Mat g = ginibre(rng, d, rank);
  Mat m = g * g.adjoint();
  m /= m.trace().real();
  m = 0.5 * (m + Mat(m.adjoint()));  // kill roundoff asymmetry
  return validate_state(m, layout);
}

DensityOperator random_density(uint64_t seed, int dim, int rank) {
  return random_density(seed, SubsystemLayout({{"S", dim}}), rank);
}

Mat random_unitary(uint64_t seed, int dim) {
  std::mt19937_64 rng(seed);
  Mat g = ginibre(rng, dim, dim);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    std::complex<double> rii = r(i, i);
    q.col(i) *= (std::abs(rii) > 0 ? rii / std::abs(rii) : 1.0);
  }
  return q;
}

Mat embed(const Mat& op, const SubsystemLayout& layout, const std::string& label) {
  const int f = layout.index_of(label);
  const int d = layout.factor(f).dim;
  if (op.rows() != d || op.cols() != d) {
    throw DimensionMismatch("operator dim " + std::to_string(op.rows()) +
                            " does not match factor '" + label + "' dim " +
                            std::to_string(d));
  }
  int before = 1, after = 1;
  for (int i = 0; i < f; ++i) before *= layout.factor(i).dim;
  for (int i = f + 1; i < layout.num_factors(); ++i) after *= layout.factor(i).dim;
  const int n = layout.total_dim();
  Mat out = Mat::Zero(n, n);
  for (int b = 0; b < before; ++b) {
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) {
        if (op(r, c) == std::complex<double>(0.0, 0.0)) continue;
        const int row0 = (b * d + r) * after;
        const int col0 = (b * d + c) * after;
        for (int a = 0; a < after; ++a) out(row0 + a, col0 + a) = op(r, c);
      }
    }
  }
  return out;
}

uint64_t derive_seed(uint64_t seed, uint64_t index) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace qd
