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

#include "qd/layout.hpp"

#include <algorithm>

namespace qd {

SubsystemLayout::SubsystemLayout(std::vector<Factor> factors)
    : factors_(std::move(factors)) {
  total_dim_ = 1;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].dim <= 0) {
      throw DimensionMismatch("factor '" + factors_[i].label +
                              "' has non-positive dimension");
    }
    for (size_t j = i + 1; j < factors_.size(); ++j) {
      if (factors_[i].label == factors_[j].label) {
        throw LabelCollision("duplicate label '" + factors_[i].label + "'");
      }
    }
    total_dim_ *= factors_[i].dim;
  }
}

bool SubsystemLayout::has(const std::string& label) const {
  return std::any_of(factors_.begin(), factors_.end(),
                     [&](const Factor& f) { return f.label == label; });
}

int SubsystemLayout::index_of(const std::string& label) const {
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].label == label) return static_cast<int>(i);
  }
  throw UnknownLabel("no factor labeled '" + label + "'");
}

int SubsystemLayout::dim_of(const std::string& label) const {
  return factors_[index_of(label)].dim;
}

std::vector<int> SubsystemLayout::strides() const {
  std::vector<int> s(factors_.size(), 1);
  for (int i = static_cast<int>(factors_.size()) - 2; i >= 0; --i) {
    s[i] = s[i + 1] * factors_[i + 1].dim;
  }
  return s;
}

SubsystemLayout SubsystemLayout::sublayout(
    const std::vector<std::string>& labels) const {
  for (const auto& l : labels) (void)index_of(l);
  std::vector<Factor> kept;
  for (const auto& f : factors_) {
    if (std::find(labels.begin(), labels.end(), f.label) != labels.end()) {
      kept.push_back(f);
    }
  }
  return SubsystemLayout(kept);
}

std::vector<std::string> SubsystemLayout::complement(
    const std::vector<std::string>& labels) const {
  std::vector<std::string> out;
  for (const auto& f : factors_) {
    if (std::find(labels.begin(), labels.end(), f.label) == labels.end()) {
      out.push_back(f.label);
    }
  }
  return out;
}

std::vector<std::string> SubsystemLayout::labels() const {
  std::vector<std::string> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.label);
  return out;
}

SubsystemLayout SubsystemLayout::with_appended(const Factor& f) const {
  auto fs = factors_;
  fs.push_back(f);
  return SubsystemLayout(fs);
}

SubsystemLayout SubsystemLayout::with_prepended(const Factor& f) const {
  std::vector<Factor> fs;
  fs.reserve(factors_.size() + 1);
  fs.push_back(f);
  fs.insert(fs.end(), factors_.begin(), factors_.end());
  return SubsystemLayout(fs);
}

SubsystemLayout SubsystemLayout::concat(const SubsystemLayout& a,
                                        const SubsystemLayout& b) {
  std::vector<Factor> fs = a.factors_;
  fs.insert(fs.end(), b.factors_.begin(), b.factors_.end());
  return SubsystemLayout(fs);  // constructor rejects collisions
}

bool SubsystemLayout::operator==(const SubsystemLayout& o) const {
  if (factors_.size() != o.factors_.size()) return false;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].label != o.factors_[i].label ||
        factors_[i].dim != o.factors_[i].dim) {
      return false;
    }
  }
  return true;
}

}  // namespace qd
