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

#pragma once

#include <string>
#include <vector>

#include "qd/errors.hpp"

namespace qd {

struct Factor {
  std::string label;
  int dim = 0;
};

/// Ordered tensor-factor structure. Indexing is row-major: the last factor
/// varies fastest. The factor order is authoritative; no operation reorders
/// factors silently.
class SubsystemLayout {
 public:
  SubsystemLayout() = default;
  explicit SubsystemLayout(std::vector<Factor> factors);

  int total_dim() const { return total_dim_; }
  int num_factors() const { return static_cast<int>(factors_.size()); }
  const std::vector<Factor>& factors() const { return factors_; }
  const Factor& factor(int i) const { return factors_.at(i); }

  bool has(const std::string& label) const;
  int index_of(const std::string& label) const;  // throws UnknownLabel
  int dim_of(const std::string& label) const;

  /// Row-major strides, one per factor.
  std::vector<int> strides() const;

  /// Sub-layout containing exactly the given labels, in this layout's order.
  SubsystemLayout sublayout(const std::vector<std::string>& labels) const;

  /// Labels not in the given set, in this layout's order.
  std::vector<std::string> complement(const std::vector<std::string>& labels) const;

  std::vector<std::string> labels() const;

  SubsystemLayout with_appended(const Factor& f) const;
  SubsystemLayout with_prepended(const Factor& f) const;

  static SubsystemLayout concat(const SubsystemLayout& a, const SubsystemLayout& b);

  bool operator==(const SubsystemLayout& o) const;

 private:
  std::vector<Factor> factors_;
  int total_dim_ = 1;
};

}  // namespace qd
