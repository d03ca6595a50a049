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

#include "qd/measurement.hpp"

namespace qd {

// JSON state format: {"labels": [..], "dims": [..], "matrix": [[[re,im],..],..]}.
// The reader validates the state. Throws ParseError on malformed input and
// the validation errors otherwise.
DensityOperator read_state_json(const std::string& text);
DensityOperator read_state_file(const std::string& path);
std::string write_state_json(const DensityOperator& rho);

// JSON instrument format: {"dim": int, "outcomes": [[matrix, ..], ..]} with
// the same complex-entry encoding as the state format.
KrausInstrument read_instrument_json(const std::string& text);
KrausInstrument read_instrument_file(const std::string& path);
std::string write_instrument_json(const KrausInstrument& instrument);

}  // namespace qd
