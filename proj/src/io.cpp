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

#include "qd/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qd/format.hpp"

namespace qd {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Mat matrix_from_json(const json& rows, const char* what) {
  if (!rows.is_array() || rows.empty()) {
    throw ParseError(std::string(what) + ": matrix must be a nonempty array of rows");
  }
  const size_t n = rows.size();
  Mat m(n, n);
  for (size_t i = 0; i < n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != n) {
      throw ParseError(std::string(what) + ": matrix is not square");
    }
    for (size_t j = 0; j < n; ++j) {
      const auto& e = row[j];
      if (!e.is_array() || e.size() != 2) {
        throw ParseError(std::string(what) + ": entries must be [re, im] pairs");
      }
      m(i, j) = std::complex<double>(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

void matrix_to_json(std::ostringstream& os, const Mat& m) {
  os << "[";
  for (int i = 0; i < m.rows(); ++i) {
    if (i) os << ",";
    os << "[";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << ",";
      os << "[" << fmt_double(m(i, j).real()) << "," << fmt_double(m(i, j).imag())
         << "]";
    }
    os << "]";
  }
  os << "]";
}

}  // namespace

DensityOperator read_state_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("labels") || !j.contains("dims") || !j.contains("matrix")) {
    throw ParseError("state object needs 'labels', 'dims', 'matrix'");
  }
  const auto labels = j["labels"];
  const auto dims = j["dims"];
  if (!labels.is_array() || !dims.is_array() || labels.size() != dims.size()) {
    throw ParseError("'labels' and 'dims' must be arrays of equal length");
  }
  std::vector<Factor> factors;
  for (size_t i = 0; i < labels.size(); ++i) {
    factors.push_back({labels[i].get<std::string>(), dims[i].get<int>()});
  }
  return validate_state(matrix_from_json(j["matrix"], "state"),
                        SubsystemLayout(factors));
}

DensityOperator read_state_file(const std::string& path) {
  return read_state_json(slurp(path));
}

std::string write_state_json(const DensityOperator& rho) {
  std::ostringstream os;
  os << "{\"labels\":[";
  for (int i = 0; i < rho.layout.num_factors(); ++i) {
    if (i) os << ",";
    os << "\"" << rho.layout.factor(i).label << "\"";
  }
  os << "],\"dims\":[";
  for (int i = 0; i < rho.layout.num_factors(); ++i) {
    if (i) os << ",";
    os << rho.layout.factor(i).dim;
  }
  os << "],\"matrix\":";
  matrix_to_json(os, rho.matrix);
  os << "}";
  return os.str();
}

KrausInstrument read_instrument_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("dim") || !j.contains("outcomes")) {
    throw ParseError("instrument object needs 'dim' and 'outcomes'");
  }
  const int dim = j["dim"].get<int>();
  std::vector<std::vector<Mat>> outcomes;
  for (const auto& outcome : j["outcomes"]) {
    std::vector<Mat> ops;
    for (const auto& k : outcome) ops.push_back(matrix_from_json(k, "instrument"));
    outcomes.push_back(std::move(ops));
  }
  return KrausInstrument(dim, std::move(outcomes));
}

KrausInstrument read_instrument_file(const std::string& path) {
  return read_instrument_json(slurp(path));
}

std::string write_instrument_json(const KrausInstrument& instrument) {
  std::ostringstream os;
  os << "{\"dim\":" << instrument.dim() << ",\"outcomes\":[";
  for (int m = 0; m < instrument.num_outcomes(); ++m) {
    if (m) os << ",";
    os << "[";
    for (size_t k = 0; k < instrument.kraus(m).size(); ++k) {
      if (k) os << ",";
      std::ostringstream tmp;
      matrix_to_json(tmp, instrument.kraus(m)[k]);
      os << tmp.str();
    }
    os << "]";
  }
  os << "]}";
  return os.str();
}

}  // namespace qd
