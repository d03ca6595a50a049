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

// Compares the serial oracle-grid kernel against the parallel one.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "qd/families.hpp"
#include "qd/optimizer.hpp"

int main(int argc, char** argv) {
  const int resolution = argc > 1 ? std::atoi(argv[1]) : 128;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;

  qd::DensityOperator rho = qd::werner(0.7);

  using clock = std::chrono::steady_clock;
  auto time_it = [&](auto&& fn) {
    double best = 1e300;
    double value = 0.0;
    for (int r = 0; r < repeats; ++r) {
      const auto t0 = clock::now();
      value = fn();
      const auto t1 = clock::now();
      best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return std::pair<double, double>(best, value);
  };

  const auto [t_serial, v_serial] =
      time_it([&] { return qd::brute_force_oracle_serial(rho, "B", resolution); });
  const auto [t_parallel, v_parallel] =
      time_it([&] { return qd::brute_force_oracle(rho, "B", resolution); });

  std::printf("oracle grid %d x %d on werner(0.7)\n", resolution, 2 * resolution);
  std::printf("serial:   %.3f s  (min = %.12g)\n", t_serial, v_serial);
  std::printf("parallel: %.3f s  (min = %.12g)\n", t_parallel, v_parallel);
  std::printf("speedup:  %.2fx\n", t_serial / t_parallel);
  if (v_serial != v_parallel) {
    std::printf("MISMATCH between serial and parallel results\n");
    return 1;
  }
  return 0;
}
