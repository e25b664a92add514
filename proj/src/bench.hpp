// Copyright 2026 The DAOC Authors
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

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "network.hpp"

namespace daoc {

struct BenchRow {
  std::size_t nodes = 0;
  std::size_t links = 0;
  double time_ms = 0.0;
  double peak_mem_mb = 0.0;  // process high-water RSS, indicative only
};

/// Times end-to-end clustering of seeded planted-partition fixtures on the
/// current (single) thread, one row per (node count, average degree).
std::vector<BenchRow> scaling_run(std::span<const std::pair<std::size_t, double>> sizes,
                                  std::uint64_t seed);

/// CSV rendering: m,nodes,time_ms,peak_mem_mb.
std::string bench_csv(const std::vector<BenchRow>& rows);

/// Least-squares slope of log(time) vs log(links).
double loglog_slope(const std::vector<BenchRow>& rows);

double peak_rss_mb();

}  // namespace daoc
