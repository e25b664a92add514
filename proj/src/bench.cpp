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

#include "bench.hpp"

#include <sys/resource.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "generator.hpp"
#include "hierarchy.hpp"

namespace daoc {

double peak_rss_mb() {
  std::ifstream status("/proc/self/status");
  std::string line;
  while (std::getline(status, line)) {
    if (line.rfind("VmHWM:", 0) == 0) {
      return std::stod(line.substr(6)) / 1024.0;  // value is in kB
    }
  }
  rusage usage{};
  if (getrusage(RUSAGE_SELF, &usage) == 0)
    return static_cast<double>(usage.ru_maxrss) / 1024.0;
  return 0.0;
}

std::vector<BenchRow> scaling_run(std::span<const std::pair<std::size_t, double>> sizes,
                                  std::uint64_t seed) {
  std::vector<BenchRow> rows;
  rows.reserve(sizes.size());
  for (const auto& [nodes, avg_degree] : sizes) {
    std::size_t communities = std::max<std::size_t>(2, nodes / 250);
    while (communities > 2 && nodes % communities != 0) --communities;
    PlantedNetwork fixture = planted_partition_avg_degree(nodes, communities, avg_degree, seed);

    const auto start = std::chrono::steady_clock::now();
    const Hierarchy h = build_hierarchy(fixture.network);
    const auto elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);

    BenchRow row;
    row.nodes = fixture.network.node_count();
    row.links = fixture.network.link_count();
    row.time_ms = elapsed.count();
    row.peak_mem_mb = peak_rss_mb();
    rows.push_back(row);
    (void)h;
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = "m,nodes,time_ms,peak_mem_mb\n";
  char buf[128];
  for (const BenchRow& r : rows) {
    std::snprintf(buf, sizeof(buf), "%zu,%zu,%.3f,%.1f\n", r.links, r.nodes, r.time_ms,
                  r.peak_mem_mb);
    out += buf;
  }
  return out;
}

double loglog_slope(const std::vector<BenchRow>& rows) {
  if (rows.size() < 2) throw InvalidArgument("slope needs at least two measurements");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const auto n = static_cast<double>(rows.size());
  for (const BenchRow& r : rows) {
    const double x = std::log(static_cast<double>(r.links));
    const double y = std::log(std::max(r.time_ms, 1e-3));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace daoc
