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

#include "metrics.hpp"

#include <algorithm>
#include <unordered_map>

namespace daoc {

namespace {

/// Mean over `from` clusters of the best F1 against any `to` cluster,
/// computed through a label -> clusters index of `to`.
double direction_score(const std::vector<std::vector<Label>>& from,
                       const std::vector<std::vector<Label>>& to) {
  std::unordered_map<Label, std::vector<std::uint32_t>> index;
  for (std::uint32_t c = 0; c < to.size(); ++c) {
    for (Label l : to[c]) index[l].push_back(c);
  }
  double sum = 0.0;
  std::unordered_map<std::uint32_t, std::size_t> overlap;
  for (const auto& cluster : from) {
    overlap.clear();
    for (Label l : cluster) {
      auto it = index.find(l);
      if (it == index.end()) continue;
      for (std::uint32_t c : it->second) ++overlap[c];
    }
    double best = 0.0;
    for (const auto& [c, common] : overlap) {
      const double f1 = 2.0 * static_cast<double>(common) /
                        static_cast<double>(cluster.size() + to[c].size());
      best = std::max(best, f1);
    }
    sum += best;
  }
  return sum / static_cast<double>(from.size());
}

}  // namespace

AccuracyReport f1_scores(const Clustering& candidate, const Clustering& truth) {
  Clustering cand = candidate;
  Clustering ref = truth;
  cand.canonicalize();  // drops duplicated clusters
  ref.canonicalize();
  if (cand.empty() || ref.empty()) throw InvalidArgument("cannot score an empty clustering");

  AccuracyReport report;
  report.candidate_to_truth = direction_score(cand.clusters, ref.clusters);
  report.truth_to_candidate = direction_score(ref.clusters, cand.clusters);
  report.f1a = 0.5 * (report.candidate_to_truth + report.truth_to_candidate);
  const double sum = report.candidate_to_truth + report.truth_to_candidate;
  report.f1h = sum > 0.0 ? 2.0 * report.candidate_to_truth * report.truth_to_candidate / sum
                         : 0.0;
  return report;
}

}  // namespace daoc
