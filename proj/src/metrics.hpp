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

#include "clustering.hpp"

namespace daoc {

/// Pairwise clustering accuracy. For every cluster of one side the best
/// match by F1 (set-overlap precision/recall) against the other side is
/// found; a direction score is the mean of those best matches. F1a is the
/// arithmetic and F1h the harmonic mean of the two direction scores, so
/// F1h <= F1a always, and degenerate candidate clusterings are punished by
/// the harmonic mean.
struct AccuracyReport {
  double f1a = 0.0;
  double f1h = 0.0;
  double candidate_to_truth = 0.0;  // mean best-match F1 of candidate clusters
  double truth_to_candidate = 0.0;
};

/// Duplicate clusters are excluded before scoring; an empty clustering is an
/// error.
AccuracyReport f1_scores(const Clustering& candidate, const Clustering& truth);

}  // namespace daoc
