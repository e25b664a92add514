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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "common.hpp"

namespace daoc {

/// A flat set of possibly overlapping clusters over external node labels.
/// Canonical form: members sorted ascending, no empty clusters, clusters
/// sorted lexicographically, exact duplicates removed.
struct Clustering {
  std::vector<std::vector<Label>> clusters;

  void canonicalize();
  bool empty() const noexcept { return clusters.empty(); }
  std::size_t size() const noexcept { return clusters.size(); }

  /// True when some label occurs in more than one cluster.
  bool overlapping() const;

  friend bool operator==(const Clustering&, const Clustering&) = default;
};

/// Reads a clusters file: one cluster per line as space-separated node
/// labels, `#` lines are comments. The result is canonicalized.
Clustering parse_clustering(std::string_view text);
Clustering read_clustering_file(const std::filesystem::path& path);

/// One cluster per line, members space-separated; canonical order.
std::string format_clustering(const Clustering& cl);
void write_clustering_file(const Clustering& cl, const std::filesystem::path& path);

}  // namespace daoc
