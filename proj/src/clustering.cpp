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

#include "clustering.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace daoc {

void Clustering::canonicalize() {
  for (auto& members : clusters) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
  }
  std::erase_if(clusters, [](const auto& members) { return members.empty(); });
  std::sort(clusters.begin(), clusters.end());
  clusters.erase(std::unique(clusters.begin(), clusters.end()), clusters.end());
}

bool Clustering::overlapping() const {
  std::unordered_set<Label> seen;
  for (const auto& members : clusters) {
    for (Label l : members) {
      if (!seen.insert(l).second) return true;
    }
  }
  return false;
}

Clustering parse_clustering(std::string_view text) {
  Clustering cl;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;

    std::vector<Label> members;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
      if (i == start) break;
      std::string_view token = line.substr(start, i - start);
      if (token[0] == '#') break;  // comment, rest of line ignored
      Label label;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), label);
      if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError("invalid node label", line_no);
      members.push_back(label);
    }
    if (!members.empty()) cl.clusters.push_back(std::move(members));
  }
  cl.canonicalize();
  return cl;
}

Clustering read_clustering_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_clustering(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.line());
  }
}

std::string format_clustering(const Clustering& cl) {
  std::string out;
  for (const auto& members : cl.clusters) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(members[i]);
    }
    out += '\n';
  }
  return out;
}

void write_clustering_file(const Clustering& cl, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << format_clustering(cl);
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace daoc
