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

#include "network.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <tuple>

#include "prng.hpp"

namespace daoc {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && is_space(line[pos])) ++pos;
    std::size_t start = pos;
    while (pos < line.size() && !is_space(line[pos])) ++pos;
    if (pos > start) tokens.push_back(line.substr(start, pos - start));
  }
  return tokens;
}

bool parse_label(std::string_view token, Label& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

bool parse_weight(std::string_view token, double& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && std::isfinite(out);
}

std::string lowercase(std::string_view token) {
  std::string s(token);
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

bool is_header_keyword(std::string_view token) {
  std::string word = lowercase(token);
  if (auto colon = word.find_first_of(":="); colon != std::string::npos) word.resize(colon);
  return word == "nodes" || word == "vertices" || word == "arcs" || word == "edges" ||
         word == "links";
}

void format_weight(std::string& out, double w) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", w);
  out += buf;
}

}  // namespace

double Network::link_weight(NodeId i, NodeId j) const {
  const auto nbrs = neighbors(i);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), j,
                             [](const Arc& a, NodeId id) { return a.dst < id; });
  return (it != nbrs.end() && it->dst == j) ? it->weight : 0.0;
}

double Network::pair_weight(NodeId i, NodeId j) const {
  if (i == j) return self_weight_[i];
  return 2.0 * link_weight(i, j);
}

std::optional<NodeId> Network::find_label(Label label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<NodeId>(it - labels_.begin());
}

void NetworkBuilder::add_link(Label a, Label b, double weight) {
  if (a > b) std::swap(a, b);
  entries_.push_back({a, b, weight});
}

void NetworkBuilder::add_arc(Label src, Label dst, double weight) {
  if (src == dst) {
    entries_.push_back({src, dst, weight});
    return;
  }
  if (src > dst) std::swap(src, dst);
  entries_.push_back({src, dst, weight * 0.5});
}

void NetworkBuilder::ensure_node(Label label) { isolated_.push_back(label); }

Network NetworkBuilder::build() && {
  // Dense ids by ascending external label.
  std::vector<Label> labels;
  labels.reserve(entries_.size() * 2 + isolated_.size());
  for (const Entry& e : entries_) {
    labels.push_back(e.a);
    labels.push_back(e.b);
  }
  labels.insert(labels.end(), isolated_.begin(), isolated_.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  auto id_of = [&labels](Label l) {
    return static_cast<NodeId>(std::lower_bound(labels.begin(), labels.end(), l) -
                               labels.begin());
  };

  struct RawArc {
    NodeId a, b;  // a <= b
    double weight;
  };
  std::vector<RawArc> raw;
  raw.reserve(entries_.size());
  for (const Entry& e : entries_) raw.push_back({id_of(e.a), id_of(e.b), e.weight});
  // Sorting by value as well makes duplicate aggregation independent of the
  // insertion order even in floating point.
  std::sort(raw.begin(), raw.end(), [](const RawArc& x, const RawArc& y) {
    return std::tie(x.a, x.b, x.weight) < std::tie(y.a, y.b, y.weight);
  });

  const std::size_t n = labels.size();
  Network net;
  net.labels_ = std::move(labels);
  net.self_weight_.assign(n, 0.0);
  net.node_weight_.assign(n, 0.0);

  struct PairWeight {
    NodeId a, b;
    double weight;
  };
  std::vector<PairWeight> pairs;
  pairs.reserve(raw.size());
  for (std::size_t k = 0; k < raw.size();) {
    const NodeId a = raw[k].a, b = raw[k].b;
    double sum = 0.0;
    for (; k < raw.size() && raw[k].a == a && raw[k].b == b; ++k) sum += raw[k].weight;
    if (a == b) {
      net.self_weight_[a] += sum;
    } else {
      pairs.push_back({a, b, sum});
    }
  }

  std::vector<std::size_t> deg(n, 0);
  for (const PairWeight& p : pairs) {
    ++deg[p.a];
    ++deg[p.b];
  }
  net.offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) net.offsets_[i + 1] = net.offsets_[i] + deg[i];
  net.arcs_.resize(net.offsets_[n]);
  std::vector<std::size_t> cursor(net.offsets_.begin(), net.offsets_.end() - 1);
  // Pairs are visited in ascending (a, b); filling a's slots in that order
  // leaves every adjacency sorted. The reverse arcs land sorted too because
  // b's neighbors arrive in ascending a.
  for (const PairWeight& p : pairs) net.arcs_[cursor[p.a]++] = {p.b, p.weight};
  for (const PairWeight& p : pairs) net.arcs_[cursor[p.b]++] = {p.a, p.weight};
  for (std::size_t i = 0; i < n; ++i) {
    auto begin = net.arcs_.begin() + static_cast<std::ptrdiff_t>(net.offsets_[i]);
    auto end = net.arcs_.begin() + static_cast<std::ptrdiff_t>(net.offsets_[i + 1]);
    std::sort(begin, end, [](const Arc& x, const Arc& y) { return x.dst < y.dst; });
  }

  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double wi = 2.0 * net.self_weight_[i];
    for (const Arc& arc : net.neighbors(static_cast<NodeId>(i))) wi += arc.weight;
    net.node_weight_[i] = wi;
    total += net.self_weight_[i];
  }
  for (const PairWeight& p : pairs) total += p.weight;
  net.total_weight_ = total;
  return net;
}

Network parse_network(std::string_view text, bool directed, bool weighted) {
  NetworkBuilder builder;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool saw_content = false;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;

    const auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    if (tokens[0][0] == '#') continue;
    if (!saw_content && is_header_keyword(tokens[0])) continue;  // counts are advisory
    saw_content = true;

    if (tokens.size() < 2 || tokens.size() > 3)
      throw ParseError("expected `src dst [weight]`", line_no);
    Label src, dst;
    if (!parse_label(tokens[0], src)) throw ParseError("invalid node label", line_no);
    if (!parse_label(tokens[1], dst)) throw ParseError("invalid node label", line_no);
    double weight = 1.0;
    if (tokens.size() == 3 && weighted) {
      if (!parse_weight(tokens[2], weight)) throw ParseError("invalid weight", line_no);
      if (weight < 0.0) throw ParseError("negative weight", line_no);
    }
    if (directed) {
      builder.add_arc(src, dst, weight);
    } else {
      builder.add_link(src, dst, weight);
    }
  }
  if (!saw_content) throw ParseError("empty input", line_no == 0 ? 1 : line_no);
  return std::move(builder).build();
}

Network read_network_file(const std::filesystem::path& path, std::optional<bool> directed,
                          bool weighted) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  const bool dir = directed.value_or(path.extension() == ".nsa");
  try {
    return parse_network(buf.str(), dir, weighted);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.line());
  }
}

namespace {

struct Line {
  Label a, b;
  double weight;
};

std::vector<Line> collect_lines(const Network& net) {
  std::vector<Line> lines;
  lines.reserve(net.link_count() + net.node_count());
  for (NodeId i = 0; i < net.node_count(); ++i) {
    if (net.self_weight(i) != 0.0) lines.push_back({net.label(i), net.label(i), net.self_weight(i)});
    for (const Arc& arc : net.neighbors(i)) {
      if (arc.dst > i) lines.push_back({net.label(i), net.label(arc.dst), arc.weight});
    }
  }
  return lines;
}

std::string render_lines(const std::vector<Line>& lines) {
  std::string out;
  out.reserve(lines.size() * 16);
  for (const Line& l : lines) {
    out += std::to_string(l.a);
    out += ' ';
    out += std::to_string(l.b);
    out += ' ';
    format_weight(out, l.weight);
    out += '\n';
  }
  return out;
}

}  // namespace

std::string serialize_network(const Network& net) { return render_lines(collect_lines(net)); }

std::string serialize_shuffled(const Network& net, std::uint64_t seed) {
  std::vector<Line> lines = collect_lines(net);
  SplitMix64 rng(seed);
  shuffle(lines, rng);
  for (Line& l : lines) {
    if (l.a != l.b && (rng.next() & 1u)) std::swap(l.a, l.b);
  }
  return render_lines(lines);
}

}  // namespace daoc
