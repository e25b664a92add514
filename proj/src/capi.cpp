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

#include "daoc/daoc.h"

#include <cstring>
#include <new>
#include <string>
#include <utility>

#include "bench.hpp"
#include "clustering.hpp"
#include "common.hpp"
#include "generator.hpp"
#include "hierarchy.hpp"
#include "metrics.hpp"
#include "network.hpp"
#include "oracle.hpp"
#include "perturb.hpp"
#include "quality.hpp"

struct daoc_network {
  daoc::Network impl;
};
struct daoc_hierarchy {
  daoc::Hierarchy impl;
};
struct daoc_clustering {
  daoc::Clustering impl;
};

namespace {

thread_local std::string g_last_error;

template <class Fn>
daoc_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    g_last_error.clear();
    return DAOC_OK;
  } catch (const daoc::ParseError& e) {
    g_last_error = e.what();
    return DAOC_ERR_PARSE;
  } catch (const daoc::IoError& e) {
    g_last_error = e.what();
    return DAOC_ERR_IO;
  } catch (const daoc::Unsupported& e) {
    g_last_error = e.what();
    return DAOC_ERR_UNSUPPORTED;
  } catch (const daoc::Infeasible& e) {
    g_last_error = e.what();
    return DAOC_ERR_INFEASIBLE;
  } catch (const daoc::InvalidArgument& e) {
    g_last_error = e.what();
    return DAOC_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DAOC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return DAOC_ERR_INTERNAL;
  }
}

daoc_status require(bool ok, const char* message) noexcept {
  if (ok) return DAOC_OK;
  g_last_error = message;
  return DAOC_ERR_INVALID_ARGUMENT;
}

char* copy_text(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* daoc_last_error(void) { return g_last_error.c_str(); }

const char* daoc_status_name(daoc_status status) {
  switch (status) {
    case DAOC_OK: return "ok";
    case DAOC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case DAOC_ERR_PARSE: return "parse error";
    case DAOC_ERR_IO: return "io error";
    case DAOC_ERR_UNSUPPORTED: return "unsupported";
    case DAOC_ERR_INFEASIBLE: return "infeasible";
    case DAOC_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

void daoc_text_free(char* text) { delete[] text; }

daoc_status daoc_network_parse_text(const char* text, int directed, int weighted,
                                    daoc_network** out) {
  if (auto s = require(text && out, "null argument")) return s;
  return guarded([&] {
    auto net = new daoc_network{daoc::parse_network(text, directed != 0, weighted != 0)};
    *out = net;
  });
}

daoc_status daoc_network_read_file(const char* path, int directed, int weighted,
                                   daoc_network** out) {
  if (auto s = require(path && out, "null argument")) return s;
  return guarded([&] {
    std::optional<bool> dir;
    if (directed >= 0) dir = directed != 0;
    *out = new daoc_network{daoc::read_network_file(path, dir, weighted != 0)};
  });
}

void daoc_network_free(daoc_network* net) { delete net; }

size_t daoc_network_node_count(const daoc_network* net) {
  return net ? net->impl.node_count() : 0;
}

size_t daoc_network_link_count(const daoc_network* net) {
  return net ? net->impl.link_count() : 0;
}

double daoc_network_total_weight(const daoc_network* net) {
  return net ? net->impl.total_weight() : 0.0;
}

daoc_status daoc_network_serialize(const daoc_network* net, char** out_text) {
  if (auto s = require(net && out_text, "null argument")) return s;
  return guarded([&] { *out_text = copy_text(daoc::serialize_network(net->impl)); });
}

daoc_status daoc_network_serialize_shuffled(const daoc_network* net, uint64_t seed,
                                            char** out_text) {
  if (auto s = require(net && out_text, "null argument")) return s;
  return guarded([&] { *out_text = copy_text(daoc::serialize_shuffled(net->impl, seed)); });
}

daoc_status daoc_network_equal(const daoc_network* a, const daoc_network* b, int* out_equal) {
  if (auto s = require(a && b && out_equal, "null argument")) return s;
  *out_equal = a->impl == b->impl ? 1 : 0;
  return DAOC_OK;
}

daoc_status daoc_network_perturb(const daoc_network* net, double fraction, uint64_t seed,
                                 daoc_network** out) {
  if (auto s = require(net && out, "null argument")) return s;
  return guarded([&] { *out = new daoc_network{daoc::perturb(net->impl, fraction, seed)}; });
}

daoc_status daoc_planted_partition(size_t nodes, size_t communities, double p_in, double p_out,
                                   uint64_t seed, daoc_network** out_net,
                                   daoc_clustering** out_truth) {
  if (auto s = require(out_net || out_truth, "null argument")) return s;
  return guarded([&] {
    daoc::PlantedNetwork planted =
        daoc::planted_partition(nodes, communities, p_in, p_out, seed);
    if (out_net) *out_net = new daoc_network{std::move(planted.network)};
    if (out_truth) *out_truth = new daoc_clustering{std::move(planted.truth)};
  });
}

daoc_status daoc_cluster(const daoc_network* net, daoc_hierarchy** out) {
  if (auto s = require(net && out, "null argument")) return s;
  return guarded([&] { *out = new daoc_hierarchy{daoc::build_hierarchy(net->impl)}; });
}

void daoc_hierarchy_free(daoc_hierarchy* hierarchy) { delete hierarchy; }

size_t daoc_hierarchy_level_count(const daoc_hierarchy* hierarchy) {
  return hierarchy ? hierarchy->impl.level_count() : 0;
}

size_t daoc_hierarchy_cluster_count(const daoc_hierarchy* hierarchy, size_t level) {
  if (!hierarchy || level >= hierarchy->impl.level_count()) return 0;
  return hierarchy->impl.levels()[level].clusters.size();
}

daoc_status daoc_hierarchy_level_modularity(const daoc_hierarchy* hierarchy, size_t level,
                                            double* out_q) {
  if (auto s = require(hierarchy && out_q, "null argument")) return s;
  if (auto s = require(level < hierarchy->impl.level_count(), "level index out of range"))
    return s;
  *out_q = hierarchy->impl.levels()[level].modularity;
  return DAOC_OK;
}

daoc_status daoc_hierarchy_level_clustering(const daoc_hierarchy* hierarchy, size_t level,
                                            daoc_clustering** out) {
  if (auto s = require(hierarchy && out, "null argument")) return s;
  return guarded(
      [&] { *out = new daoc_clustering{hierarchy->impl.level_clustering(level)}; });
}

daoc_status daoc_hierarchy_write(const daoc_hierarchy* hierarchy, const char* directory) {
  if (auto s = require(hierarchy && directory, "null argument")) return s;
  return guarded([&] { daoc::write_hierarchy(hierarchy->impl, directory); });
}

daoc_status daoc_clustering_read_file(const char* path, daoc_clustering** out) {
  if (auto s = require(path && out, "null argument")) return s;
  return guarded([&] { *out = new daoc_clustering{daoc::read_clustering_file(path)}; });
}

daoc_status daoc_clustering_write_file(const daoc_clustering* clustering, const char* path) {
  if (auto s = require(clustering && path, "null argument")) return s;
  return guarded([&] { daoc::write_clustering_file(clustering->impl, path); });
}

daoc_status daoc_clustering_format(const daoc_clustering* clustering, char** out_text) {
  if (auto s = require(clustering && out_text, "null argument")) return s;
  return guarded([&] { *out_text = copy_text(daoc::format_clustering(clustering->impl)); });
}

void daoc_clustering_free(daoc_clustering* clustering) { delete clustering; }

size_t daoc_clustering_cluster_count(const daoc_clustering* clustering) {
  return clustering ? clustering->impl.size() : 0;
}

daoc_status daoc_f1_scores(const daoc_clustering* candidate, const daoc_clustering* truth,
                           double* out_f1a, double* out_f1h) {
  if (auto s = require(candidate && truth, "null argument")) return s;
  return guarded([&] {
    const daoc::AccuracyReport report = daoc::f1_scores(candidate->impl, truth->impl);
    if (out_f1a) *out_f1a = report.f1a;
    if (out_f1h) *out_f1h = report.f1h;
  });
}

daoc_status daoc_modularity(const daoc_network* net, const daoc_clustering* clustering,
                            double* out_q) {
  if (auto s = require(net && clustering && out_q, "null argument")) return s;
  return guarded([&] { *out_q = daoc::modularity(net->impl, clustering->impl); });
}

daoc_status daoc_oracle_best_partition(const daoc_network* net, daoc_clustering** out,
                                       double* out_q) {
  if (auto s = require(net && out, "null argument")) return s;
  return guarded([&] {
    daoc::OracleResult result = daoc::best_partition_exhaustive(net->impl);
    if (out_q) *out_q = result.q;
    *out = new daoc_clustering{std::move(result.partition)};
  });
}

daoc_status daoc_stability_protocol(const daoc_network* net, unsigned shuffles, uint64_t seed,
                                    char** out_csv) {
  if (auto s = require(net && out_csv, "null argument")) return s;
  return guarded([&] {
    *out_csv =
        copy_text(daoc::protocol_csv(daoc::run_stability_protocol(net->impl, shuffles, seed)));
  });
}

daoc_status daoc_scaling_bench(const size_t* nodes, const double* avg_degrees, size_t count,
                               uint64_t seed, char** out_csv) {
  if (auto s = require(nodes && avg_degrees && count > 0 && out_csv, "null argument")) return s;
  return guarded([&] {
    std::vector<std::pair<std::size_t, double>> sizes;
    sizes.reserve(count);
    for (size_t i = 0; i < count; ++i) sizes.emplace_back(nodes[i], avg_degrees[i]);
    *out_csv = copy_text(daoc::bench_csv(daoc::scaling_run(sizes, seed)));
  });
}

}  // extern "C"
