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

// Command-line front end over the daoc C API. Exit codes: 0 success,
// 1 runtime error, 2 usage error (including unreadable input files).

#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "daoc/daoc.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

int fail(daoc_status status) {
  std::fprintf(stderr, "error: %s (%s)\n", daoc_last_error(), daoc_status_name(status));
  return status == DAOC_ERR_IO || status == DAOC_ERR_INVALID_ARGUMENT ? kExitUsage
                                                                      : kExitRuntime;
}

struct NetworkHandle {
  daoc_network* ptr = nullptr;
  ~NetworkHandle() { daoc_network_free(ptr); }
};
struct HierarchyHandle {
  daoc_hierarchy* ptr = nullptr;
  ~HierarchyHandle() { daoc_hierarchy_free(ptr); }
};
struct ClusteringHandle {
  daoc_clustering* ptr = nullptr;
  ~ClusteringHandle() { daoc_clustering_free(ptr); }
};
struct TextHandle {
  char* ptr = nullptr;
  ~TextHandle() { daoc_text_free(ptr); }
};

int load_network(const std::string& path, bool directed_flag, bool unweighted,
                 NetworkHandle& net) {
  // -1 lets the library infer directedness from the extension (.nsa).
  const int directed = directed_flag ? 1 : -1;
  if (daoc_status s = daoc_network_read_file(path.c_str(), directed, unweighted ? 0 : 1,
                                             &net.ptr))
    return fail(s);
  return kExitOk;
}

int write_text_file(const std::string& path, const char* text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::fprintf(stderr, "error: cannot open %s for writing\n", path.c_str());
    return kExitUsage;
  }
  out << text;
  if (!out) {
    std::fprintf(stderr, "error: write failed: %s\n", path.c_str());
    return kExitRuntime;
  }
  return kExitOk;
}

int run_cluster(const std::string& input, const std::string& output, bool directed,
                bool unweighted) {
  NetworkHandle net;
  if (int rc = load_network(input, directed, unweighted, net)) return rc;
  HierarchyHandle hierarchy;
  if (daoc_status s = daoc_cluster(net.ptr, &hierarchy.ptr)) return fail(s);
  if (daoc_status s = daoc_hierarchy_write(hierarchy.ptr, output.c_str())) return fail(s);

  const size_t levels = daoc_hierarchy_level_count(hierarchy.ptr);
  std::printf("levels %zu\n", levels);
  for (size_t l = 0; l < levels; ++l) {
    double q = 0.0;
    daoc_hierarchy_level_modularity(hierarchy.ptr, l, &q);
    std::printf("level %zu clusters %zu modularity %.6f\n", l + 1,
                daoc_hierarchy_cluster_count(hierarchy.ptr, l), q);
  }
  return kExitOk;
}

int run_eval(const std::string& candidate_path, const std::string& truth_path) {
  ClusteringHandle candidate, truth;
  if (daoc_status s = daoc_clustering_read_file(candidate_path.c_str(), &candidate.ptr))
    return fail(s);
  if (daoc_status s = daoc_clustering_read_file(truth_path.c_str(), &truth.ptr))
    return fail(s);
  double f1a = 0.0, f1h = 0.0;
  if (daoc_status s = daoc_f1_scores(candidate.ptr, truth.ptr, &f1a, &f1h)) return fail(s);
  std::printf("F1a %.6f\nF1h %.6f\n", f1a, f1h);
  return kExitOk;
}

int run_perturb(const std::string& input, const std::string& output, double fraction,
                uint64_t seed, bool directed, bool unweighted) {
  NetworkHandle net;
  if (int rc = load_network(input, directed, unweighted, net)) return rc;
  NetworkHandle perturbed;
  if (daoc_status s = daoc_network_perturb(net.ptr, fraction, seed, &perturbed.ptr))
    return fail(s);
  TextHandle text;
  if (daoc_status s = daoc_network_serialize(perturbed.ptr, &text.ptr)) return fail(s);
  return write_text_file(output, text.ptr);
}

// Condenses the protocol CSV into per-stage summary lines.
void print_protocol_summary(const char* csv) {
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    int stage = 0;
    double fraction = 0, mean = 0, dev = 0, ms = 0;
    if (std::sscanf(line.c_str(), "%d,%lf,%lf,%lf,%lf", &stage, &fraction, &mean, &dev,
                    &ms) == 5) {
      std::printf("stage %d: removed %2.0f%%  f1h %.6f +- %.6f  (%.0f ms)\n", stage,
                  fraction * 100.0, mean, dev, ms);
    }
  }
}

int run_protocol(const std::string& input, uint64_t seed, unsigned shuffles,
                 const std::string& output, bool directed, bool unweighted) {
  NetworkHandle net;
  if (int rc = load_network(input, directed, unweighted, net)) return rc;
  TextHandle csv;
  if (daoc_status s = daoc_stability_protocol(net.ptr, shuffles, seed, &csv.ptr))
    return fail(s);
  if (!output.empty()) {
    if (int rc = write_text_file(output, csv.ptr)) return rc;
    print_protocol_summary(csv.ptr);
    return kExitOk;
  }
  std::fputs(csv.ptr, stdout);
  return kExitOk;
}

int run_oracle(const std::string& input, bool directed, bool unweighted) {
  NetworkHandle net;
  if (int rc = load_network(input, directed, unweighted, net)) return rc;
  ClusteringHandle best;
  double q = 0.0;
  if (daoc_status s = daoc_oracle_best_partition(net.ptr, &best.ptr, &q)) return fail(s);
  TextHandle text;
  if (daoc_status s = daoc_clustering_format(best.ptr, &text.ptr)) return fail(s);
  std::fputs(text.ptr, stdout);
  std::printf("Q* %.6f\n", q);
  return kExitOk;
}

int run_generate(size_t nodes, size_t communities, double p_in, double p_out, uint64_t seed,
                 const std::string& output_prefix) {
  daoc_network* net_raw = nullptr;
  daoc_clustering* truth_raw = nullptr;
  if (daoc_status s =
          daoc_planted_partition(nodes, communities, p_in, p_out, seed, &net_raw, &truth_raw))
    return fail(s);
  NetworkHandle net{net_raw};
  ClusteringHandle truth{truth_raw};

  TextHandle text;
  if (daoc_status s = daoc_network_serialize(net.ptr, &text.ptr)) return fail(s);
  if (int rc = write_text_file(output_prefix + ".nsl", text.ptr)) return rc;
  if (daoc_status s =
          daoc_clustering_write_file(truth.ptr, (output_prefix + "_truth.cnl").c_str()))
    return fail(s);
  std::printf("nodes %zu links %zu\n", daoc_network_node_count(net.ptr),
              daoc_network_link_count(net.ptr));
  return kExitOk;
}

int run_bench(const std::vector<size_t>& nodes, double degree, uint64_t seed,
              const std::string& output) {
  std::vector<double> degrees(nodes.size(), degree);
  TextHandle csv;
  if (daoc_status s =
          daoc_scaling_bench(nodes.data(), degrees.data(), nodes.size(), seed, &csv.ptr))
    return fail(s);
  if (!output.empty()) return write_text_file(output, csv.ptr);
  std::fputs(csv.ptr, stdout);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"daoc: deterministic agglomerative overlapping clustering"};
  app.require_subcommand(1);

  std::string input, output, truth_path;
  bool directed = false, unweighted = false;
  double fraction = 0.0;
  uint64_t seed = 0;
  unsigned shuffles = 4;
  size_t nodes = 0, communities = 0;
  double p_in = 0.0, p_out = 0.0, degree = 20.0;
  std::vector<size_t> bench_nodes;

  auto* cluster = app.add_subcommand("cluster", "cluster a network into a hierarchy");
  cluster->add_option("-i,--input", input, "input network (.nsl/.nse/.nsa)")->required();
  cluster->add_option("-o,--output", output, "output directory")->required();
  cluster->add_flag("-d,--directed", directed, "treat input as directed");
  cluster->add_flag("--unweighted", unweighted, "ignore weight tokens");

  auto* eval = app.add_subcommand("eval", "score a clustering against a reference");
  eval->add_option("candidate", input, "candidate clusters file")->required();
  eval->add_option("truth", truth_path, "reference clusters file")->required();

  auto* perturb = app.add_subcommand("perturb", "randomly remove links, keeping degrees >= 1");
  perturb->add_option("-i,--input", input)->required();
  perturb->add_option("-o,--output", output, "output network file")->required();
  perturb->add_option("-f,--fraction", fraction, "fraction of links to remove")->required();
  perturb->add_option("-s,--seed", seed, "random seed")->required();
  perturb->add_flag("-d,--directed", directed);
  perturb->add_flag("--unweighted", unweighted);

  auto* protocol = app.add_subcommand("protocol", "stability protocol (1%..15% link removal)");
  protocol->add_option("-i,--input", input)->required();
  protocol->add_option("-s,--seed", seed, "random seed")->required();
  protocol->add_option("--shuffles", shuffles, "reorderings per stage (default 4)");
  protocol->add_option("-o,--output", output, "CSV output file (default stdout)");
  protocol->add_flag("-d,--directed", directed);
  protocol->add_flag("--unweighted", unweighted);

  auto* oracle = app.add_subcommand("oracle", "exhaustive best-modularity partition (n <= 10)");
  oracle->add_option("-i,--input", input)->required();
  oracle->add_flag("-d,--directed", directed);
  oracle->add_flag("--unweighted", unweighted);

  auto* generate = app.add_subcommand("generate", "seeded planted-partition fixture");
  generate->add_option("-n,--nodes", nodes, "node count")->required();
  generate->add_option("-k,--communities", communities, "community count")->required();
  generate->add_option("--p-in", p_in, "intra-community link probability")->required();
  generate->add_option("--p-out", p_out, "inter-community link probability")->required();
  generate->add_option("-s,--seed", seed, "random seed")->required();
  generate->add_option("-o,--output", output, "output prefix")->required();

  auto* bench = app.add_subcommand("bench", "scaling measurement on planted fixtures");
  bench->add_option("--nodes", bench_nodes, "node counts")->required()->delimiter(',');
  bench->add_option("--degree", degree, "average degree (default 20)");
  bench->add_option("-s,--seed", seed, "random seed")->required();
  bench->add_option("-o,--output", output, "CSV output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  if (cluster->parsed()) return run_cluster(input, output, directed, unweighted);
  if (eval->parsed()) return run_eval(input, truth_path);
  if (perturb->parsed())
    return run_perturb(input, output, fraction, seed, directed, unweighted);
  if (protocol->parsed())
    return run_protocol(input, seed, shuffles, output, directed, unweighted);
  if (oracle->parsed()) return run_oracle(input, directed, unweighted);
  if (generate->parsed())
    return run_generate(nodes, communities, p_in, p_out, seed, output);
  if (bench->parsed()) return run_bench(bench_nodes, degree, seed, output);
  return kExitUsage;
}
