/* Copyright 2026 The DAOC Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the daoc shared library: deterministic parameter-free
 * agglomerative overlapping clustering of weighted networks, plus the
 * stability-evaluation toolkit (F1 accuracy, seeded link-removal protocol,
 * planted-partition fixtures, exhaustive modularity oracle).
 *
 * All objects are opaque handles created and released through this API.
 * Functions return DAOC_OK on success; on failure the out parameters are
 * untouched and daoc_last_error() describes the problem for the calling
 * thread. Every seeded operation is reproducible byte for byte.
 */

#ifndef DAOC_DAOC_H_
#define DAOC_DAOC_H_

#include <stddef.h>
#include <stdint.h>

#if defined(__cplusplus)
extern "C" {
#endif

typedef enum daoc_status {
  DAOC_OK = 0,
  DAOC_ERR_INVALID_ARGUMENT = 1,
  DAOC_ERR_PARSE = 2,
  DAOC_ERR_IO = 3,
  DAOC_ERR_UNSUPPORTED = 4,
  DAOC_ERR_INFEASIBLE = 5,
  DAOC_ERR_INTERNAL = 6
} daoc_status;

typedef struct daoc_network daoc_network;
typedef struct daoc_hierarchy daoc_hierarchy;
typedef struct daoc_clustering daoc_clustering;

/* Message of the last failure on this thread; empty string if none. */
const char* daoc_last_error(void);
const char* daoc_status_name(daoc_status status);

/* Releases a string returned by the *_text/_csv functions. */
void daoc_text_free(char* text);

/* ---- networks ------------------------------------------------------- */

/* Parses `src dst [weight]` lines; weight defaults to 1, `#` lines are
 * comments. directed != 0 symmetrizes arcs into the undirected aggregate;
 * weighted == 0 ignores weight tokens. */
daoc_status daoc_network_parse_text(const char* text, int directed, int weighted,
                                    daoc_network** out);
/* Reads a link-list file; directed < 0 infers from the extension
 * (.nsa directed, anything else undirected). */
daoc_status daoc_network_read_file(const char* path, int directed, int weighted,
                                   daoc_network** out);
void daoc_network_free(daoc_network* net);

size_t daoc_network_node_count(const daoc_network* net);
size_t daoc_network_link_count(const daoc_network* net);
double daoc_network_total_weight(const daoc_network* net);

/* Canonical serialization; parsing it back as undirected input reproduces an
 * equal network. */
daoc_status daoc_network_serialize(const daoc_network* net, char** out_text);
/* Seeded reordering of the same links; equal seeds give identical bytes. */
daoc_status daoc_network_serialize_shuffled(const daoc_network* net, uint64_t seed,
                                            char** out_text);
daoc_status daoc_network_equal(const daoc_network* a, const daoc_network* b, int* out_equal);

/* Seeded link removal retaining at least one link per node (fraction of the
 * link count, in [0,1)). */
daoc_status daoc_network_perturb(const daoc_network* net, double fraction, uint64_t seed,
                                 daoc_network** out);

/* Seeded planted-partition benchmark graph with ground-truth communities.
 * Either output may be NULL when not needed. */
daoc_status daoc_planted_partition(size_t nodes, size_t communities, double p_in, double p_out,
                                   uint64_t seed, daoc_network** out_net,
                                   daoc_clustering** out_truth);

/* ---- clustering hierarchy ------------------------------------------- */

/* Runs the deterministic agglomerative clustering, bottom level first. */
daoc_status daoc_cluster(const daoc_network* net, daoc_hierarchy** out);
void daoc_hierarchy_free(daoc_hierarchy* hierarchy);

size_t daoc_hierarchy_level_count(const daoc_hierarchy* hierarchy);
size_t daoc_hierarchy_cluster_count(const daoc_hierarchy* hierarchy, size_t level);
/* Modularity of the level's grouping with overlaps evaluated on the
 * decomposed network. */
daoc_status daoc_hierarchy_level_modularity(const daoc_hierarchy* hierarchy, size_t level,
                                            double* out_q);
/* Expansion of one level to bottom-level labels as a clustering handle. */
daoc_status daoc_hierarchy_level_clustering(const daoc_hierarchy* hierarchy, size_t level,
                                            daoc_clustering** out);
/* Writes level_<k>.cnl files plus manifest.txt into the directory. */
daoc_status daoc_hierarchy_write(const daoc_hierarchy* hierarchy, const char* directory);

/* ---- flat clusterings and accuracy ----------------------------------- */

/* Reads a clusters file: one cluster per line, space-separated labels. */
daoc_status daoc_clustering_read_file(const char* path, daoc_clustering** out);
daoc_status daoc_clustering_write_file(const daoc_clustering* clustering, const char* path);
/* One cluster per line, members space-separated, canonical order. */
daoc_status daoc_clustering_format(const daoc_clustering* clustering, char** out_text);
void daoc_clustering_free(daoc_clustering* clustering);
size_t daoc_clustering_cluster_count(const daoc_clustering* clustering);

/* Mean best-match F1 in both directions; f1a arithmetic mean, f1h harmonic.
 * Either score pointer may be NULL. */
daoc_status daoc_f1_scores(const daoc_clustering* candidate, const daoc_clustering* truth,
                           double* out_f1a, double* out_f1h);

/* Modularity of a non-overlapping complete clustering of the network. */
daoc_status daoc_modularity(const daoc_network* net, const daoc_clustering* clustering,
                            double* out_q);

/* Exhaustive best-modularity partition for networks of at most 10 nodes. */
daoc_status daoc_oracle_best_partition(const daoc_network* net, daoc_clustering** out,
                                       double* out_q);

/* ---- protocols ------------------------------------------------------- */

/* Stability protocol: cumulative 1%..15% link removal in 2% steps, each
 * stage clustered from `shuffles` seeded reorderings and scored with F1h
 * against the previous stage (middle hierarchy level). Returns the CSV
 * trace: stage,fraction,f1h_mean,f1h_std,runtime_ms. */
daoc_status daoc_stability_protocol(const daoc_network* net, unsigned shuffles, uint64_t seed,
                                    char** out_csv);

/* Scaling measurement over planted fixtures; returns CSV
 * m,nodes,time_ms,peak_mem_mb. */
daoc_status daoc_scaling_bench(const size_t* nodes, const double* avg_degrees, size_t count,
                               uint64_t seed, char** out_csv);

#if defined(__cplusplus)
}
#endif

#endif /* DAOC_DAOC_H_ */
