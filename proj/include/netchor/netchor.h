/*
 * netchor C API.
 *
 * Graphs are opaque handles. Every fallible call returns an nc_status; on
 * failure nc_last_error() describes the problem for the calling thread.
 * Strings returned through char** out-parameters are owned by the caller and
 * released with nc_string_free().
 */
#ifndef NETCHOR_H
#define NETCHOR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define NC_API __declspec(dllexport)
#else
#define NC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as CLI exit codes. */
typedef enum nc_status {
  NC_OK = 0,
  NC_ERR_VALIDATION = 1,
  NC_ERR_INPUT = 2,
  NC_ERR_NUMERICAL = 3,
  NC_ERR_INTERNAL = 4
} nc_status;

typedef enum nc_format { NC_FORMAT_JSON = 0, NC_FORMAT_CSV = 1 } nc_format;

typedef enum nc_strategy { NC_STRATEGY_ERROR = 0, NC_STRATEGY_ATTACK = 1 } nc_strategy;

typedef enum nc_dynamics {
  NC_DYNAMICS_ZERO = 0,
  NC_DYNAMICS_LINEAR = 1,
  NC_DYNAMICS_LOGISTIC = 2
} nc_dynamics;

typedef struct nc_graph nc_graph;

NC_API const char* nc_version(void);
NC_API const char* nc_last_error(void);
NC_API void nc_string_free(char* s);

/* Worker threads for metric kernels and ensembles (process-wide). */
NC_API void nc_set_thread_count(int threads);

/* Graph lifecycle --------------------------------------------------------- */

/* duplicates_collapsed may be NULL. */
NC_API nc_status nc_graph_load_edge_list(const char* path, nc_graph** out,
                                         size_t* duplicates_collapsed);
NC_API nc_status nc_graph_parse_edge_list(const char* text, nc_graph** out,
                                          size_t* duplicates_collapsed);
/* m0 = 0 selects the default core size m + 1. */
NC_API nc_status nc_graph_generate_ba(uint64_t n, uint64_t m, uint64_t m0, uint64_t seed,
                                      nc_graph** out);
NC_API nc_status nc_graph_generate_er(uint64_t n, uint64_t edges, uint64_t seed, nc_graph** out);
NC_API void nc_graph_free(nc_graph* g);

NC_API size_t nc_graph_node_count(const nc_graph* g);
NC_API size_t nc_graph_edge_count(const nc_graph* g);
NC_API nc_status nc_graph_degree(const nc_graph* g, size_t node, size_t* out);
NC_API nc_status nc_graph_write_edge_list(const nc_graph* g, const char* path);
NC_API nc_status nc_graph_to_edge_list(const nc_graph* g, char** out);

/* Analysis ---------------------------------------------------------------- */

/* JSON: graph summary plus per-node statistics. CSV: per-node table. */
NC_API nc_status nc_analyze(const nc_graph* g, nc_format format, char** out);

/* Power-law fit as JSON. */
NC_API nc_status nc_fit(const nc_graph* g, char** out);

/* Degree distribution of g against a same-size random graph drawn with
 * `seed`, as CSV (k,p_observed,p_reference). */
NC_API nc_status nc_fit_comparison(const nc_graph* g, uint64_t seed, char** out);

typedef struct nc_resilience_options {
  nc_strategy strategy;
  /* Random-error runs; 1 gives a single trace, more give an ensemble. */
  size_t seeds;
  uint64_t base_seed;
  double record_every;
} nc_resilience_options;

NC_API void nc_resilience_options_init(nc_resilience_options* options);
NC_API nc_status nc_resilience(const nc_graph* g, const nc_resilience_options* options,
                               char** csv_out);

typedef struct nc_sync_options {
  double coupling;
  nc_dynamics dynamics;
  double dynamics_parameter;
  size_t state_dim;
  size_t intra_dim;
  double dt;
  double t_max;
  double tolerance;
  size_t record_stride;
  /* Initial states are uniform in [0, 1) drawn from this seed. */
  uint64_t seed;
  /* Nonzero: include per-node state columns. */
  int full;
} nc_sync_options;

NC_API void nc_sync_options_init(nc_sync_options* options);
NC_API nc_status nc_sync_simulate(const nc_graph* g, const nc_sync_options* options,
                                  char** csv_out);
/* closeness_threshold < 0 selects the default 0.1 * max(1, mean degree). */
NC_API nc_status nc_sync_spectral(const nc_graph* g, double closeness_threshold, char** json_out);

/* Fixture and pipeline ---------------------------------------------------- */

/* all_passed receives 1 when every check passes. A failed check returns
 * NC_ERR_VALIDATION with json_out still filled in. */
NC_API nc_status nc_validate_fixture(const char* path, char** json_out, int* all_passed);

/* deterministic != 0 omits the timestamp regardless of the config. */
NC_API nc_status nc_pipeline_run(const char* config_json, int deterministic, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* NETCHOR_H */
