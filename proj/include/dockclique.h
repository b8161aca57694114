/* dockclique: max-weight-clique docking graphs solved with simulated QAOA.
 *
 * C API over the C++ core. All functions return DC_OK on success; on failure
 * they return a status code and leave a human-readable message retrievable
 * with dc_last_error() (thread-local, valid until the next failing call on
 * the same thread). Handles are opaque and must be released with the
 * matching *_free function.
 */
#ifndef DOCKCLIQUE_H
#define DOCKCLIQUE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dc_status {
  DC_OK = 0,
  DC_ERR_INVALID_ARGUMENT = 1,
  DC_ERR_PARSE = 2,
  DC_ERR_VALIDATION = 3,
  DC_ERR_RESOURCE = 4,
  DC_ERR_IO = 5,
  DC_ERR_NUMERIC = 6,
  DC_ERR_INTERNAL = 7
} dc_status;

typedef struct dc_instance dc_instance;
typedef struct dc_graph dc_graph;
typedef struct dc_experiment dc_experiment;

const char* dc_version(void);
const char* dc_last_error(void);

/* Dense-simulation size limit (DOCKCLIQUE_QUBIT_CAP overrides the default
 * of 26). */
int dc_qubit_cap(void);

/* ---- pharmacophore instances ------------------------------------------- */

dc_status dc_instance_load(const char* path, dc_instance** out);
dc_status dc_instance_save(const dc_instance* instance, const char* path);
void dc_instance_free(dc_instance* instance);
dc_status dc_instance_counts(const dc_instance* instance, int* pocket_count,
                             int* ligand_count);

/* ---- docking graphs ----------------------------------------------------- */

typedef enum dc_edge_rule {
  DC_EDGE_RULE_TAU_BUFFER = 0, /* edge iff |d_ligand - d_pocket| <= 2*value */
  DC_EDGE_RULE_DELTA_SUM = 1   /* edge iff d_pocket + d_ligand <= value */
} dc_edge_rule;

dc_status dc_graph_from_instance(const dc_instance* instance, dc_edge_rule rule,
                                 double value, dc_graph** out);
/* planted_clique = 0 plants nothing; otherwise the k-subset is the unique
 * maximum-weight clique. */
dc_status dc_graph_synthetic(int n, double edge_density, double weight_lo,
                             double weight_hi, int planted_clique,
                             uint64_t seed, dc_graph** out);
dc_status dc_graph_preset(const char* name, dc_graph** out); /* demo14|demo17 */
dc_status dc_graph_load(const char* path, dc_graph** out);
dc_status dc_graph_save(const dc_graph* graph, const char* path);
void dc_graph_free(dc_graph* graph);

int dc_graph_vertex_count(const dc_graph* graph);
int dc_graph_edge_count(const dc_graph* graph);
int dc_graph_adjacent(const dc_graph* graph, int i, int j);
dc_status dc_graph_weights(const dc_graph* graph, double* out, int cap);
/* solution may be NULL (no highlighting). */
dc_status dc_graph_write_dot(const dc_graph* graph, const char* path,
                             const int* solution, int solution_len);
/* Debug dump of the penalized objective over all 2^n bitstrings: raw
 * little-endian 64-bit floats at path, JSON header {n, penalty_magnitude} at
 * path + ".json". */
dc_status dc_graph_write_cost_diagonal(const dc_graph* graph,
                                       double penalty_magnitude,
                                       const char* path);

/* ---- exact classical oracle --------------------------------------------- */

typedef enum dc_oracle_method {
  DC_ORACLE_EXHAUSTIVE = 0,      /* n <= 24 */
  DC_ORACLE_BRANCH_AND_BOUND = 1 /* practical to ~60 */
} dc_oracle_method;

dc_status dc_oracle_solve(const dc_graph* graph, dc_oracle_method method,
                          int* vertices, int cap, int* out_len,
                          double* out_weight, int* out_count_optimal);

/* ---- continuous relaxations --------------------------------------------- */

dc_status dc_relax_linear(const dc_graph* graph, int max_iterations,
                          double* values, int cap, double* objective,
                          int* iterations_used, int* converged);
dc_status dc_relax_quadratic(const dc_graph* graph, double penalty_magnitude,
                             int steps, double step_size, uint64_t seed,
                             double* values, int cap, double* objective,
                             int* iterations_used);

/* ---- experiments --------------------------------------------------------
 * spec_json schema (defaults in parentheses):
 *   {
 *     "graph": {"path": ...} | {"preset": "demo14"|"demo17"}
 *              | {"synthetic": {"n", "edge_density", "weight_lo",
 *                               "weight_hi", "planted_clique", "seed"}},
 *     "penalty": 1.0, "family": "conventional|dc|ws|wsdc" ("conventional"),
 *     "layers": 1, "warm_start": "none|linear|quadratic" ("none"),
 *     "epsilon": 0.25,
 *     "optimizer": {"method": "nelder-mead|spsa", "max_evaluations": 1000,
 *                   "tolerance": 1e-8},
 *     "shots": 8192, "seed": 0, "label": ""
 *   }
 * A warm_start other than "none" upgrades conventional -> ws, dc -> wsdc.
 */
dc_status dc_experiment_create(const char* spec_json, dc_experiment** out);
dc_status dc_experiment_run(dc_experiment* experiment);
/* Writes summary.json, trace.csv, histogram.json, solution.dot (and
 * relaxed.json after warm-started runs) into dir. */
dc_status dc_experiment_write_outputs(const dc_experiment* experiment,
                                      const char* dir);
/* Strings stay owned by the handle and remain valid until it is freed. */
const char* dc_experiment_summary_json(const dc_experiment* experiment);
double dc_experiment_best_value(const dc_experiment* experiment);
int dc_experiment_evaluations(const dc_experiment* experiment);
void dc_experiment_free(dc_experiment* experiment);

/* Runs every spec in the JSON array (all sharing one graph source) with up to
 * `workers` in parallel and writes the aligned cost-per-evaluation CSV,
 * including the trailing oracle_match row, to out_csv. */
dc_status dc_compare(const char* specs_json, const char* out_csv, int workers);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DOCKCLIQUE_H */
